#include "cdga/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "cdga/errors.hpp"

namespace cdga {

std::optional<Scalar> parse_scalar(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Scalar(boost::multiprecision::cpp_int(text));
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        boost::multiprecision::cpp_int d(den);
        if (d == 0) return std::nullopt;
        return Scalar(boost::multiprecision::cpp_int(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Algebra::Algebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1)
            throw precondition_error("generator '" + gens_[i].name + "' must have degree >= 1");
        if (!by_name_.emplace(gens_[i].name, i).second)
            throw precondition_error("duplicate generator name '" + gens_[i].name + "'");
    }
}

AlgebraPtr Algebra::make(std::vector<Generator> gens) {
    return AlgebraPtr(new Algebra(std::move(gens)));
}

int Algebra::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : static_cast<int>(it->second);
}

bool Algebra::gens_same(const Algebra& o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree)
            return false;
    return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    // first difference: larger exponent sorts earlier
    const std::size_t n = std::min(a.exps.size(), b.exps.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return a.exps.size() < b.exps.size();
}

Monomial make_monomial(const Algebra& alg, std::vector<std::uint32_t> exps) {
    if (exps.size() != alg.size())
        throw precondition_error("exponent vector length does not match generator count");
    Monomial m{std::move(exps), 0};
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] > 1 && alg.odd(i))
            throw precondition_error("odd generator '" + alg.name(i) + "' cannot carry exponent > 1");
        m.degree += static_cast<int>(m.exps[i]) * alg.degree(i);
    }
    return m;
}

Monomial unit_monomial(const Algebra& alg) {
    return Monomial{std::vector<std::uint32_t>(alg.size(), 0), 0};
}

Element::Element(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Element Element::unit(AlgebraPtr alg) {
    Element e(alg);
    e.terms_.emplace(unit_monomial(*alg), Scalar(1));
    return e;
}

Element Element::generator(AlgebraPtr alg, std::size_t index) {
    std::vector<std::uint32_t> exps(alg->size(), 0);
    exps.at(index) = 1;
    return monomial(alg, make_monomial(*alg, std::move(exps)));
}

Element Element::monomial(AlgebraPtr alg, Monomial m, Scalar coeff) {
    Element e(alg);
    if (coeff != 0) e.terms_.emplace(std::move(m), std::move(coeff));
    return e;
}

void Element::require_same_algebra(const Element& o) const {
    if (!same_algebra(alg_, o.alg_))
        throw precondition_error("elements belong to different algebras");
}

std::optional<int> Element::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int k = terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
        if (m.degree != k) return std::nullopt;
    return k;
}

bool Element::is_homogeneous(int k) const {
    for (const auto& [m, c] : terms_)
        if (m.degree != k) return false;
    return true;
}

Element Element::operator+(const Element& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    require_same_algebra(o);
    Element r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = r.terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Element Element::operator-() const {
    Element r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Scalar& c) const {
    Element r(alg_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Element operator*(const Scalar& c, const Element& e) { return e.scaled(c); }

std::optional<std::pair<int, Monomial>> monomial_product(const Algebra& alg,
                                                         const Monomial& a,
                                                         const Monomial& b) {
    long inversions = 0;
    // for each odd generator of b, count odd generators of a with larger index
    for (std::size_t g = 0; g < alg.size(); ++g) {
        if (!b.exps[g]) continue;
        if (!alg.odd(g)) continue;
        if (a.exps[g]) return std::nullopt; // odd square
        for (std::size_t h = g + 1; h < alg.size(); ++h)
            if (alg.odd(h) && a.exps[h]) ++inversions;
    }
    std::vector<std::uint32_t> exps(alg.size());
    for (std::size_t i = 0; i < alg.size(); ++i) exps[i] = a.exps[i] + b.exps[i];
    Monomial m{std::move(exps), a.degree + b.degree};
    return std::make_pair(inversions % 2 == 0 ? 1 : -1, std::move(m));
}

Element Element::operator*(const Element& o) const {
    require_same_algebra(o);
    Element r(alg_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = monomial_product(*alg_, ma, mb);
            if (!prod) continue;
            Scalar c = ca * cb;
            if (prod->first < 0) c = -c;
            auto [it, fresh] = r.terms_.emplace(prod->second, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool Element::operator==(const Element& o) const {
    if (is_zero() && o.is_zero()) return true;
    return same_algebra(alg_, o.alg_) && terms_ == o.terms_;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar a = c < 0 ? Scalar(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string body;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (std::uint32_t r = 0; r < m.exps[i]; ++r) {
                if (!body.empty()) body += "*";
                body += alg_->name(i);
            }
        if (body.empty()) {
            os << to_string(a);
        } else if (a == 1) {
            os << body;
        } else {
            os << to_string(a) << "*" << body;
        }
    }
    return os.str();
}

std::optional<std::pair<int, Monomial>> normalize_word(const Algebra& alg,
                                                       const std::vector<std::size_t>& word) {
    auto acc = std::make_pair(1, unit_monomial(alg));
    for (std::size_t idx : word) {
        if (idx >= alg.size()) throw precondition_error("generator index out of range");
        std::vector<std::uint32_t> exps(alg.size(), 0);
        exps[idx] = 1;
        Monomial g{std::move(exps), alg.degree(idx)};
        auto next = monomial_product(alg, acc.second, g);
        if (!next) return std::nullopt;
        acc = {acc.first * next->first, std::move(next->second)};
    }
    return acc;
}

std::vector<Monomial> basis_of_degree(const Algebra& alg, int k) {
    if (k < 0) throw precondition_error("degree must be nonnegative");
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(alg.size(), 0);
    // descend with the largest exponent first so output lands in canonical order
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == alg.size()) {
            if (rem == 0) out.push_back(make_monomial(alg, cur));
            return;
        }
        int cap = rem / alg.degree(i);
        if (alg.odd(i)) cap = std::min(cap, 1);
        for (int e = cap; e >= 0; --e) {
            cur[i] = static_cast<std::uint32_t>(e);
            self(self, i + 1, rem - e * alg.degree(i));
        }
        cur[i] = 0;
    };
    rec(rec, 0, k);
    return out;
}

} // namespace cdga
