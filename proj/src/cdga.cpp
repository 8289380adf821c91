#include "cdga/cdga.hpp"

#include <algorithm>
#include <sstream>

#include "cdga/errors.hpp"

namespace cdga {

Element Cdga::d(const Element& e) const {
    if (!same_algebra(e.algebra(), alg_) && !e.is_zero())
        throw precondition_error("element belongs to a different algebra");
    Element out(alg_);
    for (const auto& [m, coeff] : e.terms()) {
        // expand the monomial into its word and differentiate one letter at a time
        std::vector<std::size_t> word;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (std::uint32_t r = 0; r < m.exps[i]; ++r) word.push_back(i);
        int prefix_degree = 0;
        for (std::size_t k = 0; k < word.size(); ++k) {
            const Element& dg = dgen_[word[k]];
            if (!dg.is_zero()) {
                std::vector<std::uint32_t> pre(alg_->size(), 0), suf(alg_->size(), 0);
                for (std::size_t j = 0; j < k; ++j) ++pre[word[j]];
                for (std::size_t j = k + 1; j < word.size(); ++j) ++suf[word[j]];
                Scalar c = (prefix_degree % 2 == 0) ? coeff : Scalar(-coeff);
                Element term = Element::monomial(alg_, make_monomial(*alg_, std::move(pre)), c) * dg *
                               Element::monomial(alg_, make_monomial(*alg_, std::move(suf)));
                out = out + term;
            }
            prefix_degree += alg_->degree(word[k]);
        }
    }
    return out;
}

bool Cdga::operator==(const Cdga& o) const {
    if (!same_algebra(alg_, o.alg_)) return false;
    return dgen_ == o.dgen_;
}

ValidationOutcome validate(const AlgebraPtr& alg, const DifferentialSpec& spec) {
    std::vector<Element> dgen(alg->size(), Element::zero(alg));
    std::vector<DifferentialIssue> issues;
    for (const auto& [name, value] : spec.by_generator) {
        int idx = alg->index_of(name);
        if (idx < 0) {
            issues.push_back({name, "unknown generator", Element::zero(alg)});
            continue;
        }
        if (!value.is_zero() && !same_algebra(value.algebra(), alg)) {
            issues.push_back({name, "differential value belongs to a different algebra",
                              Element::zero(alg)});
            continue;
        }
        if (!value.is_homogeneous(alg->degree(idx) + 1)) {
            issues.push_back({name,
                              "differential must be homogeneous of degree " +
                                  std::to_string(alg->degree(idx) + 1),
                              value});
            continue;
        }
        dgen[static_cast<std::size_t>(idx)] = value;
    }
    if (!issues.empty()) return {std::nullopt, std::move(issues)};

    Cdga candidate(alg, std::move(dgen));
    for (std::size_t i = 0; i < alg->size(); ++i) {
        Element dd = candidate.d(candidate.d_generator(i));
        if (!dd.is_zero())
            issues.push_back({alg->name(i), "d(d g) is nonzero", dd});
    }
    if (!issues.empty()) return {std::nullopt, std::move(issues)};
    return {std::move(candidate), {}};
}

Cdga make_cdga(const AlgebraPtr& alg, const DifferentialSpec& spec) {
    ValidationOutcome out = validate(alg, spec);
    if (out.ok()) return *std::move(out.cdga);
    std::ostringstream os;
    os << "differential rejected:";
    for (const auto& issue : out.issues) {
        os << " [" << issue.generator << "] " << issue.message;
        if (!issue.residue.is_zero()) os << " (residue " << issue.residue.str() << ")";
        os << ";";
    }
    throw validation_error(os.str());
}

Scalar StructureConstants::bracket_coeff(int i, int j, int k) const {
    if (i == j) return Scalar(0);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = c.find({i, j, k});
    if (it == c.end()) return Scalar(0);
    return flip ? Scalar(-it->second) : it->second;
}

std::optional<JacobiFailure> check_jacobi(const StructureConstants& sc) {
    const int n = sc.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar s(0);
                    for (int m = 0; m < n; ++m) {
                        s += sc.bracket_coeff(i, j, m) * sc.bracket_coeff(m, k, l);
                        s += sc.bracket_coeff(j, k, m) * sc.bracket_coeff(m, i, l);
                        s += sc.bracket_coeff(k, i, m) * sc.bracket_coeff(m, j, l);
                    }
                    if (s != 0) return JacobiFailure{i, j, k};
                }
    return std::nullopt;
}

Cdga chevalley_eilenberg(const StructureConstants& sc) {
    if (auto bad = check_jacobi(sc)) {
        std::ostringstream os;
        os << "structure constants violate the Jacobi identity on generators ("
           << bad->i + 1 << ", " << bad->j + 1 << ", " << bad->k + 1 << ")";
        throw validation_error(os.str());
    }
    std::vector<Generator> gens;
    gens.reserve(sc.n);
    for (int i = 1; i <= sc.n; ++i) gens.push_back({"x" + std::to_string(i), 1});
    AlgebraPtr alg = Algebra::make(std::move(gens));
    DifferentialSpec spec;
    for (int k = 0; k < sc.n; ++k) {
        Element dk = Element::zero(alg);
        for (int i = 0; i < sc.n; ++i)
            for (int j = i + 1; j < sc.n; ++j) {
                Scalar cijk = sc.bracket_coeff(i, j, k);
                if (cijk == 0) continue;
                dk = dk + (Scalar(-cijk) *
                           (Element::generator(alg, i) * Element::generator(alg, j)));
            }
        if (!dk.is_zero()) spec.by_generator.emplace(alg->name(k), dk);
    }
    // Jacobi passed, so validation cannot fail here; make_cdga keeps the proof
    return make_cdga(alg, spec);
}

namespace {

Cdga build_g6_15_m1() {
    std::vector<Generator> gens;
    for (int i = 1; i <= 6; ++i) gens.push_back({"x" + std::to_string(i), 1});
    AlgebraPtr alg = Algebra::make(std::move(gens));
    auto x = [&](int i) { return Element::generator(alg, static_cast<std::size_t>(i - 1)); };
    DifferentialSpec spec;
    spec.by_generator.emplace("x1", -(x(2) * x(3)));
    spec.by_generator.emplace("x2", -(x(2) * x(6)));
    spec.by_generator.emplace("x3", x(3) * x(6));
    spec.by_generator.emplace("x4", -(x(2) * x(6)) - x(4) * x(6));
    spec.by_generator.emplace("x5", -(x(3) * x(6)) + x(5) * x(6));
    return make_cdga(alg, spec);
}

Cdga build_abelian(int n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({"x" + std::to_string(i), 1});
    return make_cdga(Algebra::make(std::move(gens)), DifferentialSpec{});
}

Cdga build_heisenberg3() {
    StructureConstants sc;
    sc.n = 3;
    sc.c[{0, 1, 2}] = 1; // [x1, x2] = x3
    return chevalley_eilenberg(sc);
}

Cdga build_s2_model() {
    AlgebraPtr alg = Algebra::make({{"u", 2}, {"v", 3}});
    Element u = Element::generator(alg, 0);
    DifferentialSpec spec;
    spec.by_generator.emplace("v", u * u);
    return make_cdga(alg, spec);
}

Cdga build_circle() {
    return make_cdga(Algebra::make({{"t", 1}}), DifferentialSpec{});
}

std::optional<int> abelian_rank(const std::string& name) {
    std::string digits;
    if (name.rfind("abelian(", 0) == 0 && name.back() == ')')
        digits = name.substr(8, name.size() - 9);
    else if (name.rfind("abelian", 0) == 0)
        digits = name.substr(7);
    else
        return std::nullopt;
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        return std::nullopt;
    int n = 0;
    for (char ch : digits) {
        n = n * 10 + (ch - '0');
        if (n > 16) return std::nullopt; // keep desk scale
    }
    if (n == 0) return std::nullopt;
    return n;
}

} // namespace

std::optional<Cdga> catalog(const std::string& name) {
    if (name == "g6_15_m1") return build_g6_15_m1();
    if (name == "heisenberg3") return build_heisenberg3();
    if (name == "s2_model") return build_s2_model();
    if (name == "circle") return build_circle();
    if (auto n = abelian_rank(name)) return build_abelian(*n);
    return std::nullopt;
}

std::vector<std::string> catalog_names() {
    return {"g6_15_m1", "abelian3", "heisenberg3", "s2_model", "circle"};
}

} // namespace cdga
