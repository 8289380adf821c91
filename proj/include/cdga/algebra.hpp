#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdga/scalar.hpp"

namespace cdga {

struct Generator {
    std::string name;
    int degree = 1; // >= 1
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Free graded-commutative algebra over Q on finitely many named generators.
// Odd-degree generators square to zero, even-degree generators are polynomial.
class Algebra {
public:
    static AlgebraPtr make(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    int degree(std::size_t i) const { return gens_[i].degree; }
    bool odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
    const std::string& name(std::size_t i) const { return gens_[i].name; }
    // -1 when no generator has that name
    int index_of(const std::string& name) const;

    bool operator==(const Algebra& other) const { return gens_same(other); }

private:
    explicit Algebra(std::vector<Generator> gens);
    bool gens_same(const Algebra& o) const;
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> by_name_;
};

// Two algebra handles denote the same algebra if they are the same object or
// structurally equal (same generator names and degrees, same order).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Exponent vector over the generators of one algebra, with the total degree
// cached. Exponents of odd generators are 0 or 1.
struct Monomial {
    std::vector<std::uint32_t> exps;
    int degree = 0;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Canonical order: by total degree, then at the first generator where the
// exponents differ the larger exponent comes first. For squarefree monomials
// over degree-1 generators this is plain lexicographic order on index words
// (x1*x2 < x1*x3 < ... < x5*x6).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial make_monomial(const Algebra& alg, std::vector<std::uint32_t> exps);
Monomial unit_monomial(const Algebra& alg);

// Finite Q-linear combination of monomials of one algebra. Not required to
// be homogeneous. Immutable in spirit: all operations return new values.
class Element {
public:
    using Terms = std::map<Monomial, Scalar, MonomialOrder>;

    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
    Element(AlgebraPtr alg, Terms terms);

    static Element zero(AlgebraPtr alg) { return Element(std::move(alg)); }
    static Element unit(AlgebraPtr alg);
    static Element generator(AlgebraPtr alg, std::size_t index);
    static Element monomial(AlgebraPtr alg, Monomial m, Scalar coeff = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree of a nonzero homogeneous element; nullopt for 0 or mixed terms.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous(int k) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const; // Koszul-signed product
    Element scaled(const Scalar& c) const;

    bool operator==(const Element& o) const;

    std::string str() const;

private:
    void require_same_algebra(const Element& o) const;
    AlgebraPtr alg_;
    Terms terms_;
};

Element operator*(const Scalar& c, const Element& e);

// Sorts a word of generator indices into canonical form. Result is the sign
// picked up from transposing odd generators past each other, or nullopt when
// an odd generator repeats (the product is zero).
std::optional<std::pair<int, Monomial>> normalize_word(const Algebra& alg,
                                                       const std::vector<std::size_t>& word);

// Product of two normalized monomials: (sign, exponent sum), nullopt if zero.
std::optional<std::pair<int, Monomial>> monomial_product(const Algebra& alg,
                                                         const Monomial& a,
                                                         const Monomial& b);

// All monomials of total degree k, in canonical order.
std::vector<Monomial> basis_of_degree(const Algebra& alg, int k);

} // namespace cdga
