#pragma once
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cdga/algebra.hpp"

namespace cdga {

// Differential assignments for some or all generators; omitted generators get
// d = 0. Values are checked by validate().
struct DifferentialSpec {
    std::map<std::string, Element> by_generator;
};

struct DifferentialIssue {
    std::string generator;
    std::string message;
    Element residue; // the offending value, e.g. d(d g) when it is nonzero
};

struct ValidationOutcome;

// Free graded-commutative algebra together with a validated differential.
// Instances only come out of validate(), the catalog, or constructions, so a
// Cdga in hand always satisfies d(d g) = 0 and |d g| = |g| + 1.
class Cdga {
public:
    const AlgebraPtr& algebra() const { return alg_; }
    const Element& d_generator(std::size_t i) const { return dgen_[i]; }

    // Leibniz extension of the generator table to arbitrary elements.
    Element d(const Element& e) const;

    bool operator==(const Cdga& o) const;

private:
    friend ValidationOutcome validate(const AlgebraPtr&, const DifferentialSpec&);
    Cdga(AlgebraPtr alg, std::vector<Element> dgen)
        : alg_(std::move(alg)), dgen_(std::move(dgen)) {}
    AlgebraPtr alg_;
    std::vector<Element> dgen_;
};

struct ValidationOutcome {
    std::optional<Cdga> cdga;
    std::vector<DifferentialIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Checks degree homogeneity (|d g| = |g| + 1) and d over d = 0 on every
// generator. On failure the outcome lists one issue per offending generator
// with the nonzero residue.
ValidationOutcome validate(const AlgebraPtr& alg, const DifferentialSpec& spec);

// Convenience that throws validation_error listing the issues.
Cdga make_cdga(const AlgebraPtr& alg, const DifferentialSpec& spec);

// Antisymmetric structure constants of a Lie algebra on n generators,
// stored for i < j only: [e_i, e_j] = sum_k c[{i,j,k}] e_k (0-based).
struct StructureConstants {
    int n = 0;
    std::map<std::tuple<int, int, int>, Scalar> c;

    Scalar bracket_coeff(int i, int j, int k) const; // any i, j
};

struct JacobiFailure {
    int i, j, k; // 0-based triple violating the Jacobi identity
};

std::optional<JacobiFailure> check_jacobi(const StructureConstants& sc);

// Cochain complex of a Lie algebra: generators x1..xn in degree 1 with
// d x_k = -sum_{i<j} c_ij^k x_i x_j. Throws validation_error naming the
// violating triple when the constants fail the Jacobi identity.
Cdga chevalley_eilenberg(const StructureConstants& sc);

// Built-in examples: "g6_15_m1", "abelianN" (also "abelian(N)"),
// "heisenberg3", "s2_model", "circle". Nullopt for unknown names.
std::optional<Cdga> catalog(const std::string& name);
std::vector<std::string> catalog_names(); // the fixed names, abelian as "abelian3"

} // namespace cdga
