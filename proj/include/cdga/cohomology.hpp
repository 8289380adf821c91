#pragma once
#include <optional>
#include <vector>

#include "cdga/cdga.hpp"
#include "cdga/linalg.hpp"

namespace cdga {

struct CohomologyClass {
    int degree = 0;
    Vec coords;            // in the canonical representative basis of that degree
    Element representative;
    bool is_zero() const;
};

// H^k of a Cdga with canonical cocycle representatives. The monomial basis of
// degree k fixes the ambient coordinates; representatives are the echelon
// basis of cocycles reduced modulo coboundaries.
class CohomologySpace {
public:
    CohomologySpace(Cdga cdga, int degree);

    int degree() const { return degree_; }
    int dim() const { return quot_->dim(); }
    const Cdga& complex() const { return cdga_; }
    const std::vector<Monomial>& monomials() const { return basis_; }
    const Subspace& cocycles() const { return cocycles_; }
    const Subspace& coboundaries() const { return coboundaries_; }
    const std::vector<Element>& representatives() const { return reps_; }

    Vec to_vec(const Element& e) const;       // degree-k element -> coordinates
    Element from_vec(const Vec& v) const;

    // Class of a cocycle; throws precondition_error when d(z) != 0 or the
    // degree is wrong. Never projects: a non-cocycle is an error.
    CohomologyClass class_of(const Element& z) const;
    Element lift(const Vec& coords) const;    // coords -> canonical cocycle

private:
    Cdga cdga_;
    int degree_;
    std::vector<Monomial> basis_;
    Subspace cocycles_, coboundaries_;
    std::optional<QuotientSpace> quot_;
    std::vector<Element> reps_;
};

CohomologySpace cohomology(const Cdga& c, int degree);
std::vector<int> betti(const Cdga& c, int max_degree);

// Matrix of d from degree k to k+1 in the canonical monomial bases.
SparseMatrix differential_matrix(const Cdga& c, int k);

// For a closed element: a canonical primitive if it is exact, else nullopt.
// Throws precondition_error when the input is not closed.
std::optional<Element> exactness_witness(const Cdga& c, const Element& z);

// [a] cup [b] inside H^{p+q}. Spaces must belong to the same complex.
CohomologyClass cup(const CohomologySpace& hp, const CohomologySpace& hq,
                    const CohomologyClass& a, const CohomologyClass& b);

// Rank of the multiplication map [omega] cup - : H^p -> H^{p + |omega|}.
int cup_map_rank(const Cdga& c, const Element& omega, int p);

} // namespace cdga
