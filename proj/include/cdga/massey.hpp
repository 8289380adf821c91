#pragma once
#include <array>
#include <vector>

#include "cdga/cohomology.hpp"

namespace cdga {

struct MasseyResult {
    std::array<int, 3> degrees{}; // |a1|, |a2|, |a3|
    Element xi12, xi23;           // canonical primitives of a1 a2 and a2 a3
    Element representative;       // canonical cocycle for the computed value
    Vec coords;                   // its coordinates in H^t, t = |a1|+|a2|+|a3|-1
    Subspace indeterminacy;       // [a1] H^{t-|a1|} + H^{t-|a3|} [a3], in H^t coords
    bool vanishes = false;        // value lies inside the indeterminacy

    MasseyResult() : indeterminacy(0) {}
};

// Triple product <[a1],[a2],[a3]>. Inputs must be closed homogeneous elements
// with [a1][a2] = 0 and [a2][a3] = 0; otherwise precondition_error. Primitives
// are the canonical solutions (free variables zero), and the value uses
// xi12 a3 + (-1)^{|a1|+1} a1 xi23.
MasseyResult triple_massey(const Cdga& c, const Element& a1, const Element& a2,
                           const Element& a3);

struct AMasseyResult {
    int value_degree = 0;
    std::array<Element, 3> primitives; // xi_i with d xi_i = a b_i
    Element representative;
    Vec coords;
    Subspace denominator; // in H^{value_degree} coordinates
    bool vanishes = false;

    AMasseyResult() : denominator(0) {}
};

// Product <a; b1, b2, b3> for closed even-degree a, b_i with [a][b_i] = 0:
// the class of xi1 xi2 b3 + xi2 xi3 b1 + xi3 xi1 b2 taken modulo the ideal
// generated by every value of the triple products <b_i, a, b_j>, i < j.
// max_degree caps the value degree: precondition_error when it lies below.
AMasseyResult a_massey(const Cdga& c, const Element& a, const Element& b1,
                       const Element& b2, const Element& b3, int max_degree);

struct ScanHit {
    Vec a1, a2, a3; // coordinates in the three cohomology spaces
    MasseyResult result;
};

// All essentially distinct non-vanishing triple products with |a_i| = p_i:
// a1, a2 run over the canonical basis classes with [a1][a2] = 0, and a3 runs
// over an echelon basis of ker([a2] cup - : H^{p3} -> H^{p2+p3}). Hits are
// deduplicated by value coordinates.
std::vector<ScanHit> massey_scan(const Cdga& c, int p1, int p2, int p3);

} // namespace cdga
