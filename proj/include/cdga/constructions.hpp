#pragma once
#include <string>
#include <vector>

#include "cdga/cohomology.hpp"

namespace cdga {

struct Extension;
Extension circle_extension(const Cdga& base, const Element& omega);

// Total complex of an algebraic circle bundle: the base algebra plus one new
// degree-1 generator t with d t = omega. The new generator is named "t",
// falling back to "t_2", "t_3", ... on collision. omega must be closed and
// homogeneous of degree 2.
struct Extension {
    Cdga total;
    std::string fiber_name;
    Element pullback(const Element& base_element) const; // rewrite over total

private:
    friend Extension circle_extension(const Cdga&, const Element&);
    Extension(Cdga t, std::string name, AlgebraPtr base)
        : total(std::move(t)), fiber_name(std::move(name)), base_(std::move(base)) {}
    AlgebraPtr base_;
};

struct TensorProduct;
TensorProduct tensor_product(const Cdga& left, const Cdga& right);

// Tensor product of two complexes: generators of the right factor are
// appended after the left (renamed with a _2, _3, ... suffix on collision)
// and both differentials are transported.
struct TensorProduct {
    Cdga total;
    std::vector<std::string> right_names; // names used for the right factor
    Element include_left(const Element& e) const;
    Element include_right(const Element& e) const;

private:
    friend TensorProduct tensor_product(const Cdga&, const Cdga&);
    TensorProduct(Cdga t, std::vector<std::string> names, AlgebraPtr l, AlgebraPtr r)
        : total(std::move(t)), right_names(std::move(names)),
          left_(std::move(l)), right_(std::move(r)) {}
    AlgebraPtr left_, right_;
};

// Two-parameter family lambda (x1 x6 + x2 x5) + mu (x1 x6 - x3 x4) of
// degree-2 elements over an algebra with degree-1 generators x1..x6. The
// family member is symplectic exactly when lambda, mu and lambda + mu are
// all nonzero, which build() enforces.
struct SymplecticClassChoice {
    Scalar lambda{1}, mu{1};
    Element build(const Cdga& c) const;
};

struct SymplecticCheck {
    bool closed = false;
    bool nondegenerate = false; // top power nonzero
    Element top_power;
};

// Evaluates d omega and omega^half_dim for a homogeneous degree-2 element.
SymplecticCheck symplectic_check(const Cdga& c, const Element& omega,
                                 int half_dim);

// Cohomology of the circle extension against the long exact sequence of the
// base: b_k(E) = (b_k - r_{k-2}) + (b_{k-1} - r_{k-1}) with r_p the rank of
// cupping with omega from degree p. All vectors run over degrees
// 0..max_degree; a mismatch between the direct and predicted Betti numbers
// is an internal error.
struct GysinReport {
    Extension ext;
    std::vector<int> base_betti;
    std::vector<int> cup_ranks;
    std::vector<int> extension_betti;
    std::vector<int> predicted_betti;
    std::vector<Subspace> pullback_kernels; // ker of H^k(base) -> H^k(E)
    bool consistent = true;
};

GysinReport gysin_report(const Cdga& base, const Element& omega,
                         int max_degree);

} // namespace cdga
