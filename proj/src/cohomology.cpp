#include "cdga/cohomology.hpp"

#include <map>

#include "cdga/errors.hpp"

namespace cdga {

bool CohomologyClass::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

SparseMatrix differential_matrix(const Cdga& c, int k) {
    const auto& alg = c.algebra();
    auto dom = basis_of_degree(*alg, k);
    auto cod = basis_of_degree(*alg, k + 1);
    std::map<Monomial, int, MonomialOrder> row_of;
    for (int i = 0; i < (int)cod.size(); ++i) row_of.emplace(cod[i], i);

    SparseMatrix m((int)cod.size(), (int)dom.size());
    for (int j = 0; j < (int)dom.size(); ++j) {
        Element img = c.d(Element::monomial(alg, dom[j], 1));
        for (const auto& [mono, coeff] : img.terms()) {
            auto it = row_of.find(mono);
            if (it == row_of.end())
                throw internal_error("differential image escapes the expected degree");
            m.set(it->second, j, coeff);
        }
    }
    return m;
}

CohomologySpace::CohomologySpace(Cdga cdga, int degree)
    : cdga_(std::move(cdga)),
      degree_(degree),
      basis_(basis_of_degree(*cdga_.algebra(), degree)),
      cocycles_((int)basis_.size()),
      coboundaries_((int)basis_.size()) {
    if (degree < 0) throw precondition_error("cohomology degree must be non-negative");
    const int n = (int)basis_.size();
    cocycles_ = kernel_basis(differential_matrix(cdga_, degree));
    coboundaries_ = degree == 0 ? Subspace(n)
                                : image_basis(differential_matrix(cdga_, degree - 1));
    quot_.emplace(cocycles_, coboundaries_);
    for (const auto& r : quot_->representatives()) reps_.push_back(from_vec(r));
}

Vec CohomologySpace::to_vec(const Element& e) const {
    if (!same_algebra(e.algebra(), cdga_.algebra()))
        throw precondition_error("element belongs to a different algebra");
    std::map<Monomial, int, MonomialOrder> idx;
    for (int i = 0; i < (int)basis_.size(); ++i) idx.emplace(basis_[i], i);
    Vec v(basis_.size(), Scalar(0));
    for (const auto& [mono, coeff] : e.terms()) {
        auto it = idx.find(mono);
        if (it == idx.end())
            throw precondition_error("element is not homogeneous of the expected degree");
        v[it->second] = coeff;
    }
    return v;
}

Element CohomologySpace::from_vec(const Vec& v) const {
    if (v.size() != basis_.size())
        throw precondition_error("coordinate vector has the wrong length");
    Element out = Element::zero(cdga_.algebra());
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out = out + Element::monomial(cdga_.algebra(), basis_[i], v[i]);
    return out;
}

CohomologyClass CohomologySpace::class_of(const Element& z) const {
    Vec v = to_vec(z);
    if (!cdga_.d(z).is_zero())
        throw precondition_error("element is not closed");
    auto coords = quot_->coordinates(v);
    if (!coords)
        throw internal_error("closed element missing from the cocycle space");
    CohomologyClass out;
    out.degree = degree_;
    out.coords = *coords;
    out.representative = from_vec(quot_->lift(out.coords));
    return out;
}

Element CohomologySpace::lift(const Vec& coords) const {
    return from_vec(quot_->lift(coords));
}

CohomologySpace cohomology(const Cdga& c, int degree) {
    return CohomologySpace(c, degree);
}

std::vector<int> betti(const Cdga& c, int max_degree) {
    std::vector<int> out;
    for (int k = 0; k <= max_degree; ++k) out.push_back(cohomology(c, k).dim());
    return out;
}

std::optional<Element> exactness_witness(const Cdga& c, const Element& z) {
    if (!c.d(z).is_zero())
        throw precondition_error("exactness is only defined for closed elements");
    if (z.is_zero()) return Element::zero(c.algebra());
    auto deg = z.homogeneous_degree();
    if (!deg)
        throw precondition_error("element is not homogeneous");
    if (*deg == 0) return std::nullopt; // nonzero constants are never exact
    CohomologySpace target(c, *deg);
    auto sol = solve_in_image(differential_matrix(c, *deg - 1), target.to_vec(z));
    if (!sol) return std::nullopt;
    CohomologySpace source(c, *deg - 1);
    return source.from_vec(*sol);
}

CohomologyClass cup(const CohomologySpace& hp, const CohomologySpace& hq,
                    const CohomologyClass& a, const CohomologyClass& b) {
    if (!(hp.complex() == hq.complex()))
        throw precondition_error("cup product needs classes over the same complex");
    Element prod = hp.lift(a.coords) * hq.lift(b.coords);
    CohomologySpace out(hp.complex(), hp.degree() + hq.degree());
    return out.class_of(prod);
}

int cup_map_rank(const Cdga& c, const Element& omega, int p) {
    if (!c.d(omega).is_zero())
        throw precondition_error("multiplier class must be closed");
    auto q = omega.homogeneous_degree();
    if (!q)
        throw precondition_error("multiplier class must be homogeneous");
    CohomologySpace hp(c, p), ht(c, p + *q);
    std::vector<Vec> cols;
    for (const auto& r : hp.representatives())
        cols.push_back(ht.class_of(omega * r).coords);
    return Subspace::span(ht.dim(), cols).dim();
}

} // namespace cdga
