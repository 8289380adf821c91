#include "cdga/constructions.hpp"

#include "cdga/errors.hpp"

namespace cdga {

namespace {

// Rewrites an element over a larger algebra whose generators contain the
// source generators as a contiguous, order-preserving block at `offset`.
// Order preservation means no Koszul signs appear.
Element transport(const Element& e, const AlgebraPtr& target, std::size_t offset) {
    Element out = Element::zero(target);
    for (const auto& [mono, coeff] : e.terms()) {
        std::vector<std::uint32_t> exps(target->size(), 0);
        for (std::size_t i = 0; i < mono.exps.size(); ++i)
            exps[i + offset] = mono.exps[i];
        out = out + Element::monomial(target, make_monomial(*target, std::move(exps)), coeff);
    }
    return out;
}

bool name_taken(const std::vector<Generator>& gens, const std::string& n) {
    for (const auto& g : gens)
        if (g.name == n) return true;
    return false;
}

std::string fresh_name(const std::vector<Generator>& gens, const std::string& base) {
    if (!name_taken(gens, base)) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!name_taken(gens, cand)) return cand;
    }
}

} // namespace

Element Extension::pullback(const Element& e) const {
    if (!same_algebra(e.algebra(), base_))
        throw precondition_error("element does not live over the base of the extension");
    return transport(e, total.algebra(), 0);
}

Extension circle_extension(const Cdga& base, const Element& omega) {
    if (!omega.is_homogeneous(2))
        throw precondition_error("the class defining a circle extension must have degree 2");
    if (!base.d(omega).is_zero())
        throw precondition_error("the class defining a circle extension must be closed");

    std::vector<Generator> gens = base.algebra()->generators();
    std::string t = fresh_name(gens, "t");
    gens.push_back({t, 1});
    AlgebraPtr alg = Algebra::make(std::move(gens));

    DifferentialSpec spec;
    for (std::size_t i = 0; i < base.algebra()->size(); ++i) {
        const Element& dg = base.d_generator(i);
        if (!dg.is_zero())
            spec.by_generator[base.algebra()->name(i)] = transport(dg, alg, 0);
    }
    spec.by_generator[t] = transport(omega, alg, 0);
    return Extension(make_cdga(alg, spec), t, base.algebra());
}

Element TensorProduct::include_left(const Element& e) const {
    if (!same_algebra(e.algebra(), left_))
        throw precondition_error("element does not live over the left factor");
    return transport(e, total.algebra(), 0);
}

Element TensorProduct::include_right(const Element& e) const {
    if (!same_algebra(e.algebra(), right_))
        throw precondition_error("element does not live over the right factor");
    return transport(e, total.algebra(), left_->size());
}

TensorProduct tensor_product(const Cdga& left, const Cdga& right) {
    std::vector<Generator> gens = left.algebra()->generators();
    std::vector<std::string> right_names;
    for (const auto& g : right.algebra()->generators()) {
        std::string n = fresh_name(gens, g.name);
        right_names.push_back(n);
        gens.push_back({n, g.degree});
    }
    AlgebraPtr alg = Algebra::make(std::move(gens));

    DifferentialSpec spec;
    for (std::size_t i = 0; i < left.algebra()->size(); ++i) {
        const Element& dg = left.d_generator(i);
        if (!dg.is_zero())
            spec.by_generator[left.algebra()->name(i)] = transport(dg, alg, 0);
    }
    for (std::size_t i = 0; i < right.algebra()->size(); ++i) {
        const Element& dg = right.d_generator(i);
        if (!dg.is_zero())
            spec.by_generator[right_names[i]] = transport(dg, alg, left.algebra()->size());
    }
    return TensorProduct(make_cdga(alg, spec), std::move(right_names),
                         left.algebra(), right.algebra());
}

Element SymplecticClassChoice::build(const Cdga& c) const {
    if (lambda == 0 || mu == 0 || lambda + mu == 0)
        throw precondition_error(
            "symplectic family parameters must satisfy lambda, mu, lambda + mu != 0");
    const AlgebraPtr& alg = c.algebra();
    auto gen = [&](const std::string& n) {
        int i = alg->index_of(n);
        if (i < 0 || alg->degree((std::size_t)i) != 1)
            throw precondition_error("algebra has no degree-1 generator named " + n);
        return Element::generator(alg, (std::size_t)i);
    };
    Element x1 = gen("x1"), x2 = gen("x2"), x3 = gen("x3");
    Element x4 = gen("x4"), x5 = gen("x5"), x6 = gen("x6");
    return lambda * (x1 * x6 + x2 * x5) + mu * (x1 * x6 - x3 * x4);
}

SymplecticCheck symplectic_check(const Cdga& c, const Element& omega, int half_dim) {
    if (half_dim < 1)
        throw precondition_error("half dimension must be positive");
    if (!omega.is_homogeneous(2))
        throw precondition_error("symplectic candidates must be homogeneous of degree 2");
    SymplecticCheck out;
    out.closed = c.d(omega).is_zero();
    Element p = Element::unit(c.algebra());
    for (int i = 0; i < half_dim; ++i) p = p * omega;
    out.top_power = p;
    out.nondegenerate = !p.is_zero();
    return out;
}

GysinReport gysin_report(const Cdga& base, const Element& omega, int max_degree) {
    if (max_degree < 0)
        throw precondition_error("max degree must be non-negative");

    GysinReport out{circle_extension(base, omega)};
    for (int k = 0; k <= max_degree; ++k) {
        CohomologySpace hb(base, k);
        CohomologySpace he(out.ext.total, k);
        out.base_betti.push_back(hb.dim());
        out.extension_betti.push_back(he.dim());
        out.cup_ranks.push_back(cup_map_rank(base, omega, k));

        SparseMatrix pull(he.dim(), hb.dim());
        for (int j = 0; j < hb.dim(); ++j) {
            Vec col = he.class_of(out.ext.pullback(hb.representatives()[j])).coords;
            for (int r = 0; r < (int)col.size(); ++r)
                if (col[r] != 0) pull.set(r, j, col[r]);
        }
        out.pullback_kernels.push_back(kernel_basis(pull));
    }
    auto b = [&](int p) { return p < 0 ? 0 : out.base_betti[p]; };
    auto r = [&](int p) { return p < 0 ? 0 : out.cup_ranks[p]; };
    for (int k = 0; k <= max_degree; ++k) {
        out.predicted_betti.push_back((b(k) - r(k - 2)) + (b(k - 1) - r(k - 1)));
        if (out.predicted_betti[k] != out.extension_betti[k])
            throw internal_error("extension cohomology disagrees with the long exact sequence in degree " +
                                 std::to_string(k));
    }
    out.consistent = true;
    return out;
}

} // namespace cdga
