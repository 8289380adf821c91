#include "cdga/massey.hpp"

#include <set>

#include "cdga/errors.hpp"

namespace cdga {

namespace {

int checked_degree(const Cdga& c, const Element& e, const char* what) {
    if (e.is_zero())
        throw precondition_error(std::string(what) + " must be a nonzero element");
    auto deg = e.homogeneous_degree();
    if (!deg)
        throw precondition_error(std::string(what) + " must be homogeneous");
    if (!c.d(e).is_zero())
        throw precondition_error(std::string(what) + " must be closed");
    return *deg;
}

Element required_witness(const Cdga& c, const Element& product, const char* which) {
    auto w = exactness_witness(c, product);
    if (!w)
        throw precondition_error(std::string("the cup product ") + which +
                                 " does not vanish, so the product is undefined");
    return *w;
}

} // namespace

MasseyResult triple_massey(const Cdga& c, const Element& a1, const Element& a2,
                           const Element& a3) {
    const int p1 = checked_degree(c, a1, "first argument");
    const int p2 = checked_degree(c, a2, "second argument");
    const int p3 = checked_degree(c, a3, "third argument");
    const int t = p1 + p2 + p3 - 1;

    MasseyResult out;
    out.degrees = {p1, p2, p3};
    out.xi12 = required_witness(c, a1 * a2, "[a1][a2]");
    out.xi23 = required_witness(c, a2 * a3, "[a2][a3]");

    Element second = a1 * out.xi23;
    Element w = p1 % 2 == 0 ? out.xi12 * a3 - second : out.xi12 * a3 + second;
    if (!c.d(w).is_zero())
        throw internal_error("defining system did not produce a cocycle");

    CohomologySpace ht(c, t);
    auto cls = ht.class_of(w);
    out.representative = cls.representative;
    out.coords = cls.coords;

    std::vector<Vec> gens;
    CohomologySpace right(c, t - p1), left(c, t - p3);
    for (const auto& r : right.representatives())
        gens.push_back(ht.class_of(a1 * r).coords);
    for (const auto& r : left.representatives())
        gens.push_back(ht.class_of(r * a3).coords);
    out.indeterminacy = Subspace::span(ht.dim(), gens);
    out.vanishes = out.indeterminacy.contains(out.coords);
    return out;
}

AMasseyResult a_massey(const Cdga& c, const Element& a, const Element& b1,
                       const Element& b2, const Element& b3, int max_degree) {
    const int pa = checked_degree(c, a, "central argument");
    const std::array<const Element*, 3> b{&b1, &b2, &b3};
    std::array<int, 3> pb{};
    for (int i = 0; i < 3; ++i)
        pb[i] = checked_degree(c, *b[i], "side argument");
    if (pa % 2 || pb[0] % 2 || pb[1] % 2 || pb[2] % 2)
        throw precondition_error("all arguments must have even degree");

    const int t = 2 * pa - 2 + pb[0] + pb[1] + pb[2];
    if (max_degree < t)
        throw precondition_error("degree cap is below the value degree " +
                                 std::to_string(t));

    AMasseyResult out;
    out.value_degree = t;
    for (int i = 0; i < 3; ++i)
        out.primitives[i] = required_witness(c, a * *b[i], "[a][b_i]");

    const auto& xi = out.primitives;
    Element w = xi[0] * xi[1] * b3 + xi[1] * xi[2] * b1 + xi[2] * xi[0] * b2;
    if (!c.d(w).is_zero())
        throw internal_error("defining system did not produce a cocycle");

    CohomologySpace ht(c, t);
    auto cls = ht.class_of(w);
    out.representative = cls.representative;
    out.coords = cls.coords;

    // Denominator: every value of <b_i, a, b_j> (representative plus any
    // indeterminacy shift) multiplied into the complementary degree.
    std::vector<Vec> gens;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            MasseyResult m = triple_massey(c, *b[i], a, *b[j]);
            const int v = pb[i] + pa + pb[j] - 1;
            CohomologySpace hv(c, v), hs(c, t - v);
            auto add_value = [&](const Vec& coords) {
                Element z = hv.lift(coords);
                if (z.is_zero()) return;
                for (const auto& r : hs.representatives())
                    gens.push_back(ht.class_of(z * r).coords);
            };
            add_value(m.coords);
            for (const auto& shift : m.indeterminacy.basis()) add_value(shift);
        }
    out.denominator = Subspace::span(ht.dim(), gens);
    out.vanishes = out.denominator.contains(out.coords);
    return out;
}

std::vector<ScanHit> massey_scan(const Cdga& c, int p1, int p2, int p3) {
    if (p1 < 0 || p2 < 0 || p3 < 0)
        throw precondition_error("scan degrees must be non-negative");
    CohomologySpace h1(c, p1), h2(c, p2), h3(c, p3);
    CohomologySpace mid(c, p2 + p3);

    std::vector<ScanHit> hits;
    std::set<Vec> seen;
    for (int i1 = 0; i1 < h1.dim(); ++i1) {
        const Element& e1 = h1.representatives()[i1];
        for (int i2 = 0; i2 < h2.dim(); ++i2) {
            const Element& e2 = h2.representatives()[i2];
            if (!exactness_witness(c, e1 * e2)) continue;

            SparseMatrix cup_by_e2(mid.dim(), h3.dim());
            for (int j = 0; j < h3.dim(); ++j) {
                Vec col = mid.class_of(e2 * h3.representatives()[j]).coords;
                for (int r = 0; r < (int)col.size(); ++r)
                    if (col[r] != 0) cup_by_e2.set(r, j, col[r]);
            }
            Subspace ker = kernel_basis(cup_by_e2);
            for (const auto& kv : ker.basis()) {
                ScanHit hit;
                hit.result = triple_massey(c, e1, e2, h3.lift(kv));
                if (hit.result.vanishes) continue;
                if (!seen.insert(hit.result.coords).second) continue;
                hit.a1.assign(h1.dim(), Scalar(0));
                hit.a1[i1] = 1;
                hit.a2.assign(h2.dim(), Scalar(0));
                hit.a2[i2] = 1;
                hit.a3 = kv;
                hits.push_back(std::move(hit));
            }
        }
    }
    return hits;
}

} // namespace cdga
