#include "cdga/report.hpp"

namespace cdga {

Json json_vec(const Vec& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(to_string(s));
    return arr;
}

Json json_basis(const Subspace& s) {
    Json arr = Json::array();
    for (const auto& v : s.basis()) arr.push_back(json_vec(v));
    return arr;
}

Json json_cohomology(const Cdga& c, int max_degree) {
    Json out;
    Json betti = Json::array();
    Json reps;
    for (int k = 0; k <= max_degree; ++k) {
        CohomologySpace h(c, k);
        betti.push_back(h.dim());
        Json level = Json::array();
        for (const auto& r : h.representatives()) level.push_back(r.str());
        reps[std::to_string(k)] = std::move(level);
    }
    out["betti"] = std::move(betti);
    out["representatives"] = std::move(reps);
    return out;
}

Json json_massey(const MasseyResult& m) {
    Json out;
    out["degrees"] = m.degrees;
    out["representative"] = m.representative.str();
    out["coords"] = json_vec(m.coords);
    out["indeterminacy_basis"] = json_basis(m.indeterminacy);
    out["vanishes"] = m.vanishes;
    out["primitives"] = Json{{"xi12", m.xi12.str()}, {"xi23", m.xi23.str()}};
    return out;
}

Json json_amassey(const AMasseyResult& m) {
    Json out;
    out["value_degree"] = m.value_degree;
    out["representative"] = m.representative.str();
    out["coords"] = json_vec(m.coords);
    out["denominator_basis"] = json_basis(m.denominator);
    out["vanishes"] = m.vanishes;
    Json prim = Json::array();
    for (const auto& xi : m.primitives) prim.push_back(xi.str());
    out["primitives"] = std::move(prim);
    return out;
}

Json json_scan(const std::vector<ScanHit>& hits) {
    Json arr = Json::array();
    for (const auto& h : hits) {
        Json one;
        one["a1"] = json_vec(h.a1);
        one["a2"] = json_vec(h.a2);
        one["a3"] = json_vec(h.a3);
        one["massey"] = json_massey(h.result);
        arr.push_back(std::move(one));
    }
    Json out;
    out["hits"] = std::move(arr);
    return out;
}

Json json_gysin(const GysinReport& g) {
    Json out;
    out["fiber"] = g.ext.fiber_name;
    out["base_betti"] = g.base_betti;
    out["cup_ranks"] = g.cup_ranks;
    out["extension_betti"] = g.extension_betti;
    out["predicted_betti"] = g.predicted_betti;
    Json kernels = Json::array();
    for (const auto& k : g.pullback_kernels) kernels.push_back(json_basis(k));
    out["pullback_kernels"] = std::move(kernels);
    out["consistent"] = g.consistent;
    return out;
}

std::string render(const Json& j) { return j.dump(2); }

} // namespace cdga
