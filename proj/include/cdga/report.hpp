#pragma once
#include <string>
#include <vector>

#include "json.hpp"

#include "cdga/constructions.hpp"
#include "cdga/massey.hpp"

namespace cdga {

using Json = nlohmann::ordered_json;

inline constexpr const char* engine_version = "0.1.0";

// All coordinates are rendered as exact rational strings so output is
// byte-for-byte reproducible.
Json json_vec(const Vec& v);
Json json_basis(const Subspace& s);

Json json_cohomology(const Cdga& c, int max_degree); // betti + representatives
Json json_massey(const MasseyResult& m);
Json json_amassey(const AMasseyResult& m);
Json json_scan(const std::vector<ScanHit>& hits);
Json json_gysin(const GysinReport& g);

std::string render(const Json& j); // dump with two-space indent

} // namespace cdga
