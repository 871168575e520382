#pragma once

#include <string>

#include "json.hpp"
#include "wonderful/bbcoh.hpp"
#include "wonderful/orbits.hpp"
#include "wonderful/realization.hpp"
#include "wonderful/symmetric.hpp"
#include "wonderful/toricfan.hpp"

namespace wonderful {

// Reports use ordered JSON so a fixed request renders byte-identically.
using Json = nlohmann::ordered_json;

Json orbit_poset_report(const RootSystem& rs, const OrbitPoset& poset);
Json betti_report(const RootSystem& rs, const WeylGroup& W);
Json fixed_points_report(const RootSystem& rs, const WeylGroup& W);
Json fan_report(const RootSystem& rs, const Fan& fan, int samples, std::uint64_t seed);
Json satake_report(const RootSystem& rs, const SatakeDiagram& sd, const Involution& inv);
Json realization_report(const RootSystem& rs, bool includeWedge);

std::string orbit_poset_csv(const Json& report);
std::string betti_csv(const Json& report);
std::string fixed_points_csv(const Json& report);
std::string fan_csv(const Json& report);
std::string satake_csv(const Json& report);
std::string realization_csv(const Json& report);

std::string orbit_poset_text(const Json& report);
std::string betti_text(const Json& report);
std::string fixed_points_text(const Json& report);
std::string fan_text(const Json& report);
std::string satake_text(const Json& report);
std::string realization_text(const Json& report);

}  // namespace wonderful
