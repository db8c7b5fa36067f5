#pragma once

#include "rgbt/atlas.hpp"
#include "rgbt/dual.hpp"
#include "rgbt/kempe.hpp"
#include "rgbt/routes.hpp"
#include "rgbt/suite.hpp"
#include "rgbt/tiling.hpp"

#include "json.hpp"

#include <set>
#include <string>

namespace rgbt {

using Json = nlohmann::ordered_json;

Json json_edge(const Embedding& e, EdgeId x);   // [u, v]
Json json_of(const ValidationReport& r);
Json json_of(const Tiling& t);
Json json_of(const BoundaryWord& w);
Json json_of(const Embedding& e, const DualWalk& w);
Json json_of(const Embedding& e, const CanalSystem& cs);
Json json_of(const Embedding& e, const DiamondRoute& r);
Json json_of(const OrientationSets& o);
Json json_of(const DiamondType& d);
Json json_of(const Embedding& e, const ChainReport& r);
Json json_of(const Embedding& e, const GeneralizedRing& r);
Json json_of(const State& s);
Json json_of(const Embedding& e, const RotationRun& r);
Json json_of(const StateGraph& g);
Json json_of(const BoundaryEnumeration& b);
Json json_of(const Atlas& a);
Json json_of(const AtlasIntersection& x);
/// Elapsed times are left out unless asked for, so reruns compare equal.
Json json_of(const SuiteReport& r, bool timing = false);

/// Undirected graph with one edge per tiling edge: rgb as colors, black as
/// gray, abandoned as a doubled gold line. Edges in `marked` are drawn bold
/// and dashed.
std::string dot_of(const Tiling& t, const std::set<EdgeId>& marked = {});
std::string dot_of(const StateGraph& g);

} // namespace rgbt
