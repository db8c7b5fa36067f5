#pragma once

#include "rgbt/dual.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace rgbt {

/// Walk in the dual alternating c-links and black links (in rgb tilings every
/// non-c link counts as black). Walk nodes: in-triangle of e1, out-triangle
/// of e1, in-triangle of e2, ...
struct DiamondRoute {
    Color color = Color::red;
    std::vector<EdgeId> c_edges;       // e1..ek, distinct
    std::vector<EdgeId> connectors;    // black edges b1..b(k-1) (plus closing link for rings)
    DualWalk walk;
    bool directed = true;
    bool ring = false;
    bool starts_at_pseudo = false;
    bool ends_at_pseudo = false;

    /// Rings and walks running pseudo node to pseudo node.
    bool switchable() const { return ring || (starts_at_pseudo && ends_at_pseudo && !walk.links.empty()); }
};

struct RouteStart {
    EdgeId edge = kNoEdge;
    Vertex apex = -1;    // picks the out-triangle of the initial diamond
};

enum class RouteTarget { edge, outer, ring };

struct RouteQuery {
    RouteStart from;
    RouteTarget target = RouteTarget::ring;
    EdgeId target_edge = kNoEdge;
    int max_length = 40;  // maximum number of c-edges
};

/// Color the route follows: the tiling's single color, or `c` for rgb.
/// Throws InputError when the start edge is not c-colored.
std::optional<DiamondRoute> search_diamond_route(const Tiling& t, Color c, const RouteQuery& q);

/// Visits every directed route from `from` (prefixes included, length 1
/// first). The callback returns false to prune below that route.
void for_each_route(const Tiling& t, Color c, RouteStart from, int max_length,
                    const std::function<bool(const DiamondRoute&)>& visit);

/// All switchable routes of color c over every start, deduplicated by edge set.
std::vector<DiamondRoute> switchable_routes(const Tiling& t, Color c, int max_length = 40);

/// Toggles c and black on every edge of the walk. Input must be single(c).
/// Throws OperationError for an open route with an interior terminal.
Tiling ecs_diamond_route(const Tiling& t, const DiamondRoute& r);

struct OrientationSets {
    RouteStart initial;
    int out_triangle = -1;              // facet ids
    int in_triangle = -1;               // -1 when the initial edge is on an outer facet
    std::set<int> ot, it, bit, nont, unit;
    std::set<int> exceptional;          // in-triangles whose c-edge lies on an outer facet
    long long routes = 0;
    bool truncated = false;
};

OrientationSets orientation_sets(const Tiling& t, Color c, RouteStart initial, int max_length = 40);

} // namespace rgbt
