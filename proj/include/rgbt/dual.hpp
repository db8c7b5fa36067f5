#pragma once

#include "rgbt/embedding.hpp"
#include "rgbt/tiling.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rgbt {

/// Dual of a (semi-)MPG. Nodes 0..triangle_count-1 are triangle facets in the
/// order of Embedding::triangles(); the rest are pseudo nodes, one for each
/// edge of an outer facet. Link i crosses edge i.
class DualGraph {
public:
    explicit DualGraph(const Embedding& e);

    int node_count() const { return static_cast<int>(node_links_.size()); }
    int triangle_count() const { return triangle_count_; }
    int link_count() const { return static_cast<int>(link_nodes_.size()); }
    bool is_pseudo(int node) const { return node >= triangle_count_; }

    const std::pair<int, int>& link_nodes(EdgeId e) const { return link_nodes_.at(e); }
    int across(EdgeId e, int node) const;
    const std::vector<EdgeId>& links(int node) const { return node_links_.at(node); }
    int facet(int node) const { return node_facet_.at(node); }
    /// Edge a pseudo node hangs off, -1 for triangle nodes.
    EdgeId pseudo_edge(int node) const { return pseudo_edge_.at(node); }
    int node_of_triangle_facet(int facet) const { return facet_node_.at(facet); }
    /// Node on the given side of e: side 0 is the first of Embedding::edge_facets.
    int side_node(EdgeId e, int side) const { return side == 0 ? link_nodes_.at(e).first : link_nodes_.at(e).second; }

private:
    int triangle_count_ = 0;
    std::vector<std::pair<int, int>> link_nodes_;
    std::vector<std::vector<EdgeId>> node_links_;
    std::vector<int> node_facet_;
    std::vector<EdgeId> pseudo_edge_;
    std::vector<int> facet_node_;
};

/// Generic dual walk: nodes[i] -links[i]- nodes[i+1]. A ring repeats no
/// node; its last link returns to nodes[0] (links.size() == nodes.size()).
struct DualWalk {
    std::vector<int> nodes;
    std::vector<EdgeId> links;
    bool ring = false;
};

struct CanalLine {
    Color color = Color::red;
    DualWalk walk;
    bool ring() const { return walk.ring; }
};

struct BoundaryPair {
    EdgeId first;
    EdgeId second;
    int facet_first;      // outer facet index
    int facet_second;
};

struct CanalSystem {
    Color color = Color::red;
    std::vector<CanalLine> lines;
    std::vector<BoundaryPair> matching;  // endpoints of paths running between pseudo nodes
    bool non_crossing = true;
    int blocked_ends = 0;                // path ends at triangles holding an abandoned edge
};

/// Lines of color c: components of the non-c links (black links in single
/// mode). Abandoned links are skipped; triangles holding one end lines.
CanalSystem extract_canal_system(const Tiling& t, Color c);

/// Swaps the two non-c colors on every crossed edge. Throws OperationError for
/// a stale line or a single-color tiling.
Tiling ecs_canal_line(const Tiling& t, const CanalLine& line);

/// True when the pairs, read along one cycle of positions, do not interleave.
bool pairs_non_crossing(const std::vector<std::pair<int, int>>& pairs);

} // namespace rgbt
