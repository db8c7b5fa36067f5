#pragma once

#include "rgbt/embedding.hpp"

#include <optional>
#include <vector>

namespace rgbt {

/// Inside/outside split of an embedding around a topic vertex set.
struct RegionSpec {
    std::vector<Vertex> td;               // sorted
    std::vector<Vertex> omega;            // border cycle, in order
    std::vector<EdgeId> omega_edges;      // omega_edges[i] joins omega[i], omega[i+1]
    std::vector<int> sigma_faces;         // triangles incident to td
    std::vector<EdgeId> sigma_edges;      // every edge of a sigma face
    std::vector<EdgeId> sigma_inner;      // sigma edges not on omega
    std::vector<EdgeId> sigma_prime;      // every edge not in sigma_inner
    std::vector<char> in_td;              // per vertex
    std::vector<char> edge_in_sigma;      // per edge
    std::vector<char> edge_inner;         // per edge
    std::vector<char> face_in_sigma;      // per facet

    bool contains_td(Vertex v) const { return in_td.at(v) != 0; }
    bool inner(EdgeId e) const { return edge_inner.at(e) != 0; }
};

/// Throws OperationError when td is empty, disconnected, touches an outer
/// facet, or its border is not a simple cycle. `start` and `next` fix the
/// starting vertex and direction of omega when given.
RegionSpec region_of(const Embedding& e, const std::vector<Vertex>& td,
                     std::optional<Vertex> start = std::nullopt, std::optional<Vertex> next = std::nullopt);

/// Rotates and possibly reverses `omega` so it reads `start`, `next`, ...
std::vector<Vertex> orient_cycle(std::vector<Vertex> cycle, Vertex start, std::optional<Vertex> next);

} // namespace rgbt
