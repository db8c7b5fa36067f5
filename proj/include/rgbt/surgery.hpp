#pragma once

#include "rgbt/embedding.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rgbt {

struct SurgeryResult {
    Embedding graph;
    std::vector<Vertex> vertex_map;  // old id -> new id, -1 when removed
};

/// Removes `remove`, identifies `merge.second` with `merge.first`, then adds
/// `add_edges` (given in old ids) as chords of the resulting holes. Holes left
/// with more than three sides become outer facets. Throws OperationError.
SurgeryResult merge_surgery(const Embedding& e, const std::vector<Vertex>& remove,
                            std::optional<std::pair<Vertex, Vertex>> merge,
                            const std::vector<std::pair<Vertex, Vertex>>& add_edges);

} // namespace rgbt
