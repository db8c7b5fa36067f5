#pragma once

#include "rgbt/embedding.hpp"
#include "rgbt/tiling.hpp"

#include <string>
#include <vector>

namespace rgbt {

Embedding k4();
/// 0 top, 1..4 equator, 5 bottom.
Embedding octahedron();
/// 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
Embedding icosahedron();
/// Icosahedron with vertex 0 deleted and its link declared as the outer pentagon.
Embedding icosahedron_minus_vertex();

/// 7-semi-MPG with boundary 0..6 and interior vertices 7..11.
Embedding heptagon_disk();
/// Green tiling of heptagon_disk() carrying the green 5-cycle 3-10-6-5-8.
Tiling heptagon_seed_tiling(const Embedding& e);

/// Triangulated annulus between concentric rings, outermost first; the first
/// and last rings are declared outer facets.
Embedding annulus(const std::vector<int>& ring_sizes);

/// Adds `layers` antiprism bands outside `boundary` and closes with a cap
/// vertex. New vertices are numbered from `vertex_count` upward.
Embedding close_disk(int vertex_count, std::vector<std::vector<Vertex>> triangles,
                     const std::vector<Vertex>& boundary, int layers);

/// Shipped corpus, in a fixed order.
std::vector<std::string> corpus_names();
Embedding corpus_graph(const std::string& name);
/// Names of the corpus MPGs small enough for exhaustive sweeps.
std::vector<std::string> sweep_mpgs();
std::vector<std::string> sweep_semi_mpgs();

} // namespace rgbt
