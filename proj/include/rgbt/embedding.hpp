#pragma once

#include "rgbt/types.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rgbt {

/// Raw rotation system as read from a graph file, before face tracing.
struct RotationSystem {
    int vertex_count = 0;
    std::vector<std::vector<Vertex>> rotation;   // counterclockwise neighbor order
    std::vector<std::vector<Vertex>> outer;      // declared outer facets
};

enum class FacetKind { triangle, outer };

struct Facet {
    FacetKind kind = FacetKind::triangle;
    std::vector<Vertex> vertices;   // traced order
    std::vector<EdgeId> edges;      // edges[i] joins vertices[i] and vertices[i+1]
    int outer_index = -1;           // index into the declared outer facets
};

/// The two triangles on either side of an edge. When the edge runs along an
/// outer facet only one triangle exists and `along_outer` is set.
struct Diamond {
    EdgeId edge = kNoEdge;
    Vertex u = -1;
    Vertex v = -1;
    Vertex x = -1;                  // apex of the first triangle
    std::optional<Vertex> y;        // apex of the second triangle
    int facet_x = -1;
    int facet_y = -1;
    bool along_outer = false;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    bool euler_ok = false;
    bool triangles_ok = false;
    bool is_mpg = false;
    std::vector<int> outer_sizes;
    std::map<int, int> degree_histogram;
    int degree5_count = 0;
    int min_degree = 0;
};

/// Combinatorial embedding of an MPG or semi-MPG. Immutable once built; every
/// instance has passed face tracing, the Euler check, and the facet checks.
class Embedding {
public:
    /// Throws ValidationError when the rotation system is not a valid
    /// (semi-)MPG.
    static Embedding build(const RotationSystem& rs);

    /// Builds from a facet list. Facets may be given in either orientation;
    /// they are oriented consistently before the rotation is derived.
    static Embedding from_faces(int vertex_count,
                                const std::vector<std::vector<Vertex>>& triangles,
                                const std::vector<std::vector<Vertex>>& outer = {});

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(facets_.size()); }
    bool is_mpg() const { return outer_count_ == 0; }
    int outer_count() const { return outer_count_; }

    std::span<const Vertex> rotation(Vertex v) const { return rotation_.at(v); }
    std::span<const EdgeId> incident_edges(Vertex v) const { return rotation_edges_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(rotation_.at(v).size()); }

    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::pair<Vertex, Vertex>& endpoints(EdgeId e) const { return edges_.at(e); }
    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    /// Throws InputError for a non-edge.
    EdgeId edge(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
    Vertex other_end(EdgeId e, Vertex v) const;

    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<int>& triangles() const { return triangles_; }
    /// Facets on both sides of `e`; first is the side of dart min->max.
    std::pair<int, int> edge_facets(EdgeId e) const { return edge_facets_.at(e); }
    bool on_outer(EdgeId e) const;
    std::vector<int> outer_facet_indices() const;

    /// Throws InputError for an unknown edge.
    Diamond diamond(EdgeId e) const;
    /// Third vertex of triangle facet `f` opposite edge `e`.
    Vertex apex(int facet, EdgeId e) const;

    RotationSystem rotation_system() const;

private:
    friend class EmbeddingBuilder;
    Embedding() = default;

    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<EdgeId>> rotation_edges_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::unordered_map<std::int64_t, EdgeId> edge_index_;
    std::vector<Facet> facets_;
    std::vector<int> triangles_;
    std::vector<std::pair<int, int>> edge_facets_;
    int outer_count_ = 0;
};

/// Parses the `semimpg v1` text format. Throws InputError with line/column.
RotationSystem parse_graph_text(std::string_view text);
Embedding parse_graph(std::string_view text);
Embedding load_graph(const std::string& path);
std::string format_graph(const Embedding& e);

/// Never throws for structural problems; lists them in the report instead.
ValidationReport inspect(const RotationSystem& rs);
ValidationReport validate_semi_mpg(const Embedding& e);

} // namespace rgbt
