#include "rgbt/corpus.hpp"
#include "rgbt/templates.hpp"

#include <algorithm>

namespace rgbt {

Embedding k4() { return Embedding::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

Embedding octahedron() {
    std::vector<std::vector<Vertex>> f;
    for (int i = 0; i < 4; ++i) {
        Vertex a = 1 + i, b = 1 + (i + 1) % 4;
        f.push_back({0, a, b});
        f.push_back({5, b, a});
    }
    return Embedding::from_faces(6, f);
}

namespace {

std::vector<std::vector<Vertex>> icosahedron_faces() {
    std::vector<std::vector<Vertex>> f;
    for (int i = 0; i < 5; ++i) {
        Vertex u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
        f.push_back({0, u, u1});
        f.push_back({u, l, u1});
        f.push_back({u1, l, l1});
        f.push_back({11, l1, l});
    }
    return f;
}

} // namespace

Embedding icosahedron() { return Embedding::from_faces(12, icosahedron_faces()); }

Embedding icosahedron_minus_vertex() {
    std::vector<std::vector<Vertex>> f;
    for (auto tri : icosahedron_faces()) {
        if (std::find(tri.begin(), tri.end(), 0) != tri.end()) continue;
        for (auto& v : tri) --v;
        f.push_back(tri);
    }
    return Embedding::from_faces(11, f, {{0, 1, 2, 3, 4}});
}

Embedding heptagon_disk() {
    std::vector<std::vector<Vertex>> f{{0, 1, 9},  {1, 2, 9},  {2, 3, 10}, {2, 10, 6}, {3, 4, 8},
                                       {3, 8, 7},  {3, 7, 10}, {4, 5, 8},  {5, 6, 11}, {5, 11, 8},
                                       {6, 10, 7}, {6, 7, 11}, {7, 8, 11}, {6, 9, 0},  {6, 9, 2}};
    return Embedding::from_faces(12, f, {{0, 1, 2, 3, 4, 5, 6}});
}

Tiling heptagon_seed_tiling(const Embedding& e) {
    Tiling t(e, TilingMode::single(Color::green), Color::black);
    for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{
             {0, 1}, {0, 6}, {2, 9}, {3, 8}, {3, 10}, {5, 6}, {5, 8}, {6, 10}, {7, 11}})
        t.set(e.edge(a, b), Color::green);
    return t;
}

Embedding annulus(const std::vector<int>& ring_sizes) {
    if (ring_sizes.size() < 2) throw InputError("an annulus needs at least two rings");
    std::vector<std::vector<Vertex>> rings;
    int n = 0;
    for (int k : ring_sizes) {
        if (k < 3) throw InputError("ring size must be at least 3");
        std::vector<Vertex> r(k);
        for (int i = 0; i < k; ++i) r[i] = n++;
        rings.push_back(r);
    }
    std::vector<std::vector<Vertex>> f;
    for (std::size_t k = 0; k + 1 < rings.size(); ++k) {
        const auto& P = rings[k];
        const auto& Q = rings[k + 1];
        const int p = static_cast<int>(P.size()), q = static_cast<int>(Q.size());
        int i = 0, j = 0;
        while (i < p || j < q) {
            // advance on the ring whose next vertex comes first in angle
            bool step_p = j == q || (i < p && (i + 1) * q <= (j + 1) * p);
            if (step_p) {
                f.push_back({P[i % p], P[(i + 1) % p], Q[j % q]});
                ++i;
            } else {
                f.push_back({P[i % p], Q[(j + 1) % q], Q[j % q]});
                ++j;
            }
        }
    }
    return Embedding::from_faces(n, f, {rings.front(), rings.back()});
}

Embedding close_disk(int vertex_count, std::vector<std::vector<Vertex>> triangles, const std::vector<Vertex>& boundary,
                     int layers) {
    int n = vertex_count;
    std::vector<Vertex> ring = boundary;
    const int m = static_cast<int>(ring.size());
    for (int layer = 0; layer < layers; ++layer) {
        std::vector<Vertex> next(m);
        for (int i = 0; i < m; ++i) next[i] = n++;
        for (int i = 0; i < m; ++i) {
            triangles.push_back({ring[i], ring[(i + 1) % m], next[i]});
            triangles.push_back({ring[(i + 1) % m], next[(i + 1) % m], next[i]});
        }
        ring = next;
    }
    Vertex cap = n++;
    for (int i = 0; i < m; ++i) triangles.push_back({ring[i], ring[(i + 1) % m], cap});
    return Embedding::from_faces(n, triangles);
}

std::vector<std::string> corpus_names() {
    return {"k4",          "octahedron",    "icosahedron",   "ico-minus-vertex", "heptagon-disk",
            "annulus-7-5", "td55-host",     "td55-bare",     "td5cubed-host",    "td5fourth-host",
            "hattd-host"};
}

Embedding corpus_graph(const std::string& name) {
    if (name == "k4") return k4();
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "ico-minus-vertex") return icosahedron_minus_vertex();
    if (name == "heptagon-disk") return heptagon_disk();
    if (name == "annulus-7-5") return annulus({7, 5});
    if (name == "td55-host") return instantiate_template(Template::TD55).graph;
    if (name == "td55-bare") return instantiate_template(Template::TD55, 0).graph;
    if (name == "td5cubed-host") return instantiate_template(Template::TD5cubed).graph;
    if (name == "td5fourth-host") return instantiate_template(Template::TD5fourth).graph;
    if (name == "hattd-host") return instantiate_template(Template::HatTD, 0).graph;
    throw InputError("unknown corpus graph '" + name + "'");
}

std::vector<std::string> sweep_mpgs() { return {"k4", "octahedron", "icosahedron"}; }

std::vector<std::string> sweep_semi_mpgs() { return {"ico-minus-vertex", "heptagon-disk", "annulus-7-5"}; }

} // namespace rgbt
