#include "rgbt/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rgbt {

namespace {

// Splits a closed walk at repeated vertices into simple polygons.
void split_simple(std::vector<Vertex> poly, std::vector<std::vector<Vertex>>& out) {
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = i + 1; j < poly.size(); ++j)
            if (poly[i] == poly[j]) {
                std::vector<Vertex> a(poly.begin() + i, poly.begin() + j);
                std::vector<Vertex> b(poly.begin() + j, poly.end());
                b.insert(b.end(), poly.begin(), poly.begin() + i);
                split_simple(a, out);
                split_simple(b, out);
                return;
            }
    if (poly.size() >= 3) out.push_back(std::move(poly));
}

} // namespace

SurgeryResult merge_surgery(const Embedding& e, const std::vector<Vertex>& remove,
                            std::optional<std::pair<Vertex, Vertex>> merge,
                            const std::vector<std::pair<Vertex, Vertex>>& add_edges) {
    const int n = e.vertex_count();
    std::vector<char> removed(n, 0);
    for (Vertex v : remove) {
        if (v < 0 || v >= n) throw InputError("unknown vertex " + std::to_string(v));
        removed[v] = 1;
    }
    std::vector<Vertex> rename(n);
    for (Vertex v = 0; v < n; ++v) rename[v] = v;
    if (merge) {
        auto [keep, absorb] = *merge;
        if (keep < 0 || keep >= n || absorb < 0 || absorb >= n) throw InputError("unknown merge vertex");
        if (keep == absorb) throw OperationError("cannot merge a vertex with itself");
        if (removed[keep] || removed[absorb]) throw OperationError("merge vertex is also removed");
        if (e.adjacent(keep, absorb)) throw OperationError("merge of adjacent vertices " + std::to_string(keep) + " and " +
                                                           std::to_string(absorb) + " would create a loop");
        rename[absorb] = keep;
    }

    std::vector<std::vector<Vertex>> kept_tris, kept_outer;
    std::set<std::pair<Vertex, Vertex>> kept_darts;
    for (const auto& f : e.facets()) {
        if (std::any_of(f.vertices.begin(), f.vertices.end(), [&](Vertex v) { return removed[v]; })) continue;
        (f.kind == FacetKind::triangle ? kept_tris : kept_outer).push_back(f.vertices);
        for (std::size_t i = 0; i < f.vertices.size(); ++i)
            kept_darts.emplace(f.vertices[i], f.vertices[(i + 1) % f.vertices.size()]);
    }
    std::map<Vertex, Vertex> hole_succ;
    for (auto [a, b] : kept_darts)
        if (!kept_darts.count({b, a}))
            if (!hole_succ.emplace(b, a).second)
                throw OperationError("removal leaves a pinched hole at vertex " + std::to_string(b));
    std::vector<std::vector<Vertex>> holes;
    std::set<Vertex> used;
    for (auto [s, unused] : hole_succ) {
        if (used.count(s)) continue;
        std::vector<Vertex> cyc;
        for (Vertex v = s; !used.count(v); v = hole_succ.at(v)) {
            used.insert(v);
            cyc.push_back(v);
        }
        holes.push_back(cyc);
    }

    auto relabel = [&](std::vector<Vertex>& c) {
        for (auto& v : c) v = rename[v];
    };
    for (auto& f : kept_tris) relabel(f);
    for (auto& f : kept_outer) relabel(f);
    std::vector<std::vector<Vertex>> polys;
    for (auto h : holes) {
        relabel(h);
        split_simple(h, polys);
    }

    for (auto [a0, b0] : add_edges) {
        if (a0 < 0 || a0 >= n || b0 < 0 || b0 >= n) throw InputError("unknown vertex in added edge");
        Vertex a = rename[a0], b = rename[b0];
        bool placed = false;
        for (std::size_t k = 0; k < polys.size() && !placed; ++k) {
            auto& p = polys[k];
            auto ia = std::find(p.begin(), p.end(), a), ib = std::find(p.begin(), p.end(), b);
            if (ia == p.end() || ib == p.end()) continue;
            std::size_t i = ia - p.begin(), j = ib - p.begin();
            if (i > j) std::swap(i, j);
            if (j - i == 1 || (i == 0 && j == p.size() - 1)) continue;
            std::vector<Vertex> x(p.begin() + i, p.begin() + j + 1);
            std::vector<Vertex> y(p.begin() + j, p.end());
            y.insert(y.end(), p.begin(), p.begin() + i + 1);
            p = x;
            polys.push_back(y);
            placed = true;
        }
        if (!placed)
            throw OperationError("added edge " + std::to_string(a0) + "-" + std::to_string(b0) + " is not a chord of a hole");
    }
    for (auto& p : polys) (p.size() == 3 ? kept_tris : kept_outer).push_back(p);

    std::vector<Vertex> vmap(n, -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v] && rename[v] == v) vmap[v] = next++;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v] && rename[v] != v) vmap[v] = vmap[rename[v]];
    auto renumber = [&](std::vector<std::vector<Vertex>>& fs) {
        for (auto& f : fs)
            for (auto& v : f) v = vmap[v];
    };
    renumber(kept_tris);
    renumber(kept_outer);
    try {
        SurgeryResult res{Embedding::from_faces(next, kept_tris, kept_outer), std::move(vmap)};
        if (!validate_semi_mpg(res.graph).ok) throw EngineError("surgery produced an invalid embedding");
        return res;
    } catch (const ValidationError& err) {
        throw OperationError(std::string("surgery result rejected (parallel edge or non-planar rotation): ") + err.what());
    }
}

} // namespace rgbt
