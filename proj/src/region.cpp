#include "rgbt/region.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace rgbt {

std::vector<Vertex> orient_cycle(std::vector<Vertex> cycle, Vertex start, std::optional<Vertex> next) {
    auto it = std::find(cycle.begin(), cycle.end(), start);
    if (it == cycle.end()) throw InputError("vertex " + std::to_string(start) + " is not on the cycle");
    std::rotate(cycle.begin(), it, cycle.end());
    if (next && cycle.size() > 1 && cycle[1] != *next) {
        std::reverse(cycle.begin() + 1, cycle.end());
        if (cycle[1] != *next)
            throw InputError("vertex " + std::to_string(*next) + " does not follow " + std::to_string(start) +
                             " on the cycle");
    }
    return cycle;
}

RegionSpec region_of(const Embedding& e, const std::vector<Vertex>& td_in, std::optional<Vertex> start,
                     std::optional<Vertex> next) {
    if (td_in.empty()) throw OperationError("topic vertex set is empty");
    RegionSpec r;
    r.td = td_in;
    std::sort(r.td.begin(), r.td.end());
    r.td.erase(std::unique(r.td.begin(), r.td.end()), r.td.end());
    r.in_td.assign(e.vertex_count(), 0);
    for (Vertex v : r.td) {
        if (v < 0 || v >= e.vertex_count()) throw InputError("unknown vertex " + std::to_string(v));
        r.in_td[v] = 1;
    }
    // connectivity of td
    {
        std::set<Vertex> seen{r.td[0]};
        std::queue<Vertex> q;
        q.push(r.td[0]);
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            for (Vertex b : e.rotation(a))
                if (r.in_td[b] && seen.insert(b).second) q.push(b);
        }
        if (seen.size() != r.td.size()) throw OperationError("topic vertex set is not connected");
    }
    r.face_in_sigma.assign(e.face_count(), 0);
    for (int f = 0; f < e.face_count(); ++f) {
        const auto& fac = e.facets()[f];
        bool touches = std::any_of(fac.vertices.begin(), fac.vertices.end(), [&](Vertex v) { return r.in_td[v]; });
        if (!touches) continue;
        if (fac.kind == FacetKind::outer) throw OperationError("topic vertex set touches an outer facet");
        r.face_in_sigma[f] = 1;
        r.sigma_faces.push_back(f);
    }
    r.edge_in_sigma.assign(e.edge_count(), 0);
    r.edge_inner.assign(e.edge_count(), 0);
    std::map<Vertex, Vertex> succ;
    for (int f : r.sigma_faces) {
        const auto& fac = e.facets()[f];
        for (std::size_t i = 0; i < 3; ++i) {
            EdgeId x = fac.edges[i];
            r.edge_in_sigma[x] = 1;
            auto [f1, f2] = e.edge_facets(x);
            int other = f1 == f ? f2 : f1;
            if (r.face_in_sigma[other]) continue;
            Vertex a = fac.vertices[i], b = fac.vertices[(i + 1) % 3];
            if (!succ.emplace(a, b).second)
                throw OperationError("border of the topic set is not a simple cycle (vertex " + std::to_string(a) +
                                     " repeats)");
        }
    }
    if (succ.empty()) throw OperationError("topic set has no border");
    std::vector<Vertex> cyc{succ.begin()->first};
    while (true) {
        Vertex nx = succ.at(cyc.back());
        if (nx == cyc.front()) break;
        if (cyc.size() > succ.size()) throw OperationError("border of the topic set is not a simple cycle");
        cyc.push_back(nx);
    }
    if (cyc.size() != succ.size())
        throw OperationError("border of the topic set is not a single cycle");
    for (Vertex t : r.td)
        for (Vertex w : e.rotation(t))
            if (!r.in_td[w] && std::find(cyc.begin(), cyc.end(), w) == cyc.end())
                throw OperationError("neighbor " + std::to_string(w) + " of the topic set is enclosed but not in it");
    Vertex s = start.value_or(*std::min_element(cyc.begin(), cyc.end()));
    r.omega = orient_cycle(cyc, s, next);
    std::vector<char> on_omega(e.edge_count(), 0);
    for (std::size_t i = 0; i < r.omega.size(); ++i) {
        EdgeId x = e.edge(r.omega[i], r.omega[(i + 1) % r.omega.size()]);
        r.omega_edges.push_back(x);
        on_omega[x] = 1;
    }
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        if (r.edge_in_sigma[x]) r.sigma_edges.push_back(x);
        if (r.edge_in_sigma[x] && !on_omega[x]) {
            r.edge_inner[x] = 1;
            r.sigma_inner.push_back(x);
        } else {
            r.sigma_prime.push_back(x);
        }
    }
    return r;
}

} // namespace rgbt
