#include "rgbt/routes.hpp"

#include <algorithm>
#include <map>

namespace rgbt {

namespace {

struct RouteSearch {
    const Tiling& t;
    Color c;
    DualGraph dual;
    int max_length;
    int in_node = -1;
    std::vector<char> visited;
    DiamondRoute cur;
    bool truncated = false;
    const std::function<bool(const DiamondRoute&)>* visit = nullptr;

    RouteSearch(const Tiling& tiling, Color color, int cap)
        : t(tiling), c(color), dual(tiling.embedding()), max_length(cap) {}

    bool is_c(EdgeId x) const { return t.color(x) == c; }
    bool is_black(EdgeId x) const {
        Color k = t.color(x);
        return k != c && (k == Color::black || is_rgb(k));
    }

    void start(RouteStart from) {
        const auto& emb = t.embedding();
        if (from.edge < 0 || from.edge >= emb.edge_count()) throw InputError("unknown start edge");
        if (!is_c(from.edge)) throw InputError("start edge is not " + color_name(c));
        int out = -1;
        for (int side = 0; side < 2; ++side) {
            int node = dual.side_node(from.edge, side);
            if (dual.is_pseudo(node)) continue;
            if (emb.apex(dual.facet(node), from.edge) == from.apex) out = node;
        }
        if (out < 0) throw InputError("apex " + std::to_string(from.apex) + " is not opposite the start edge");
        in_node = dual.across(from.edge, out);
        visited.assign(dual.node_count(), 0);
        visited[out] = 1;
        if (!dual.is_pseudo(in_node)) visited[in_node] = 1;
        cur = DiamondRoute{};
        cur.color = c;
        cur.c_edges = {from.edge};
        cur.walk.nodes = {in_node, out};
        cur.walk.links = {from.edge};
        cur.starts_at_pseudo = dual.is_pseudo(in_node);
    }

    // Called with cur ending at an out-triangle (walk entered it by a c-link).
    // Returns false when the whole search should stop.
    bool extend() {
        if (!(*visit)(cur)) return true;
        int node = cur.walk.nodes.back();
        if (dual.is_pseudo(node)) return true;
        if (static_cast<int>(cur.c_edges.size()) >= max_length) {
            truncated = true;
            return true;
        }
        std::vector<EdgeId> blacks;
        for (EdgeId x : dual.links(node))
            if (is_black(x)) blacks.push_back(x);
        std::sort(blacks.begin(), blacks.end());
        for (EdgeId b : blacks) {
            int n1 = dual.across(b, node);
            if (n1 == in_node && !dual.is_pseudo(n1)) {
                auto saved = cur;
                cur.connectors.push_back(b);
                cur.walk.links.push_back(b);
                cur.walk.ring = true;
                cur.ring = true;
                (*visit)(cur);
                cur = saved;
                continue;
            }
            if (visited[n1]) continue;
            if (dual.is_pseudo(n1)) {
                auto saved = cur;
                cur.connectors.push_back(b);
                cur.walk.links.push_back(b);
                cur.walk.nodes.push_back(n1);
                cur.ends_at_pseudo = true;
                (*visit)(cur);
                cur = saved;
                continue;
            }
            EdgeId next_c = kNoEdge;
            for (EdgeId x : dual.links(n1))
                if (is_c(x)) next_c = x;
            if (next_c == kNoEdge) continue;  // abandoned or broken triangle
            int n2 = dual.across(next_c, n1);
            if (!dual.is_pseudo(n2) && visited[n2]) continue;
            auto saved = cur;
            visited[n1] = 1;
            if (!dual.is_pseudo(n2)) visited[n2] = 1;
            cur.connectors.push_back(b);
            cur.c_edges.push_back(next_c);
            cur.walk.links.push_back(b);
            cur.walk.links.push_back(next_c);
            cur.walk.nodes.push_back(n1);
            cur.walk.nodes.push_back(n2);
            cur.ends_at_pseudo = dual.is_pseudo(n2);
            extend();
            visited[n1] = 0;
            if (!dual.is_pseudo(n2)) visited[n2] = 0;
            cur = saved;
        }
        return true;
    }
};

} // namespace

void for_each_route(const Tiling& t, Color c, RouteStart from, int max_length,
                    const std::function<bool(const DiamondRoute&)>& visit) {
    RouteSearch s(t, c, max_length);
    s.visit = &visit;
    s.start(from);
    s.extend();
}

std::optional<DiamondRoute> search_diamond_route(const Tiling& t, Color c, const RouteQuery& q) {
    std::optional<DiamondRoute> found;
    std::function<bool(const DiamondRoute&)> visit = [&](const DiamondRoute& r) {
        if (found) return false;
        bool hit = false;
        switch (q.target) {
        case RouteTarget::ring: hit = r.ring; break;
        case RouteTarget::outer: hit = r.ends_at_pseudo; break;
        case RouteTarget::edge: hit = !r.ring && r.c_edges.back() == q.target_edge; break;
        }
        if (hit) found = r;
        return !found;
    };
    for_each_route(t, c, q.from, q.max_length, visit);
    return found;
}

std::vector<DiamondRoute> switchable_routes(const Tiling& t, Color c, int max_length) {
    const auto& emb = t.embedding();
    std::map<std::vector<EdgeId>, DiamondRoute> seen;
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        if (t.color(e) != c) continue;
        auto d = emb.diamond(e);
        std::vector<Vertex> apexes;
        if (d.x >= 0) apexes.push_back(d.x);
        if (d.y) apexes.push_back(*d.y);
        for (Vertex a : apexes)
            for_each_route(t, c, {e, a}, max_length, [&](const DiamondRoute& r) {
                if (r.switchable()) {
                    auto key = r.walk.links;
                    std::sort(key.begin(), key.end());
                    seen.emplace(key, r);
                }
                return true;
            });
    }
    std::vector<DiamondRoute> out;
    for (auto& [k, r] : seen) out.push_back(std::move(r));
    return out;
}

Tiling ecs_diamond_route(const Tiling& t, const DiamondRoute& r) {
    if (t.mode().kind != Mode::single || t.mode().color != r.color)
        throw OperationError("route ECS needs a single(" + color_name(r.color) + ") tiling");
    if (!r.switchable()) throw OperationError("open route with an interior terminal");
    const auto& links = r.walk.links;
    const auto& emb = t.embedding();
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (links[i] < 0 || links[i] >= emb.edge_count()) throw OperationError("stale route: unknown edge");
        std::size_t j = i + 1;
        if (j == links.size()) {
            if (!r.ring) break;
            j = 0;
        }
        bool a = t.color(links[i]) == r.color, b = t.color(links[j]) == r.color;
        if (a == b) throw OperationError("stale route: links do not alternate");
    }
    Tiling out = t;
    for (EdgeId x : links) out.set(x, t.color(x) == r.color ? Color::black : r.color);
    auto check = validate_tiling(out);
    if (!check.ok) throw EngineError("route ECS broke the tiling: " + check.message);
    return out;
}

OrientationSets orientation_sets(const Tiling& t, Color c, RouteStart initial, int max_length) {
    OrientationSets s;
    s.initial = initial;
    RouteSearch search(t, c, max_length);
    search.start(initial);
    const auto& dual = search.dual;
    const auto& emb = t.embedding();
    s.out_triangle = dual.facet(search.cur.walk.nodes[1]);
    if (!dual.is_pseudo(search.in_node)) {
        s.in_triangle = dual.facet(search.in_node);
        s.it.insert(s.in_triangle);
    }
    s.ot.insert(s.out_triangle);
    std::function<bool(const DiamondRoute&)> visit = [&](const DiamondRoute& r) {
        ++s.routes;
        if (r.ring) return true;
        const auto& nodes = r.walk.nodes;
        int last = nodes.back();
        // out-triangle of e_k and the in-triangle it was entered from
        if (r.c_edges.size() >= 2 || dual.is_pseudo(last)) {
            if (r.walk.links.back() == r.c_edges.back()) {
                int in = nodes[nodes.size() - 2];
                if (!dual.is_pseudo(in)) s.it.insert(dual.facet(in));
                if (!dual.is_pseudo(last)) s.ot.insert(dual.facet(last));
                else if (!dual.is_pseudo(in)) s.exceptional.insert(dual.facet(in));
            }
        }
        return true;
    };
    search.visit = &visit;
    search.extend();
    s.truncated = search.truncated;
    for (int f : emb.triangles()) {
        bool o = s.ot.count(f), i = s.it.count(f);
        if (o && i) s.bit.insert(f);
        else if (!o && !i) s.nont.insert(f);
        else s.unit.insert(f);
    }
    return s;
}

} // namespace rgbt
