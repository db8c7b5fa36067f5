#include "rgbt/dual.hpp"

#include <algorithm>
#include <map>

namespace rgbt {

DualGraph::DualGraph(const Embedding& e) {
    facet_node_.assign(e.face_count(), -1);
    for (int f : e.triangles()) {
        facet_node_[f] = static_cast<int>(node_facet_.size());
        node_facet_.push_back(f);
        pseudo_edge_.push_back(kNoEdge);
    }
    triangle_count_ = static_cast<int>(node_facet_.size());
    link_nodes_.assign(e.edge_count(), {-1, -1});
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        auto [f1, f2] = e.edge_facets(x);
        auto node_for = [&](int f) {
            if (e.facets()[f].kind == FacetKind::triangle) return facet_node_[f];
            int id = static_cast<int>(node_facet_.size());
            node_facet_.push_back(f);
            pseudo_edge_.push_back(x);
            return id;
        };
        link_nodes_[x] = {node_for(f1), node_for(f2)};
    }
    node_links_.resize(node_facet_.size());
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        node_links_[link_nodes_[x].first].push_back(x);
        node_links_[link_nodes_[x].second].push_back(x);
    }
}

int DualGraph::across(EdgeId e, int node) const {
    const auto& [a, b] = link_nodes_.at(e);
    if (a == node) return b;
    if (b == node) return a;
    throw EngineError("link does not touch node");
}

bool pairs_non_crossing(const std::vector<std::pair<int, int>>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a > b) std::swap(a, b);
            if (c > d) std::swap(c, d);
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in) return false;
        }
    return true;
}

CanalSystem extract_canal_system(const Tiling& t, Color c) {
    if (!is_rgb(c)) throw InputError("canal color must be red, green or blue");
    const auto& emb = t.embedding();
    DualGraph dual(emb);
    CanalSystem sys;
    sys.color = c;
    auto usable = [&](EdgeId x) {
        Color k = t.color(x);
        return k != c && k != Color::abandoned;
    };
    auto usable_degree = [&](int node) {
        int k = 0;
        for (EdgeId x : dual.links(node)) k += usable(x);
        return k;
    };
    std::vector<char> used(emb.edge_count(), 0);
    auto is_terminal = [&](int node) { return dual.is_pseudo(node) || usable_degree(node) != 2; };

    auto walk_from = [&](int start, EdgeId first) {
        DualWalk w;
        w.nodes.push_back(start);
        int node = start;
        EdgeId link = first;
        while (true) {
            used[link] = 1;
            w.links.push_back(link);
            node = dual.across(link, node);
            if (node == start && !is_terminal(node)) {
                w.ring = true;
                break;
            }
            w.nodes.push_back(node);
            if (is_terminal(node)) break;
            EdgeId next = kNoEdge;
            for (EdgeId x : dual.links(node))
                if (usable(x) && x != link) next = x;
            if (next == kNoEdge || used[next]) throw EngineError("canal walk stuck");
            link = next;
        }
        return w;
    };

    // paths first, from terminal nodes in id order, then rings
    for (int node = 0; node < dual.node_count(); ++node) {
        if (!is_terminal(node)) continue;
        for (EdgeId x : dual.links(node)) {
            if (!usable(x) || used[x]) continue;
            sys.lines.push_back({c, walk_from(node, x)});
        }
    }
    for (EdgeId x = 0; x < emb.edge_count(); ++x) {
        if (!usable(x) || used[x]) continue;
        int start = std::min(dual.link_nodes(x).first, dual.link_nodes(x).second);
        sys.lines.push_back({c, walk_from(start, x)});
    }

    std::map<int, std::vector<std::pair<int, int>>> per_facet;
    std::map<EdgeId, int> position;
    for (int f : emb.outer_facet_indices()) {
        const auto& es = emb.facets()[f].edges;
        for (std::size_t i = 0; i < es.size(); ++i) position[es[i]] = static_cast<int>(i);
    }
    for (const auto& line : sys.lines) {
        if (line.ring()) continue;
        int a = line.walk.nodes.front(), b = line.walk.nodes.back();
        for (int end : {a, b})
            if (!dual.is_pseudo(end)) sys.blocked_ends++;
        if (!dual.is_pseudo(a) || !dual.is_pseudo(b)) continue;
        EdgeId ea = dual.pseudo_edge(a), eb = dual.pseudo_edge(b);
        int fa = emb.facets()[dual.facet(a)].outer_index, fb = emb.facets()[dual.facet(b)].outer_index;
        sys.matching.push_back({ea, eb, fa, fb});
        if (fa == fb) per_facet[fa].push_back({position.at(ea), position.at(eb)});
    }
    for (const auto& [f, pairs] : per_facet)
        if (!pairs_non_crossing(pairs)) sys.non_crossing = false;
    return sys;
}

Tiling ecs_canal_line(const Tiling& t, const CanalLine& line) {
    if (t.mode().kind == Mode::single) throw OperationError("canal ECS needs a second non-c color; tiling is single-color");
    const Color c = line.color;
    const auto& emb = t.embedding();
    DualGraph dual(emb);
    const auto& w = line.walk;
    if (w.links.empty()) throw OperationError("empty canal line");
    if (w.ring ? w.links.size() != w.nodes.size() : w.links.size() + 1 != w.nodes.size())
        throw OperationError("malformed canal line");
    for (std::size_t i = 0; i < w.links.size(); ++i) {
        EdgeId x = w.links[i];
        if (x < 0 || x >= emb.edge_count()) throw OperationError("stale canal line: unknown link");
        Color k = t.color(x);
        if (k == c || !is_rgb(k)) throw OperationError("stale canal line: link crosses a " + color_name(k) + " edge");
        int from = w.nodes[i], to = w.ring ? w.nodes[(i + 1) % w.nodes.size()] : w.nodes[i + 1];
        auto [p, q] = dual.link_nodes(x);
        if (!((p == from && q == to) || (p == to && q == from))) throw OperationError("stale canal line: broken walk");
    }
    auto others = other_colors(c);
    Tiling out = t;
    for (EdgeId x : w.links) out.set(x, t.color(x) == others[0] ? others[1] : others[0]);
    auto check = validate_tiling(out);
    if (!check.ok) throw EngineError("canal ECS broke the tiling: " + check.message);
    return out;
}

} // namespace rgbt
