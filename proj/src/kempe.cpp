#include "rgbt/kempe.hpp"
#include "rgbt/parity_union_find.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

namespace rgbt {

namespace {

std::string edge_text(const Embedding& e, EdgeId x) {
    auto [a, b] = e.endpoints(x);
    return std::to_string(a) + "-" + std::to_string(b);
}

std::vector<EdgeId> abandoned_edges(const Tiling& t) { return t.edges_of(Color::abandoned); }

Tiling with_mode_for(Tiling t) {
    if (t.count(Color::abandoned) > 0) t.set_mode(TilingMode::partial());
    return t;
}

// BFS over c-colored edges accepted by `use`, from `from`; parent map.
std::map<Vertex, Vertex> bfs_color(const Tiling& t, Color c, Vertex from, const std::function<bool(EdgeId)>& use) {
    const auto& emb = t.embedding();
    std::map<Vertex, Vertex> parent{{from, from}};
    std::queue<Vertex> q;
    q.push(from);
    while (!q.empty()) {
        Vertex a = q.front();
        q.pop();
        for (Vertex b : emb.rotation(a)) {
            EdgeId x = emb.edge(a, b);
            if (t.color(x) != c || !use(x) || parent.count(b)) continue;
            parent[b] = a;
            q.push(b);
        }
    }
    return parent;
}

} // namespace

std::string diamond_class_name(DiamondClass k) {
    switch (k) {
    case DiamondClass::TypeA: return "TypeA";
    case DiamondClass::TypeB2: return "TypeB2";
    case DiamondClass::TypeB3: return "TypeB3";
    case DiamondClass::TypeC: return "TypeC";
    }
    return "?";
}

Tiling chain_view(const Tiling& t, EdgeId e, Color c) {
    const auto& emb = t.embedding();
    Tiling v(emb, TilingMode::single(c), Color::black);
    for (EdgeId x = 0; x < emb.edge_count(); ++x)
        if (x == e || t.color(x) == c) v.set(x, c);
    return v;
}

DiamondType classify_diamond(const Tiling& t, EdgeId e) {
    const auto& emb = t.embedding();
    if (e < 0 || e >= emb.edge_count()) throw InputError("unknown edge id " + std::to_string(e));
    if (t.color(e) != Color::abandoned) throw OperationError("edge " + edge_text(emb, e) + " is not abandoned");
    auto d = emb.diamond(e);
    if (!d.y) throw OperationError("edge " + edge_text(emb, e) + " lies on an outer facet");
    DiamondType out;
    out.edge = e;
    out.u = d.u;
    out.v = d.v;
    out.x = d.x;
    out.y = *d.y;
    out.quad_edges = {emb.edge(d.u, d.x), emb.edge(d.x, d.v), emb.edge(d.v, *d.y), emb.edge(*d.y, d.u)};
    for (int i = 0; i < 4; ++i) {
        out.quad[i] = t.color(out.quad_edges[i]);
        if (!is_rgb(out.quad[i])) throw OperationError("diamond of " + edge_text(emb, e) + " holds a second abandoned edge");
    }
    const auto& q = out.quad;
    if (q[0] != q[1] && q[2] != q[3] && third_color(q[0], q[1]) == third_color(q[2], q[3])) {
        out.kind = DiamondClass::TypeC;
        out.completion = third_color(q[0], q[1]);
        return out;
    }
    for (Color k : kRgb)
        if (std::find(q.begin(), q.end(), k) == q.end()) out.chains.push_back(k);
    out.kind = out.chains.size() == 2   ? DiamondClass::TypeA
               : out.chains.size() == 1 ? DiamondClass::TypeB2
                                        : DiamondClass::TypeB3;
    const bool only = t.count(Color::abandoned) == 1;
    for (Color k : out.chains) {
        auto view = chain_view(t, e, k);
        for (int f : {d.facet_x, d.facet_y}) {
            int n = 0;
            for (EdgeId x : emb.facets()[f].edges) n += view.color(x) == k;
            if (n != 1) throw EngineError("chain claim " + color_name(k) + " fails on the diamond of " + edge_text(emb, e));
        }
        if (only && !is_valid(view))
            throw EngineError("single(" + color_name(k) + ") view invalid for " + edge_text(emb, e));
    }
    return out;
}

std::optional<FourColoring> coloring_from_tiling(const Tiling& t) {
    if (t.count(Color::abandoned) > 0) return std::nullopt;
    const auto& emb = t.embedding();
    for (Color c : kRgb) {
        Tiling v(emb, TilingMode::single(c), Color::black);
        for (EdgeId x = 0; x < emb.edge_count(); ++x)
            if (t.color(x) == c) v.set(x, c);
        if (!is_valid(v) || find_mono_odd_cycle(v, c)) continue;
        auto grand = check_grand(v);
        if (!grand) continue;
        auto f = extract_four_coloring(v, *grand);
        if (is_proper(emb, f)) return f;
    }
    return std::nullopt;
}

ChainReport chain_constraints(const Tiling& t, const RegionSpec& region) {
    const auto& emb = t.embedding();
    ChainReport rep;
    auto ab = abandoned_edges(t);
    const bool only = ab.size() == 1;
    std::vector<char> on_omega(emb.vertex_count(), 0);
    for (Vertex w : region.omega) on_omega[w] = 1;
    auto inner_use = [&](EdgeId skip) { return [&, skip](EdgeId x) { return x != skip && region.inner(x); }; };
    auto outer_use = [&](EdgeId x) { return !region.inner(x); };

    for (EdgeId e : ab) {
        if (!region.inner(e)) continue;
        auto dt = classify_diamond(t, e);
        rep.diamonds.push_back(dt);
        if (dt.kind == DiamondClass::TypeC) {
            if (only && !rep.escape) {
                Tiling full = t;
                full.set(e, *dt.completion);
                full.set_mode(TilingMode::rgb());
                if (is_valid(full)) rep.escape = coloring_from_tiling(full);
            }
            continue;
        }
        for (Color k : dt.chains) {
            ChainGroup g;
            g.source = e;
            g.color = k;
            auto from_u = bfs_color(t, k, dt.u, inner_use(e));
            auto from_v = bfs_color(t, k, dt.v, inner_use(e));
            g.internal = from_u.count(dt.v) > 0;
            std::vector<Vertex> A, B;
            for (auto& [w, p] : from_u)
                if (on_omega[w]) A.push_back(w);
            for (auto& [w, p] : from_v)
                if (on_omega[w]) B.push_back(w);
            std::set<std::pair<Vertex, Vertex>> pairs;
            for (Vertex a : A)
                for (Vertex b : B)
                    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
            const int gid = static_cast<int>(rep.groups.size());
            for (auto [a, b] : pairs) {
                KempeConstraint kc;
                kc.color = k;
                kc.source = e;
                kc.from = a;
                kc.to = b;
                kc.group = gid;
                auto par = bfs_color(t, k, a, outer_use);
                if (par.count(b)) {
                    kc.verified = true;
                    for (Vertex w = b;; w = par[w]) {
                        kc.witness.push_back(w);
                        if (w == a) break;
                    }
                    std::reverse(kc.witness.begin(), kc.witness.end());
                }
                g.members.push_back(static_cast<int>(rep.constraints.size()));
                rep.constraints.push_back(std::move(kc));
            }
            g.satisfied = g.internal;
            for (int m : g.members) g.satisfied = g.satisfied || rep.constraints[m].verified;
            if (only) {
                auto view = chain_view(t, e, k);
                g.refutable = !find_mono_odd_cycle(view, k);
                if (g.refutable && !rep.escape) {
                    if (auto grand = check_grand(view)) {
                        auto f = extract_four_coloring(view, *grand);
                        if (is_proper(emb, f)) rep.escape = f;
                    }
                }
            }
            rep.groups.push_back(std::move(g));
        }
    }
    return rep;
}

std::vector<EdgeId> GeneralizedRing::generalized_edges() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < walk.links.size(); ++i)
        if (crossings[i] == Crossing::generalized) out.push_back(walk.links[i]);
    return out;
}

std::set<EdgeId> default_permit(const Tiling& t, const RegionSpec& region, Color c) {
    const auto& emb = t.embedding();
    std::set<EdgeId> out;
    for (EdgeId x = 0; x < emb.edge_count(); ++x) {
        if (!region.edge_in_sigma[x]) continue;
        auto [a, b] = emb.endpoints(x);
        if (t.color(x) == Color::abandoned) out.insert(x);
        else if (t.color(x) == c && (region.contains_td(a) || region.contains_td(b))) out.insert(x);
    }
    return out;
}

namespace {

struct RingSearch {
    const Tiling& t;
    const RegionSpec& region;
    const RingQuery& q;
    DualGraph dual;
    Color c;
    std::array<Color, 2> others;
    std::set<EdgeId> permit;
    std::vector<char> visited;
    int start = -1;
    std::vector<int> nodes;
    std::vector<EdgeId> links;
    std::vector<Crossing> kinds;
    std::vector<GeneralizedRing> found;
    std::set<std::vector<EdgeId>> seen;

    RingSearch(const Tiling& tiling, const RegionSpec& r, const RingQuery& query)
        : t(tiling), region(r), q(query), dual(tiling.embedding()), c(query.color), others(other_colors(query.color)) {}

    std::optional<Crossing> kind_of(EdgeId x) const {
        if (q.inside_sigma && !region.inner(x)) return std::nullopt;
        Color k = t.color(x);
        if (k == others[0] || k == others[1]) return Crossing::normal;
        if ((k == c || k == Color::abandoned) && permit.count(x)) return Crossing::generalized;
        return std::nullopt;
    }

    Color after(EdgeId x, Crossing kind) const {
        Color k = t.color(x);
        if (kind == Crossing::normal) return k == others[0] ? others[1] : others[0];
        return k == c ? Color::abandoned : c;
    }

    bool triangle_ok(int node, EdgeId a, Crossing ka, EdgeId b, Crossing kb) const {
        if (ka == Crossing::normal && kb == Crossing::normal && t.color(a) == t.color(b)) return false;
        std::array<int, 5> cnt{};
        for (EdgeId x : dual.links(node)) {
            Color k = x == a ? after(a, ka) : x == b ? after(b, kb) : t.color(x);
            cnt[static_cast<int>(k)]++;
        }
        if (cnt[static_cast<int>(Color::abandoned)] > 1) return false;
        if (cnt[static_cast<int>(Color::abandoned)] == 0) return cnt[0] == 1 && cnt[1] == 1 && cnt[2] == 1;
        return true;
    }

    bool node_allowed(int node) const {
        if (dual.is_pseudo(node)) return false;
        return !q.inside_sigma || region.face_in_sigma[dual.facet(node)];
    }

    void record(EdgeId closing, Crossing kind) {
        GeneralizedRing r;
        r.color = c;
        r.walk.nodes = nodes;
        r.walk.links = links;
        r.walk.links.push_back(closing);
        r.walk.ring = true;
        r.crossings = kinds;
        r.crossings.push_back(kind);
        const auto& ls = r.walk.links;
        if (q.through != kNoEdge && std::find(ls.begin(), ls.end(), q.through) == ls.end()) return;
        if (q.exit != kNoEdge && std::find(ls.begin(), ls.end(), q.exit) == ls.end()) return;
        auto key = ls;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        found.push_back(std::move(r));
    }

    void dfs(int node, EdgeId in, Crossing kin) {
        if (found.size() >= q.limit) return;
        std::vector<EdgeId> outs(dual.links(node));
        std::sort(outs.begin(), outs.end());
        for (EdgeId b : outs) {
            if (b == in || found.size() >= q.limit) continue;
            auto kb = kind_of(b);
            if (!kb || !triangle_ok(node, in, kin, b, *kb)) continue;
            int m = dual.across(b, node);
            if (!node_allowed(m)) continue;
            if (m == start) {
                if (static_cast<int>(links.size()) + 1 <= q.max_length && links.size() >= 2 &&
                    triangle_ok(start, b, *kb, links[0], kinds[0]))
                    record(b, *kb);
                continue;
            }
            if (visited[m] || static_cast<int>(links.size()) + 1 >= q.max_length) continue;
            visited[m] = 1;
            nodes.push_back(m);
            links.push_back(b);
            kinds.push_back(*kb);
            dfs(m, b, *kb);
            visited[m] = 0;
            nodes.pop_back();
            links.pop_back();
            kinds.pop_back();
        }
    }

    void run() {
        const auto& emb = t.embedding();
        permit = q.permit ? *q.permit : default_permit(t, region, c);
        for (EdgeId x : permit) {
            if (x < 0 || x >= emb.edge_count()) throw InputError("permitted edge id out of range");
            if (!region.edge_in_sigma[x]) throw InputError("permitted edge " + edge_text(emb, x) + " lies outside sigma");
            Color k = t.color(x);
            if (k != c && k != Color::abandoned)
                throw InputError("permitted edge " + edge_text(emb, x) + " is neither " + color_name(c) + " nor abandoned");
        }
        EdgeId first = q.exit != kNoEdge ? q.exit : q.through;
        if (first == kNoEdge) throw InputError("ring query needs an exit or a through edge");
        if (first < 0 || first >= emb.edge_count()) throw InputError("ring query edge id out of range");
        auto kf = kind_of(first);
        if (!kf) return;
        int s = dual.side_node(first, 0), m = dual.side_node(first, 1);
        if (!node_allowed(s) || !node_allowed(m)) return;
        visited.assign(dual.node_count(), 0);
        start = s;
        visited[s] = visited[m] = 1;
        nodes = {s, m};
        links = {first};
        kinds = {*kf};
        dfs(m, first, *kf);
    }
};

} // namespace

std::vector<GeneralizedRing> enumerate_generalized_rings(const Tiling& t, const RegionSpec& region, const RingQuery& q) {
    if (!is_rgb(q.color)) throw InputError("ring color must be red, green or blue");
    RingSearch s(t, region, q);
    s.run();
    return std::move(s.found);
}

std::optional<GeneralizedRing> find_generalized_ring(const Tiling& t, const RegionSpec& region, Color c, EdgeId exit,
                                                     const std::set<EdgeId>& permit) {
    const auto& emb = t.embedding();
    if (exit < 0 || exit >= emb.edge_count()) throw InputError("exit edge id out of range");
    if (std::find(region.omega_edges.begin(), region.omega_edges.end(), exit) == region.omega_edges.end())
        throw InputError("exit edge " + edge_text(emb, exit) + " is not on omega");
    RingQuery q;
    q.color = c;
    q.exit = exit;
    q.permit = permit;
    q.limit = 1;
    auto found = enumerate_generalized_rings(t, region, q);
    if (found.empty()) return std::nullopt;
    return found.front();
}

Tiling ecs_generalized(const Tiling& t, const GeneralizedRing& ring) {
    const auto& emb = t.embedding();
    const auto& w = ring.walk;
    const Color c = ring.color;
    if (!is_rgb(c)) throw OperationError("ring color must be red, green or blue");
    if (w.links.empty() || w.links.size() != w.nodes.size() || ring.crossings.size() != w.links.size())
        throw OperationError("malformed generalized ring");
    DualGraph dual(emb);
    const auto others = other_colors(c);
    Tiling out = t;
    for (std::size_t i = 0; i < w.links.size(); ++i) {
        EdgeId x = w.links[i];
        if (x < 0 || x >= emb.edge_count()) throw OperationError("stale ring: unknown link");
        auto [p, q] = dual.link_nodes(x);
        int a = w.nodes[i], b = w.nodes[(i + 1) % w.nodes.size()];
        if (!((p == a && q == b) || (p == b && q == a))) throw OperationError("stale ring: broken walk");
        Color k = t.color(x);
        if (ring.crossings[i] == Crossing::normal) {
            if (k != others[0] && k != others[1])
                throw OperationError("stale ring: normal crossing of a " + color_name(k) + " edge");
            out.set(x, k == others[0] ? others[1] : others[0]);
        } else {
            if (k != c && k != Color::abandoned)
                throw OperationError("stale ring: generalized crossing of a " + color_name(k) + " edge");
            out.set(x, k == c ? Color::abandoned : c);
        }
    }
    if (out.count(Color::abandoned) > 0) out.set_mode(TilingMode::partial());
    auto check = validate_tiling(out);
    if (!check.ok) throw EngineError("generalized ECS broke the tiling: " + check.message);
    return out;
}

State make_state(const Tiling& t, const RegionSpec& region, std::string label) {
    State s{t, abandoned_edges(t), {}, std::move(label), synonym_canonical(t).key()};
    for (EdgeId x : region.omega_edges) s.omega_colors.push_back(t.color(x));
    return s;
}

std::string equivalence_signature(const Tiling& t, const RegionSpec& region) {
    auto rep = chain_constraints(t, region);
    std::string best;
    std::array<Color, 3> perm = kRgb;
    do {
        auto map = [&](Color k) { return is_rgb(k) ? perm[static_cast<int>(k)] : k; };
        std::string s;
        for (EdgeId x : region.omega_edges) s += color_letter(map(t.color(x)));
        std::vector<std::string> skel;
        for (const auto& kc : rep.constraints)
            if (kc.verified)
                skel.push_back(std::string(1, color_letter(map(kc.color))) + std::to_string(kc.from) + "-" +
                               std::to_string(kc.to));
        std::sort(skel.begin(), skel.end());
        skel.erase(std::unique(skel.begin(), skel.end()), skel.end());
        s += "|";
        for (const auto& k : skel) s += k + ",";
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool equivalent(const Tiling& a, const Tiling& b, const RegionSpec& region) {
    return equivalence_signature(a, region) == equivalence_signature(b, region);
}

bool conjugate(const Tiling& t, const GeneralizedRing& a, const GeneralizedRing& b, const RegionSpec& region) {
    return equivalent(ecs_generalized(t, a), ecs_generalized(t, b), region);
}

bool is_major(const Tiling& t, const GeneralizedRing& r, const RegionSpec& region) {
    auto skeleton = [&](const Tiling& x) {
        std::set<std::tuple<int, Vertex, Vertex>> s;
        for (const auto& kc : chain_constraints(x, region).constraints)
            if (kc.verified) s.insert({static_cast<int>(kc.color), kc.from, kc.to});
        return s;
    };
    return skeleton(t) != skeleton(ecs_generalized(t, r));
}

namespace {

SigmaAdjustment finish_adjustment(const Tiling& before, Tiling after, const RegionSpec& region, Color c) {
    SigmaAdjustment out{std::move(after), std::nullopt, {}, true, std::nullopt, {}};
    for (EdgeId x : region.omega_edges) out.omega_unchanged = out.omega_unchanged && before.color(x) == out.tiling.color(x);
    out.abandoned = abandoned_edges(out.tiling);
    out.odd_cycle = find_mono_odd_cycle(out.tiling, c);
    out.chains = chain_constraints(out.tiling, region);
    return out;
}

} // namespace

SigmaAdjustment sigma_adjust_ring(const Tiling& t, const RegionSpec& region, Color c) {
    for (EdgeId x : region.sigma_inner) {
        RingQuery q;
        q.color = c;
        q.through = x;
        q.inside_sigma = true;
        q.limit = 1;
        auto rings = enumerate_generalized_rings(t, region, q);
        if (rings.empty()) continue;
        auto out = finish_adjustment(t, ecs_generalized(t, rings[0]), region, c);
        if (!out.omega_unchanged) throw EngineError("ring inside sigma changed omega");
        out.ring = rings[0];
        return out;
    }
    throw OperationError("no " + color_name(c) + " ring lies inside sigma");
}

SigmaAdjustment sigma_adjust_retile(const Tiling& t, const RegionSpec& region, Color c,
                                    const std::vector<EdgeId>& c_edges, int max_abandoned) {
    const auto& emb = t.embedding();
    const auto others = other_colors(c);
    std::set<EdgeId> assign(c_edges.begin(), c_edges.end());
    for (EdgeId x : assign) {
        if (x < 0 || x >= emb.edge_count()) throw OperationError("assigned edge id out of range");
        if (!region.inner(x)) throw OperationError("assigned edge " + edge_text(emb, x) + " is not an inner edge of sigma");
    }
    auto color_now = [&](EdgeId x) -> std::optional<Color> {
        if (!region.inner(x)) return t.color(x);
        if (assign.count(x)) return c;
        return std::nullopt;
    };
    for (int f : region.sigma_faces) {
        int k = 0;
        bool exempt = false;
        for (EdgeId x : emb.facets()[f].edges) {
            auto col = color_now(x);
            k += col == c;
            exempt = exempt || col == Color::abandoned;
        }
        if (k > 1 || (k == 0 && !exempt)) {
            const auto& vs = emb.facets()[f].vertices;
            throw OperationError("triangle " + std::to_string(vs[0]) + "-" + std::to_string(vs[1]) + "-" +
                                 std::to_string(vs[2]) + " would hold " + std::to_string(k) + " " + color_name(c) +
                                 " edges");
        }
    }
    std::vector<EdgeId> free;
    for (EdgeId x : region.sigma_inner)
        if (!assign.count(x)) free.push_back(x);
    std::map<EdgeId, std::vector<int>> faces_of;
    for (int f : region.sigma_faces)
        for (EdgeId x : emb.facets()[f].edges) faces_of[x].push_back(f);

    const int E = emb.edge_count();
    auto solve = [&](const std::set<EdgeId>& skip) -> std::optional<Tiling> {
        ParityUnionFind uf(E + 1);
        const int anchor = E;
        std::set<int> touched;
        for (int f : region.sigma_faces) {
            std::vector<EdgeId> nc;
            bool exempt = false;
            for (EdgeId x : emb.facets()[f].edges) {
                if (skip.count(x) || color_now(x) == Color::abandoned) exempt = true;
                if (color_now(x) != c) nc.push_back(x);
            }
            if (exempt) continue;
            for (EdgeId x : nc) {
                if (region.inner(x)) continue;
                if (!uf.relate(x, anchor, t.color(x) == others[1] ? 1 : 0)) return std::nullopt;
            }
            if (!uf.relate(nc[0], nc[1], 1)) return std::nullopt;
        }
        Tiling out = t;
        for (EdgeId x : assign) out.set(x, c);
        for (EdgeId x : free) {
            if (skip.count(x)) {
                out.set(x, Color::abandoned);
                continue;
            }
            int side = uf.find(x) == uf.find(anchor) ? uf.parity(x) ^ uf.parity(anchor) : uf.parity(x);
            out.set(x, others[side]);
        }
        out.set_mode(TilingMode::partial());
        return out;
    };

    const int n = static_cast<int>(free.size());
    for (int size = 0; size <= std::min(max_abandoned, n); ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::set<EdgeId> skip;
            bool ok = true;
            std::set<int> used_faces;
            for (int i : idx) {
                skip.insert(free[i]);
                for (int f : faces_of[free[i]]) {
                    if (!used_faces.insert(f).second) ok = false;
                    for (EdgeId x : emb.facets()[f].edges)
                        if (color_now(x) == Color::abandoned) ok = false;
                }
            }
            if (ok) {
                if (auto res = solve(skip)) {
                    auto check = validate_tiling(*res);
                    if (!check.ok) throw EngineError("sigma re-tiling produced an invalid tiling: " + check.message);
                    return finish_adjustment(t, with_mode_for(*res), region, c);
                }
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw OperationError("no completion of sigma with at most " + std::to_string(max_abandoned) + " abandoned edges");
}

std::string rotation_outcome_name(RotationOutcome o) {
    switch (o) {
    case RotationOutcome::closed: return "closed";
    case RotationOutcome::escaped: return "escaped";
    case RotationOutcome::no_ring: return "no-ring";
    case RotationOutcome::open: return "open";
    }
    return "?";
}

std::vector<Color> default_schedule(const Tiling& t, Template kind) {
    auto ab = abandoned_edges(t);
    if (ab.size() != 1) throw OperationError("rotation needs exactly one abandoned edge");
    auto dt = classify_diamond(t, ab[0]);
    if (dt.kind != DiamondClass::TypeA) throw OperationError("rotation needs a TypeA start, got " + diamond_class_name(dt.kind));
    int steps = kind == Template::Ptg ? 5 : 10;
    std::vector<Color> s;
    for (int i = 0; i < steps; ++i) s.push_back(dt.chains[i % 2]);
    return s;
}

namespace {

std::string word_class(const std::vector<Color>& word) {
    std::string best;
    std::array<Color, 3> perm = kRgb;
    do {
        std::string s;
        for (Color k : word) s += color_letter(is_rgb(k) ? perm[static_cast<int>(k)] : k);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Completes every TypeC abandoned edge; returns the tiling when none is left.
std::optional<Tiling> escape_completion(const Tiling& t) {
    Tiling out = t;
    for (EdgeId e : abandoned_edges(t)) {
        auto dt = classify_diamond(t, e);
        if (dt.kind != DiamondClass::TypeC) return std::nullopt;
        out.set(e, *dt.completion);
    }
    out.set_mode(TilingMode::rgb());
    if (!is_valid(out)) return std::nullopt;
    return out;
}

} // namespace

RotationRun rotate_td(const Tiling& t, const RegionSpec& region, Template kind, std::optional<std::vector<Color>> schedule) {
    const auto& emb = t.embedding();
    if (kind != Template::Ptg && kind != Template::TD55)
        throw OperationError("rotation supports Ptg and TD55, not " + template_name(kind));
    const std::size_t want_td = kind == Template::Ptg ? 1 : 2, want_omega = kind == Template::Ptg ? 5 : 6;
    if (region.td.size() != want_td || region.omega.size() != want_omega)
        throw OperationError("region does not match template " + template_name(kind));
    auto ab = abandoned_edges(t);
    if (ab.size() != 1 || !region.inner(ab[0])) throw OperationError("rotation needs one abandoned inner edge of sigma");
    auto [ea, eb] = emb.endpoints(ab[0]);
    int td_ends = region.contains_td(ea) + region.contains_td(eb);
    if (td_ends != static_cast<int>(want_td))
        throw OperationError("abandoned edge " + edge_text(emb, ab[0]) + " is not at the template start position");

    RotationRun run;
    run.schedule = schedule ? *schedule : default_schedule(t, kind);
    if (classify_diamond(t, ab[0]).kind != DiamondClass::TypeA) throw OperationError("rotation needs a TypeA start");
    run.states.push_back(make_state(t, region, "S0"));
    const std::string initial = word_class(run.states[0].omega_colors);
    Tiling cur = t;
    for (std::size_t i = 0; i < run.schedule.size(); ++i) {
        const Color k = run.schedule[i];
        auto cur_ab = abandoned_edges(cur);
        std::vector<EdgeId> exits;
        for (EdgeId x : region.omega_edges)
            for (EdgeId a : cur_ab) {
                auto d = emb.diamond(a);
                if (!d.y) continue;
                for (Vertex p : {d.x, *d.y})
                    for (Vertex r : {d.u, d.v})
                        if (emb.find_edge(p, r) == x) exits.push_back(x);
            }
        for (EdgeId x : region.omega_edges) exits.push_back(x);
        // a ring moving the abandoned edge beats one that only closes it
        std::optional<GeneralizedRing> ring, fallback;
        std::set<EdgeId> tried;
        for (EdgeId x : exits) {
            if (!tried.insert(x).second) continue;
            RingQuery q;
            q.color = k;
            q.exit = x;
            q.through = cur_ab.empty() ? kNoEdge : cur_ab[0];
            for (auto& r : enumerate_generalized_rings(cur, region, q)) {
                if (r.generalized_edges().size() == 2) {
                    ring = std::move(r);
                    break;
                }
                if (!fallback) fallback = std::move(r);
            }
            if (ring) break;
        }
        if (!ring) ring = std::move(fallback);
        if (!ring) {
            run.outcome = RotationOutcome::no_ring;
            run.note = "no " + color_name(k) + " generalized ring at step " + std::to_string(i + 1);
            return run;
        }
        cur = ecs_generalized(cur, *ring);
        run.rings.push_back(*ring);
        run.states.push_back(make_state(cur, region, "S" + std::to_string(i + 1)));
        const bool last = i + 1 == run.schedule.size();
        if (last && word_class(run.states.back().omega_colors) == initial && !abandoned_edges(cur).empty() &&
            classify_diamond(cur, abandoned_edges(cur)[0]).kind != DiamondClass::TypeC) {
            run.outcome = RotationOutcome::closed;
            return run;
        }
        if (auto full = escape_completion(cur)) {
            run.outcome = RotationOutcome::escaped;
            run.coloring = coloring_from_tiling(*full);
            run.note = run.coloring ? "escape at step " + std::to_string(i + 1)
                                    : "escape at step " + std::to_string(i + 1) + " without a grand odd-free view";
            return run;
        }
    }
    run.outcome = word_class(run.states.back().omega_colors) == initial ? RotationOutcome::closed : RotationOutcome::open;
    return run;
}

StateGraph congruence_explore(const Tiling& t0, const RegionSpec& region, const std::set<Move>& moves,
                              std::size_t max_states) {
    const auto& emb = t0.embedding();
    StateGraph g;
    std::map<std::string, int> index;
    std::set<std::tuple<int, int, std::string>> edge_seen;
    auto add = [&](const Tiling& t) -> int {
        auto key = synonym_canonical(t).key();
        if (auto it = index.find(key); it != index.end()) return it->second;
        if (g.states.size() >= max_states) {
            g.truncated = true;
            return -1;
        }
        int id = static_cast<int>(g.states.size());
        index[key] = id;
        g.states.push_back(make_state(t, region, id == 0 ? "S0" : "X" + std::to_string(id)));
        return id;
    };
    auto link = [&](int from, const Tiling& next, std::string move) {
        int to = add(next);
        if (to < 0 || to == from) return;
        if (edge_seen.insert({from, to, move}).second) g.edges.push_back({from, to, std::move(move)});
    };
    add(t0);
    for (std::size_t head = 0; head < g.states.size(); ++head) {
        const int from = static_cast<int>(head);
        const Tiling cur = g.states[head].tiling;
        for (Color c : kRgb) {
            if (moves.count(Move::canal_ecs)) {
                auto sys = extract_canal_system(cur, c);
                for (std::size_t i = 0; i < sys.lines.size(); ++i) {
                    Tiling next = ecs_canal_line(cur, sys.lines[i]);
                    link(from, next, "canal-ecs " + color_name(c) + " line " + std::to_string(i));
                }
            }
            if (moves.count(Move::generalized_ecs)) {
                for (EdgeId a : abandoned_edges(cur)) {
                    RingQuery q;
                    q.color = c;
                    q.through = a;
                    q.limit = 16;
                    for (const auto& r : enumerate_generalized_rings(cur, region, q))
                        link(from, ecs_generalized(cur, r), "generalized-ecs " + color_name(c) + " via " + edge_text(emb, a));
                }
            }
            if (moves.count(Move::sigma_adjust)) {
                std::set<std::vector<EdgeId>> rings_seen;
                for (EdgeId x : region.sigma_inner) {
                    RingQuery q;
                    q.color = c;
                    q.through = x;
                    q.inside_sigma = true;
                    q.limit = 4;
                    for (const auto& r : enumerate_generalized_rings(cur, region, q)) {
                        auto key = r.walk.links;
                        std::sort(key.begin(), key.end());
                        if (!rings_seen.insert(key).second) continue;
                        link(from, ecs_generalized(cur, r), "sigma-adjust " + color_name(c));
                    }
                }
            }
        }
    }
    ParityUnionFind uf(static_cast<int>(g.states.size()));
    for (const auto& e : g.edges) uf.relate(e.from, e.to, 0);
    std::map<int, int> comp_of_root;
    for (int i = 0; i < static_cast<int>(g.states.size()); ++i) {
        int r = uf.find(i);
        auto [it, fresh] = comp_of_root.emplace(r, static_cast<int>(comp_of_root.size()));
        g.component.push_back(it->second);
    }
    g.components = static_cast<int>(comp_of_root.size());
    return g;
}

} // namespace rgbt
