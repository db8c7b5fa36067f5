#include "doctest.h"

#include "rgbt/corpus.hpp"
#include "rgbt/kempe.hpp"
#include "rgbt/templates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace rgbt;

namespace {

// Partial tilings with exactly `e` abandoned, one per synonym class.
std::vector<Tiling> abandoned_starts(const Embedding& g, EdgeId e) {
    std::vector<std::optional<Color>> fixed(g.edge_count());
    fixed[e] = Color::abandoned;
    std::vector<Tiling> out;
    std::set<std::string> seen;
    for_each_tiling(
        g, TilingMode::partial(),
        [&](const Tiling& t) {
            if (t.count(Color::abandoned) == 1 && seen.insert(synonym_canonical(t).key()).second) out.push_back(t);
            return true;
        },
        fixed);
    return out;
}

// Sets e := k and counts k edges in each triangle holding e.
std::vector<int> k_counts(const Tiling& t, EdgeId e, Color k) {
    const auto& g = t.embedding();
    std::vector<int> out;
    for (const auto& f : g.facets()) {
        if (f.kind != FacetKind::triangle || std::find(f.edges.begin(), f.edges.end(), e) == f.edges.end()) continue;
        int n = 0;
        for (EdgeId x : f.edges) n += (x == e ? k : t.color(x)) == k;
        out.push_back(n);
    }
    return out;
}

bool rainbow_with(const Tiling& t, EdgeId e, Color k) {
    const auto& g = t.embedding();
    for (const auto& f : g.facets()) {
        if (f.kind != FacetKind::triangle || std::find(f.edges.begin(), f.edges.end(), e) == f.edges.end()) continue;
        std::set<Color> cs;
        for (EdgeId x : f.edges) cs.insert(x == e ? k : t.color(x));
        if (cs.size() != 3 || cs.count(Color::abandoned)) return false;
    }
    return true;
}

// Vertices joined to `from` by k edges accepted by `use`.
std::set<Vertex> k_reach(const Tiling& t, Color k, Vertex from, const std::function<bool(EdgeId)>& use) {
    const auto& g = t.embedding();
    std::set<Vertex> seen{from};
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
        Vertex a = stack.back();
        stack.pop_back();
        for (EdgeId x = 0; x < g.edge_count(); ++x) {
            if (t.color(x) != k || !use(x)) continue;
            auto [p, q] = g.endpoints(x);
            Vertex o = p == a ? q : q == a ? p : -1;
            if (o >= 0 && seen.insert(o).second) stack.push_back(o);
        }
    }
    return seen;
}

struct PtgFixture {
    Embedding g = icosahedron();
    RegionSpec region = region_of(g, {0}, 1, 2);
    EdgeId spoke = g.edge(0, 1);
    std::vector<Tiling> starts = abandoned_starts(g, spoke);
};

std::optional<Tiling> rgb_tiling(const Embedding& g) {
    auto f = find_four_coloring(g);
    if (!f) return std::nullopt;
    return induce_tiling(g, *f);
}

} // namespace

TEST_SUITE("kempe-engine") {

TEST_CASE("classification agrees with the triangle oracle") {
    PtgFixture fx;
    std::map<DiamondClass, int> seen;
    for (const auto& t : fx.starts) {
        auto dt = classify_diamond(t, fx.spoke);
        ++seen[dt.kind];
        std::vector<Color> chains;
        std::optional<Color> completion;
        for (Color k : kRgb) {
            auto n = k_counts(t, fx.spoke, k);
            if (std::all_of(n.begin(), n.end(), [](int x) { return x == 1; })) chains.push_back(k);
            if (rainbow_with(t, fx.spoke, k)) completion = k;
        }
        if (completion) {
            CHECK(dt.kind == DiamondClass::TypeC);
            CHECK(dt.completion == completion);
        } else {
            CHECK(dt.chains == chains);
            CHECK(static_cast<int>(dt.kind) == 2 - static_cast<int>(chains.size()));
        }
    }
    CHECK(seen[DiamondClass::TypeA] > 0);
    CHECK(seen[DiamondClass::TypeB2] > 0);
    CHECK(seen[DiamondClass::TypeC] > 0);
}

TEST_CASE("quad patterns") {
    auto g = icosahedron();
    EdgeId e = g.edge(0, 1);
    auto d = g.diamond(e);
    std::array<EdgeId, 4> qe{g.edge(d.u, d.x), g.edge(d.x, d.v), g.edge(d.v, *d.y), g.edge(*d.y, d.u)};
    // a far abandoned edge frees the quad from the equal-parity law
    std::vector<std::optional<Color>> fixed(g.edge_count());
    fixed[e] = Color::abandoned;
    fixed[g.edge(6, 11)] = Color::abandoned;
    auto quad = [&](Color a, Color b, Color c, Color dd) {
        std::array<Color, 4> want{a, b, c, dd};
        for (int i = 0; i < 4; ++i) fixed[qe[i]] = want[i];
        std::optional<Tiling> hit;
        for_each_tiling(
            g, TilingMode::partial(),
            [&](const Tiling& t) {
                if (t.count(Color::abandoned) != 2) return true;
                hit = t;
                return false;
            },
            fixed);
        REQUIRE(hit);
        return classify_diamond(*hit, e);
    };
    auto A = quad(Color::blue, Color::blue, Color::blue, Color::blue);
    CHECK(A.kind == DiamondClass::TypeA);
    CHECK(A.chains == std::vector<Color>{Color::red, Color::green});
    auto B2 = quad(Color::green, Color::green, Color::blue, Color::blue);
    CHECK(B2.kind == DiamondClass::TypeB2);
    CHECK(B2.chains == std::vector<Color>{Color::red});
    auto B2b = quad(Color::red, Color::red, Color::red, Color::green);
    CHECK(B2b.kind == DiamondClass::TypeB2);
    CHECK(B2b.chains == std::vector<Color>{Color::blue});
    auto C = quad(Color::red, Color::green, Color::red, Color::green);
    CHECK(C.kind == DiamondClass::TypeC);
    CHECK(C.completion == Color::blue);
    auto C2 = quad(Color::red, Color::green, Color::green, Color::red);
    CHECK(C2.kind == DiamondClass::TypeC);
    CHECK(C2.completion == Color::blue);
    auto B3 = quad(Color::red, Color::green, Color::blue, Color::blue);
    CHECK(B3.kind == DiamondClass::TypeB3);
    CHECK(B3.chains.empty());

    Tiling rgb = *rgb_tiling(g);
    CHECK_THROWS_AS(classify_diamond(rgb, e), OperationError);
}

TEST_CASE("a lone abandoned edge has an equal-parity quad") {
    for (const auto& g : {icosahedron(), instantiate_template(Template::TD55).graph}) {
        for (EdgeId e = 0; e < g.edge_count(); e += 3) {
            for (const auto& t : abandoned_starts(g, e)) {
                auto dt = classify_diamond(t, e);
                std::array<int, 3> n{};
                for (Color k : dt.quad) ++n[static_cast<int>(k)];
                CHECK(n[0] % 2 == n[1] % 2);
                CHECK(n[1] % 2 == n[2] % 2);
                CHECK(dt.kind != DiamondClass::TypeB3);
            }
        }
    }
}

TEST_CASE("TypeB3 emits no constraint") {
    auto g = icosahedron();
    auto region = region_of(g, {0});
    EdgeId e = g.edge(0, 1);
    auto d = g.diamond(e);
    std::vector<std::optional<Color>> fixed(g.edge_count());
    fixed[e] = Color::abandoned;
    fixed[g.edge(6, 11)] = Color::abandoned;
    fixed[g.edge(d.u, d.x)] = Color::red;
    fixed[g.edge(d.x, d.v)] = Color::green;
    fixed[g.edge(d.v, *d.y)] = Color::blue;
    fixed[g.edge(*d.y, d.u)] = Color::blue;
    int seen = 0;
    for_each_tiling(
        g, TilingMode::partial(),
        [&](const Tiling& t) {
            if (t.count(Color::abandoned) != 2) return true;
            ++seen;
            auto rep = chain_constraints(t, region);
            REQUIRE(rep.diamonds.size() == 1);
            CHECK(rep.diamonds[0].kind == DiamondClass::TypeB3);
            CHECK(rep.constraints.empty());
            CHECK(rep.groups.empty());
            return true;
        },
        fixed);
    CHECK(seen > 0);
}

TEST_CASE("chain constraints match a connectivity oracle") {
    std::vector<std::pair<Embedding, std::vector<Vertex>>> hosts;
    hosts.emplace_back(icosahedron(), std::vector<Vertex>{0});
    auto cubed = instantiate_template(Template::TD5cubed);
    hosts.emplace_back(cubed.graph, cubed.td);
    std::map<DiamondClass, int> verified;
    for (auto& [g, td] : hosts) {
        auto region = region_of(g, td);
        auto outside = [&](EdgeId x) { return !region.inner(x); };
        for (EdgeId e : region.sigma_inner) {
            for (const auto& t : abandoned_starts(g, e)) {
                auto rep = chain_constraints(t, region);
                for (const auto& kc : rep.constraints) {
                    CHECK(kc.from < kc.to);
                    bool joined = k_reach(t, kc.color, kc.from, outside).count(kc.to) > 0;
                    CHECK(kc.verified == joined);
                    if (!kc.verified) continue;
                    ++verified[classify_diamond(t, e).kind];
                    REQUIRE(kc.witness.size() >= 2);
                    CHECK(kc.witness.front() == kc.from);
                    CHECK(kc.witness.back() == kc.to);
                    for (std::size_t i = 0; i + 1 < kc.witness.size(); ++i) {
                        EdgeId x = g.edge(kc.witness[i], kc.witness[i + 1]);
                        CHECK(t.color(x) == kc.color);
                        CHECK_FALSE(region.inner(x));
                    }
                }
                for (const auto& grp : rep.groups) {
                    bool any = grp.internal;
                    for (int m : grp.members) any = any || rep.constraints[m].verified;
                    CHECK(grp.satisfied == any);
                }
                if (rep.escape) CHECK(is_proper(g, *rep.escape));
            }
        }
    }
    CHECK(verified[DiamondClass::TypeA] > 0);
    CHECK(verified[DiamondClass::TypeB2] > 0);
}

TEST_CASE("refutable chains give a verified escape") {
    PtgFixture fx;
    for (const auto& t : fx.starts) {
        auto rep = chain_constraints(t, fx.region);
        bool any = false;
        for (const auto& grp : rep.groups) {
            auto view = chain_view(t, fx.spoke, grp.color);
            CHECK(grp.refutable == !find_mono_odd_cycle(view, grp.color).has_value());
            any = any || grp.refutable;
        }
        for (const auto& dt : rep.diamonds) any = any || dt.kind == DiamondClass::TypeC;
        // the icosahedron is 4-colorable, so every start has a way out
        CHECK(any);
        REQUIRE(rep.escape);
        CHECK(is_proper(fx.g, *rep.escape));
    }
}

TEST_CASE("pentagon ring moves the abandoned spoke to its neighbor") {
    PtgFixture fx;
    EdgeId v2v3 = fx.g.edge(2, 3), v5v1 = fx.g.edge(5, 1), v1v2 = fx.g.edge(1, 2);
    EdgeId vv2 = fx.g.edge(0, 2), vv5 = fx.g.edge(0, 5);
    auto rings = [&](const Tiling& t, Color c, EdgeId exit, EdgeId spoke) {
        RingQuery q;
        q.color = c;
        q.exit = exit;
        q.through = fx.spoke;
        q.permit = std::set<EdgeId>{fx.spoke, spoke};
        return enumerate_generalized_rings(t, fx.region, q);
    };
    int found = 0;
    for (const auto& t : fx.starts) {
        for (Color c : kRgb) {
            if (t.color(vv2) != c) continue;
            for (const auto& r : rings(t, c, v2v3, vv2)) {
                auto ge = r.generalized_edges();
                if (ge.size() != 2) continue;
                ++found;
                std::sort(ge.begin(), ge.end());
                CHECK(ge == std::vector<EdgeId>{std::min(fx.spoke, vv2), std::max(fx.spoke, vv2)});
                CHECK(std::count(r.walk.links.begin(), r.walk.links.end(), v5v1) == 1);
                auto after = ecs_generalized(t, r);
                CHECK(after.edges_of(Color::abandoned) == std::vector<EdgeId>{vv2});
                CHECK(after.color(fx.spoke) == c);
            }
        }
        // leaving through v1v2 moves it the other way
        for (Color c : kRgb) {
            if (t.color(vv5) != c) continue;
            for (const auto& r : rings(t, c, v1v2, vv5))
                if (r.generalized_edges().size() == 2)
                    CHECK(ecs_generalized(t, r).edges_of(Color::abandoned) == std::vector<EdgeId>{vv5});
        }
    }
    CHECK(found > 0);
}

TEST_CASE("ring search with an empty permit") {
    PtgFixture fx;
    auto rgb = *rgb_tiling(fx.g);
    for (EdgeId x : fx.region.omega_edges) {
        Color c = rgb.color(x);
        auto r = find_generalized_ring(rgb, fx.region, c, x, {});
        CHECK_FALSE(r);
    }
    // abandoned start with no permit cannot cross the abandoned spoke
    for (const auto& t : fx.starts) {
        RingQuery q;
        q.color = Color::red;
        q.through = fx.spoke;
        q.permit = std::set<EdgeId>{};
        CHECK(enumerate_generalized_rings(t, fx.region, q).empty());
    }
}

TEST_CASE("ring search validates its inputs") {
    PtgFixture fx;
    const auto& t = fx.starts.front();
    EdgeId far = fx.g.edge(11, 6);
    CHECK_THROWS_AS(find_generalized_ring(t, fx.region, Color::red, fx.region.omega_edges[0], {far}), InputError);
    CHECK_THROWS_AS(find_generalized_ring(t, fx.region, Color::red, fx.spoke, {}), InputError);
}

TEST_CASE("generalized ECS: involution, conserved count, sigma-prime c edges kept") {
    std::vector<std::pair<Embedding, std::vector<Vertex>>> hosts;
    hosts.emplace_back(icosahedron(), std::vector<Vertex>{0});
    auto td55 = instantiate_template(Template::TD55);
    hosts.emplace_back(td55.graph, td55.td);
    int rings = 0;
    for (auto& [g, td] : hosts) {
        auto region = region_of(g, td);
        for (EdgeId e : region.sigma_inner) {
            for (const auto& t : abandoned_starts(g, e)) {
                for (Color c : kRgb) {
                    RingQuery q;
                    q.color = c;
                    q.through = e;
                    q.limit = 8;
                    for (const auto& r : enumerate_generalized_rings(t, region, q)) {
                        ++rings;
                        auto once = ecs_generalized(t, r);
                        CHECK(is_valid(once));
                        CHECK(once.count(c) + once.count(Color::abandoned) == t.count(c) + t.count(Color::abandoned));
                        for (EdgeId x = 0; x < g.edge_count(); ++x)
                            if (!region.edge_in_sigma[x] && t.color(x) == c) CHECK(once.color(x) == c);
                        auto twice = ecs_generalized(once, r);
                        CHECK(twice.colors() == t.colors());
                    }
                }
            }
        }
    }
    CHECK(rings > 100);
}

TEST_CASE("generalized ECS rejects a stale ring") {
    PtgFixture fx;
    const auto& t = fx.starts.front();
    RingQuery q;
    q.color = classify_diamond(t, fx.spoke).chains.empty() ? Color::red : classify_diamond(t, fx.spoke).chains[0];
    q.through = fx.spoke;
    auto rs = enumerate_generalized_rings(t, fx.region, q);
    REQUIRE_FALSE(rs.empty());
    auto after = ecs_generalized(t, rs[0]);
    Tiling stale = after;
    stale.set(fx.spoke, Color::abandoned);
    stale.set(rs[0].walk.links.back(), Color::black);
    CHECK_THROWS_AS(ecs_generalized(stale, rs[0]), OperationError);
}

TEST_CASE("conjugate rings give equivalent results") {
    PtgFixture fx;
    int pairs = 0;
    for (const auto& t : fx.starts) {
        for (Color c : kRgb) {
            RingQuery q;
            q.color = c;
            q.through = fx.spoke;
            auto rs = enumerate_generalized_rings(t, fx.region, q);
            for (std::size_t i = 0; i < rs.size(); ++i)
                for (std::size_t j = i + 1; j < rs.size(); ++j) {
                    if (!conjugate(t, rs[i], rs[j], fx.region)) continue;
                    ++pairs;
                    CHECK(rs[i].walk.links != rs[j].walk.links);
                    CHECK(equivalence_signature(ecs_generalized(t, rs[i]), fx.region) ==
                          equivalence_signature(ecs_generalized(t, rs[j]), fx.region));
                }
        }
    }
    CHECK(pairs > 0);
}

TEST_CASE("equivalence signature ignores color names") {
    PtgFixture fx;
    for (const auto& t : fx.starts) {
        auto p = permute_colors(t, {Color::blue, Color::red, Color::green});
        CHECK(equivalent(t, p, fx.region));
    }
}

TEST_CASE("major rings change the verified skeleton") {
    PtgFixture fx;
    for (const auto& t : fx.starts) {
        RingQuery q;
        q.color = Color::red;
        q.through = fx.spoke;
        for (const auto& r : enumerate_generalized_rings(t, fx.region, q)) {
            auto skel = [&](const Tiling& x) {
                std::set<std::tuple<Color, Vertex, Vertex>> s;
                for (const auto& kc : chain_constraints(x, fx.region).constraints)
                    if (kc.verified) s.insert({kc.color, kc.from, kc.to});
                return s;
            };
            CHECK(is_major(t, r, fx.region) == (skel(t) != skel(ecs_generalized(t, r))));
        }
    }
}

TEST_CASE("sigma adjustment by a ring keeps the border") {
    PtgFixture fx;
    auto rgb = *rgb_tiling(fx.g);
    int done = 0;
    for (Color c : kRgb) {
        try {
            auto adj = sigma_adjust_ring(rgb, fx.region, c);
            ++done;
            CHECK(adj.omega_unchanged);
            for (EdgeId x = 0; x < fx.g.edge_count(); ++x)
                if (!fx.region.inner(x)) CHECK(adj.tiling.color(x) == rgb.color(x));
            REQUIRE(adj.ring);
            for (EdgeId x : adj.ring->walk.links) CHECK(fx.region.inner(x));
            CHECK(is_valid(adj.tiling));
        } catch (const OperationError&) {
        }
    }
    CHECK(done > 0);
}

TEST_CASE("5-cubed re-tiling with the suggested red paths") {
    auto inst = instantiate_template(Template::TD5cubed);
    const auto& g = inst.graph;
    auto region = region_of(g, inst.td);
    auto L = inst.labels;
    auto red_edges = std::vector<EdgeId>{g.edge(L["d"], L["a"]), g.edge(L["a"], L["v2"]), g.edge(L["v3"], L["c"]),
                                         g.edge(L["c"], L["b"]), g.edge(L["b"], L["v5"])};
    // a start whose border carries no red
    std::optional<Tiling> start;
    for_each_four_coloring(g, [&](const FourColoring& f) {
        auto t = induce_tiling(g, f);
        for (const auto& img : std::vector<std::array<Color, 3>>{
                 {Color::red, Color::green, Color::blue}, {Color::green, Color::red, Color::blue},
                 {Color::blue, Color::green, Color::red}}) {
            auto p = permute_colors(t, img);
            bool clear = std::none_of(region.omega_edges.begin(), region.omega_edges.end(),
                                      [&](EdgeId x) { return p.color(x) == Color::red; });
            if (clear) {
                start = p;
                return false;
            }
        }
        return true;
    });
    REQUIRE(start);
    auto adj = sigma_adjust_retile(*start, region, Color::red, red_edges);
    CHECK(adj.omega_unchanged);
    CHECK(is_valid(adj.tiling));
    for (EdgeId x : region.sigma_inner) {
        bool want = std::find(red_edges.begin(), red_edges.end(), x) != red_edges.end();
        CHECK((adj.tiling.color(x) == Color::red) == want);
    }
    for (EdgeId x = 0; x < g.edge_count(); ++x)
        if (!region.inner(x)) CHECK(adj.tiling.color(x) == start->color(x));
    // the odd-cycle check ran and agrees with a direct search
    CHECK(adj.odd_cycle.has_value() == find_mono_odd_cycle(adj.tiling, Color::red).has_value());

    // dropping one path edge leaves a triangle without red
    auto short_edges = red_edges;
    short_edges.pop_back();
    CHECK_THROWS_AS(sigma_adjust_retile(*start, region, Color::red, short_edges), OperationError);
    CHECK_THROWS_AS(sigma_adjust_retile(*start, region, Color::red, {region.omega_edges[0]}), OperationError);
}

TEST_CASE("5-fourth re-tilings: odd red cycles pass through sigma, one is odd-free") {
    auto inst = instantiate_template(Template::TD5fourth);
    const auto& g = inst.graph;
    auto region = region_of(g, inst.td);
    auto start = *rgb_tiling(g);
    const Color c = Color::red;
    // every inner red assignment compatible with the border
    std::vector<EdgeId> inner = region.sigma_inner;
    int tried = 0, odd_free = 0;
    const int n = static_cast<int>(inner.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<EdgeId> pick;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) pick.push_back(inner[i]);
        bool ok = true;
        for (int f : region.sigma_faces) {
            int k = 0;
            for (EdgeId x : g.facets()[f].edges)
                k += region.inner(x) ? std::count(pick.begin(), pick.end(), x) : start.color(x) == c;
            ok = ok && k == 1;
        }
        if (!ok) continue;
        ++tried;
        auto adj = sigma_adjust_retile(start, region, c, pick);
        CHECK(adj.omega_unchanged);
        if (adj.odd_cycle) {
            bool crosses = false;
            const auto& cyc = *adj.odd_cycle;
            for (std::size_t i = 0; i < cyc.size(); ++i)
                crosses = crosses || region.inner(g.edge(cyc[i], cyc[(i + 1) % cyc.size()]));
            CHECK(crosses);
        } else if (adj.abandoned.empty()) {
            if (auto col = coloring_from_tiling(adj.tiling)) {
                CHECK(is_proper(g, *col));
                ++odd_free;
            }
        }
    }
    CHECK(tried > 1);
    CHECK(odd_free > 0);
}

TEST_CASE("rotation on the icosahedron pentagon closes or escapes") {
    PtgFixture fx;
    int runs = 0;
    for (Vertex s = 1; s <= 5; ++s) {
        EdgeId spoke = fx.g.edge(0, s);
        auto region = region_of(fx.g, {0}, s, s % 5 + 1);
        for (const auto& t : abandoned_starts(fx.g, spoke)) {
            if (classify_diamond(t, spoke).kind != DiamondClass::TypeA) {
                CHECK_THROWS_AS(rotate_td(t, region, Template::Ptg), OperationError);
                continue;
            }
            ++runs;
            auto run = rotate_td(t, region, Template::Ptg);
            CHECK(run.states.size() == run.rings.size() + 1);
            if (run.outcome == RotationOutcome::escaped) {
                REQUIRE(run.coloring);
                CHECK(is_proper(fx.g, *run.coloring));
            } else {
                CHECK(run.outcome == RotationOutcome::closed);
            }
        }
    }
    CHECK(runs > 0);
}

TEST_CASE("rotation with an empty schedule returns the start") {
    PtgFixture fx;
    for (const auto& t : fx.starts) {
        if (classify_diamond(t, fx.spoke).kind != DiamondClass::TypeA) continue;
        auto run = rotate_td(t, fx.region, Template::Ptg, std::vector<Color>{});
        REQUIRE(run.states.size() == 1);
        CHECK(run.states[0].label == "S0");
        CHECK(run.states[0].tiling == t);
        CHECK(run.outcome == RotationOutcome::closed);
    }
}

TEST_CASE("rotation refuses unsupported templates") {
    PtgFixture fx;
    CHECK_THROWS_AS(rotate_td(fx.starts.front(), fx.region, Template::HatTD), OperationError);
    CHECK_THROWS_AS(rotate_td(fx.starts.front(), fx.region, Template::TD55), OperationError);
}

TEST_CASE("TD55 runs label their states in order") {
    auto inst = instantiate_template(Template::TD55);
    const auto& g = inst.graph;
    auto region = region_of(g, inst.td, inst.omega[0], inst.omega[1]);
    EdgeId ab = g.edge(inst.labels.at("a"), inst.labels.at("b"));
    int runs = 0;
    for (const auto& t : abandoned_starts(g, ab)) {
        if (classify_diamond(t, ab).kind != DiamondClass::TypeA) continue;
        ++runs;
        auto sched = default_schedule(t, Template::TD55);
        CHECK(sched.size() == 10);
        for (std::size_t i = 0; i + 1 < sched.size(); ++i) CHECK(sched[i] != sched[i + 1]);
        auto run = rotate_td(t, region, Template::TD55);
        for (std::size_t i = 0; i < run.states.size(); ++i) CHECK(run.states[i].label == "S" + std::to_string(i));
        CHECK(run.outcome != RotationOutcome::no_ring);
        if (run.outcome == RotationOutcome::escaped) CHECK(run.coloring);
    }
    CHECK(runs > 0);
}

TEST_CASE("exploration joins all five spoke positions") {
    PtgFixture fx;
    const Tiling* start = nullptr;
    for (const auto& t : fx.starts)
        if (classify_diamond(t, fx.spoke).kind == DiamondClass::TypeA) start = &t;
    REQUIRE(start);
    auto graph = congruence_explore(*start, fx.region, {Move::canal_ecs, Move::generalized_ecs, Move::sigma_adjust});
    CHECK_FALSE(graph.truncated);
    std::set<EdgeId> spokes;
    for (std::size_t i = 0; i < graph.states.size(); ++i) {
        const auto& st = graph.states[i];
        if (graph.component[i] != graph.component[0]) continue;
        for (EdgeId a : st.abandoned) {
            auto [p, q] = fx.g.endpoints(a);
            CHECK((p == 0 || q == 0));
            spokes.insert(a);
        }
        CHECK(boundary_word(st.tiling, fx.region.omega).equal_parity());
    }
    CHECK(spokes.size() == 5);
    CHECK(graph.components == 1);
}

TEST_CASE("exploration with no moves is a singleton") {
    PtgFixture fx;
    auto graph = congruence_explore(fx.starts.front(), fx.region, {});
    CHECK(graph.states.size() == 1);
    CHECK(graph.edges.empty());
    CHECK(graph.components == 1);
}

TEST_CASE("exploration flags the state cap") {
    PtgFixture fx;
    auto graph = congruence_explore(fx.starts.front(), fx.region, {Move::canal_ecs, Move::generalized_ecs}, 3);
    CHECK(graph.states.size() == 3);
    CHECK(graph.truncated);
}

} // TEST_SUITE
