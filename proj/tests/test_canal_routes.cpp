#include "doctest.h"

#include "rgbt/corpus.hpp"
#include "rgbt/dual.hpp"
#include "rgbt/routes.hpp"
#include "rgbt/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace rgbt;

namespace {

std::vector<Tiling> all_tilings(const Embedding& e, TilingMode mode) {
    return enumerate_tilings(e, mode, 1u << 20);
}

// Facets holding edge x, read straight from the facet lists.
std::vector<int> facets_of(const Embedding& e, EdgeId x) {
    std::vector<int> out;
    for (int f = 0; f < e.face_count(); ++f) {
        const auto& es = e.facets()[f].edges;
        if (std::find(es.begin(), es.end(), x) != es.end()) out.push_back(f);
    }
    return out;
}

bool share_facet(const Embedding& e, EdgeId a, EdgeId b) {
    for (int f : facets_of(e, a)) {
        if (e.facets()[f].kind != FacetKind::triangle) continue;
        const auto& es = e.facets()[f].edges;
        if (std::find(es.begin(), es.end(), b) != es.end()) return true;
    }
    return false;
}

// Independent check of a route against the definition: distinct c-edges,
// consecutive diamonds sharing the connector, which is black.
void check_route_shape(const Tiling& t, const DiamondRoute& r) {
    const auto& e = t.embedding();
    std::set<EdgeId> distinct(r.c_edges.begin(), r.c_edges.end());
    CHECK(distinct.size() == r.c_edges.size());
    for (EdgeId x : r.c_edges) CHECK(t.color(x) == r.color);
    for (std::size_t i = 0; i + 1 < r.c_edges.size(); ++i) {
        EdgeId b = r.connectors.at(i);
        CHECK(t.color(b) != r.color);
        CHECK(share_facet(e, r.c_edges[i], b));
        CHECK(share_facet(e, b, r.c_edges[i + 1]));
    }
    if (r.ring) {
        CHECK(r.connectors.size() == r.c_edges.size());
        CHECK(share_facet(e, r.c_edges.back(), r.connectors.back()));
        CHECK(share_facet(e, r.connectors.back(), r.c_edges.front()));
    }
}

std::vector<RouteStart> starts_of(const Tiling& t, Color c) {
    const auto& e = t.embedding();
    std::vector<RouteStart> out;
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        if (t.color(x) != c) continue;
        auto d = e.diamond(x);
        out.push_back({x, d.x});
        if (d.y) out.push_back({x, *d.y});
    }
    return out;
}

bool odd_free_grand(const Tiling& t) {
    return !find_mono_odd_cycle(t, t.mode().color) && check_grand(t).has_value();
}

} // namespace

TEST_SUITE("canal-routes") {

TEST_CASE("dual graph sizes") {
    auto e = k4();
    DualGraph d(e);
    CHECK(d.node_count() == 4);
    CHECK(d.triangle_count() == 4);
    CHECK(d.link_count() == 6);

    auto s = icosahedron_minus_vertex();
    DualGraph ds(s);
    CHECK(ds.triangle_count() == 15);
    CHECK(ds.node_count() - ds.triangle_count() == 5);
    CHECK(ds.link_count() == s.edge_count());
    for (int n = ds.triangle_count(); n < ds.node_count(); ++n) {
        CHECK(ds.links(n).size() == 1);
        CHECK(ds.pseudo_edge(n) == ds.links(n)[0]);
    }
    for (int n = 0; n < ds.triangle_count(); ++n) CHECK(ds.links(n).size() == 3);
}

TEST_CASE("every dual link crosses the edge its facets share") {
    for (const auto& name : corpus_names()) {
        auto e = corpus_graph(name);
        DualGraph d(e);
        for (EdgeId x = 0; x < e.edge_count(); ++x) {
            auto fs = facets_of(e, x);
            REQUIRE(fs.size() == 2);
            auto [a, b] = d.link_nodes(x);
            std::multiset<int> got{d.facet(a), d.facet(b)}, want(fs.begin(), fs.end());
            CHECK(got == want);
        }
    }
}

TEST_CASE("canal lines on MPGs are rings") {
    for (const auto& name : sweep_mpgs()) {
        auto e = corpus_graph(name);
        for (const auto& t : all_tilings(e, TilingMode::rgb()))
            for (Color c : {Color::red, Color::green, Color::blue}) {
                auto sys = extract_canal_system(t, c);
                for (const auto& line : sys.lines) CHECK(line.ring());
                CHECK(sys.matching.empty());
            }
    }
}

TEST_CASE("canal lines partition the non-c links and alternate") {
    for (const auto& name : {"icosahedron", "ico-minus-vertex", "heptagon-disk", "annulus-7-5"}) {
        auto e = corpus_graph(name);
        auto tilings = enumerate_tilings(e, TilingMode::rgb(), 200);
        REQUIRE(!tilings.empty());
        for (const auto& t : tilings)
            for (Color c : {Color::red, Color::green, Color::blue}) {
                auto sys = extract_canal_system(t, c);
                std::map<EdgeId, int> seen;
                for (const auto& line : sys.lines) {
                    const auto& links = line.walk.links;
                    for (EdgeId x : links) seen[x]++;
                    for (std::size_t i = 0; i + 1 < links.size(); ++i)
                        CHECK(t.color(links[i]) != t.color(links[i + 1]));
                    if (line.ring()) CHECK(t.color(links.front()) != t.color(links.back()));
                }
                int non_c = 0;
                for (EdgeId x = 0; x < e.edge_count(); ++x) non_c += t.color(x) != c;
                CHECK(static_cast<int>(seen.size()) == non_c);
                for (auto& [x, k] : seen) CHECK(k == 1);
                auto again = extract_canal_system(t, c);
                REQUIRE(again.lines.size() == sys.lines.size());
                for (std::size_t i = 0; i < sys.lines.size(); ++i)
                    CHECK(again.lines[i].walk.links == sys.lines[i].walk.links);
            }
    }
}

TEST_CASE("boundary matching on the 5-semi-MPG is non-crossing") {
    auto e = icosahedron_minus_vertex();
    auto outer = e.facets()[e.outer_facet_indices()[0]].edges;
    for (const auto& t : all_tilings(e, TilingMode::rgb()))
        for (Color c : {Color::red, Color::green, Color::blue}) {
            auto sys = extract_canal_system(t, c);
            CHECK(sys.non_crossing);
            CHECK(sys.blocked_ends == 0);
            int boundary_non_c = 0;
            for (EdgeId x : outer) boundary_non_c += t.color(x) != c;
            CHECK(static_cast<int>(sys.matching.size()) * 2 == boundary_non_c);
            // independent interleaving test on positions along the pentagon
            std::vector<std::pair<int, int>> pos;
            for (const auto& m : sys.matching) {
                auto at = [&](EdgeId x) {
                    return static_cast<int>(std::find(outer.begin(), outer.end(), x) - outer.begin());
                };
                int a = at(m.first), b = at(m.second);
                pos.push_back({std::min(a, b), std::max(a, b)});
            }
            for (auto [a, b] : pos)
                for (auto [p, q] : pos) CHECK(!(a < p && p < b && b < q));
        }
}

TEST_CASE("pairs_non_crossing") {
    CHECK(pairs_non_crossing({{0, 3}, {1, 2}}));
    CHECK(pairs_non_crossing({{0, 1}, {2, 3}}));
    CHECK_FALSE(pairs_non_crossing({{0, 2}, {1, 3}}));
}

TEST_CASE("canal ECS is a valid involution fixing c edges") {
    for (const auto& name : {"octahedron", "icosahedron", "ico-minus-vertex"}) {
        auto e = corpus_graph(name);
        for (const auto& t : all_tilings(e, TilingMode::rgb()))
            for (Color c : {Color::red, Color::green, Color::blue})
                for (const auto& line : extract_canal_system(t, c).lines) {
                    auto u = ecs_canal_line(t, line);
                    CHECK(is_valid(u));
                    CHECK(ecs_canal_line(u, line) == t);
                    std::set<EdgeId> crossed(line.walk.links.begin(), line.walk.links.end());
                    for (EdgeId x = 0; x < e.edge_count(); ++x) {
                        if (t.color(x) == c) CHECK(u.color(x) == c);
                        if (!crossed.count(x)) CHECK(u.color(x) == t.color(x));
                    }
                    // diamond 4-cycles avoiding the crossed edges keep their word
                    for (EdgeId x = 0; x < e.edge_count(); ++x) {
                        auto d = e.diamond(x);
                        if (!d.y) continue;
                        std::vector<Vertex> cyc{d.u, d.x, d.v, *d.y};
                        bool disjoint = true;
                        for (int i = 0; i < 4; ++i)
                            disjoint = disjoint && !crossed.count(e.edge(cyc[i], cyc[(i + 1) % 4]));
                        if (disjoint) CHECK(boundary_word(u, cyc).word == boundary_word(t, cyc).word);
                    }
                }
    }
}

TEST_CASE("canal ECS rejects stale lines and single tilings") {
    auto e = icosahedron();
    auto t = enumerate_tilings(e, TilingMode::rgb(), 1).at(0);
    auto line = extract_canal_system(t, Color::red).lines.at(0);
    CHECK_THROWS_AS(ecs_canal_line(single_view(t, Color::red), line), OperationError);
    auto moved = line;
    moved.color = Color::green;
    CHECK_THROWS_AS(ecs_canal_line(t, moved), OperationError);
    moved = line;
    moved.walk.links.pop_back();
    CHECK_THROWS_AS(ecs_canal_line(t, moved), OperationError);
}

TEST_CASE("singleton route has length zero") {
    auto e = k4();
    auto t = enumerate_tilings(e, TilingMode::single(Color::green), 1).at(0);
    auto s = starts_of(t, Color::green).at(0);
    int visits = 0;
    for_each_route(t, Color::green, s, 40, [&](const DiamondRoute& r) {
        if (visits++ == 0) {
            CHECK(r.c_edges.size() == 1);
            CHECK(r.connectors.empty());
            CHECK(r.walk.links.size() == 1);
        }
        return true;
    });
    CHECK(visits >= 1);
    RouteQuery q;
    q.from = s;
    q.target = RouteTarget::edge;
    q.target_edge = s.edge;
    auto r = search_diamond_route(t, Color::green, q);
    REQUIRE(r);
    CHECK(r->c_edges.size() == 1);
}

TEST_CASE("route search rejects a non-c start") {
    auto e = k4();
    auto t = enumerate_tilings(e, TilingMode::single(Color::green), 1).at(0);
    EdgeId black = t.edges_of(Color::black).at(0);
    RouteQuery q;
    q.from = {black, e.diamond(black).x};
    CHECK_THROWS_AS(search_diamond_route(t, Color::green, q), InputError);
}

TEST_CASE("seven-gon disk has a ring through five green edges") {
    auto e = heptagon_disk();
    auto t = heptagon_seed_tiling(e);
    REQUIRE(is_valid(t));
    std::vector<DiamondRoute> five;
    for (const auto& r : switchable_routes(t, Color::green)) {
        check_route_shape(t, r);
        if (r.ring && r.c_edges.size() == 5) five.push_back(r);
    }
    CHECK(five.size() == 1);
    bool found = false;
    for (auto s : starts_of(t, Color::green)) {
        RouteQuery q;
        q.from = s;
        q.target = RouteTarget::ring;
        auto r = search_diamond_route(t, Color::green, q);
        if (r && r->c_edges.size() == 5) found = true;
        if (r) check_route_shape(t, *r);
    }
    CHECK(found);
}

TEST_CASE("route ECS tears the seeded 5-cycle") {
    auto e = heptagon_disk();
    auto t = heptagon_seed_tiling(e);
    auto cyc = find_mono_odd_cycle(t, Color::green);
    REQUIRE(cyc);
    CHECK(cyc->size() == 5);
    int amending = 0;
    for (const auto& r : switchable_routes(t, Color::green)) {
        auto u = ecs_diamond_route(t, r);
        CHECK(is_valid(u));
        CHECK(ecs_diamond_route(u, r) == t);
        if (odd_free_grand(u)) ++amending;
    }
    CHECK(amending >= 1);
}

TEST_CASE("route ECS is a valid involution over the corpus") {
    for (const auto& name : {"k4", "octahedron", "ico-minus-vertex", "heptagon-disk"}) {
        auto e = corpus_graph(name);
        for (Color c : {Color::red, Color::green}) {
            auto tilings = enumerate_tilings(e, TilingMode::single(c), 40);
            for (const auto& t : tilings)
                for (const auto& r : switchable_routes(t, c, 12)) {
                    check_route_shape(t, r);
                    auto u = ecs_diamond_route(t, r);
                    CHECK(is_valid(u));
                    CHECK(ecs_diamond_route(u, r) == t);
                }
        }
    }
}

TEST_CASE("open routes with an interior end are refused") {
    auto e = heptagon_disk();
    auto t = heptagon_seed_tiling(e);
    bool refused = false;
    for (auto s : starts_of(t, Color::green))
        for_each_route(t, Color::green, s, 6, [&](const DiamondRoute& r) {
            if (!r.switchable() && !refused) {
                CHECK_THROWS_AS(ecs_diamond_route(t, r), OperationError);
                refused = true;
            }
            return !refused;
        });
    CHECK(refused);
}

TEST_CASE("annulus reaches grandness in two steps") {
    auto e = annulus({7, 5});
    const Color c = Color::green;
    bool witnessed = false;
    for_each_tiling(e, TilingMode::single(c), [&](const Tiling& t0) {
        if (!find_mono_odd_cycle(t0, c)) return true;
        for (const auto& r1 : switchable_routes(t0, c, 12)) {
            auto t1 = ecs_diamond_route(t0, r1);
            if (check_grand(t1)) continue;
            for (const auto& r2 : switchable_routes(t1, c, 12)) {
                auto t2 = ecs_diamond_route(t1, r2);
                if (odd_free_grand(t2)) {
                    CHECK(is_valid(t1));
                    witnessed = true;
                    return false;
                }
            }
        }
        return true;
    });
    CHECK(witnessed);
}

TEST_CASE("orientation sets partition the triangles") {
    for (const auto& name : {"k4", "octahedron", "ico-minus-vertex", "heptagon-disk"}) {
        auto e = corpus_graph(name);
        std::set<int> tri(e.triangles().begin(), e.triangles().end());
        for (const auto& t : enumerate_tilings(e, TilingMode::single(Color::red), 10))
            for (auto s : starts_of(t, Color::red)) {
                auto o = orientation_sets(t, Color::red, s);
                CHECK_FALSE(o.truncated);
                CHECK(o.ot.count(o.out_triangle));
                std::set<int> all;
                std::size_t total = 0;
                for (const auto* part : {&o.bit, &o.nont, &o.unit}) {
                    all.insert(part->begin(), part->end());
                    total += part->size();
                }
                CHECK(all == tri);
                CHECK(total == tri.size());
                for (int f : o.bit) CHECK((o.ot.count(f) && o.it.count(f)));
                for (int f : o.nont) CHECK((!o.ot.count(f) && !o.it.count(f)));
            }
    }
}

TEST_CASE("routes never reach a NonT triangle") {
    auto e = heptagon_disk();
    bool tried = false;
    for (const auto& t : enumerate_tilings(e, TilingMode::single(Color::green), 30))
        for (auto s : starts_of(t, Color::green)) {
            auto o = orientation_sets(t, Color::green, s);
            for (int f : o.nont)
                for (EdgeId x : e.facets()[f].edges) {
                    if (t.color(x) != Color::green) continue;
                    RouteQuery q;
                    q.from = s;
                    q.target = RouteTarget::edge;
                    q.target_edge = x;
                    CHECK_FALSE(search_diamond_route(t, Color::green, q));
                    tried = true;
                }
        }
    CHECK(tried);
}

TEST_CASE("a boundary start reaches every triangle") {
    // 7-semi-MPG with interior vertices 7..9, found by search
    auto e = Embedding::from_faces(10,
                                   {{0, 1, 7}, {0, 7, 9}, {0, 9, 6}, {2, 3, 8}, {3, 4, 7}, {3, 7, 8},
                                    {4, 5, 9}, {4, 9, 7}, {5, 6, 9}, {1, 8, 2}, {1, 8, 7}},
                                   {{0, 1, 2, 3, 4, 5, 6}});
    Tiling t(e, TilingMode::single(Color::green), Color::black);
    for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 9}, {1, 8}, {3, 8}, {4, 7}, {5, 9}})
        t.set(e.edge(a, b), Color::green);
    REQUIRE(is_valid(t));
    auto o = orientation_sets(t, Color::green, {e.edge(0, 1), 7});
    CHECK(o.in_triangle == -1);
    CHECK(o.ot.size() == e.triangles().size());
    CHECK(o.nont.empty());
}

TEST_CASE("no interior start reaches every triangle of an MPG") {
    // the in-triangle of the initial edge can only be entered through that edge
    auto e = icosahedron();
    for (const auto& t : enumerate_tilings(e, TilingMode::single(Color::red), 20))
        for (auto s : starts_of(t, Color::red)) {
            auto o = orientation_sets(t, Color::red, s);
            CHECK_FALSE(o.ot.count(o.in_triangle));
        }
}

TEST_CASE("exceptional in-triangles sit next to the boundary") {
    auto e = heptagon_disk();
    bool exceptional = false;
    for_each_tiling(e, TilingMode::single(Color::green), [&](const Tiling& t) {
        for (auto s : starts_of(t, Color::green)) {
            auto o = orientation_sets(t, Color::green, s);
            for (int f : o.exceptional) {
                exceptional = true;
                CHECK(o.it.count(f));
                bool green_on_outer = false;
                for (EdgeId x : e.facets()[f].edges)
                    green_on_outer = green_on_outer || (t.color(x) == Color::green && e.on_outer(x));
                CHECK(green_on_outer);
            }
        }
        return !exceptional;
    });
    CHECK(exceptional);
}

} // TEST_SUITE
