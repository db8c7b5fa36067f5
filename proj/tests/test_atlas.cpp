#include "doctest.h"

#include "rgbt/atlas.hpp"
#include "rgbt/corpus.hpp"
#include "rgbt/templates.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace rgbt;

namespace {

// Every word of length n over three letters, straight from the digits.
std::vector<std::string> all_words(int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : {'r', 'g', 'b'}) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

std::array<int, 3> counts_of(const std::string& w) {
    std::array<int, 3> n{int(std::count(w.begin(), w.end(), 'r')), int(std::count(w.begin(), w.end(), 'g')),
                         int(std::count(w.begin(), w.end(), 'b'))};
    std::sort(n.begin(), n.end());
    return n;
}

bool parity_ok(const std::string& w) {
    auto n = counts_of(w);
    return n[0] % 2 == n[1] % 2 && n[1] % 2 == n[2] % 2;
}

struct Td55 {
    // the bare disk plus a cap carries both TypeA shapes at ab
    TemplateInstance inst = instantiate_template(Template::TD55, 0);
    RegionSpec region = region_of(inst.graph, inst.td, inst.omega[0], inst.omega[1]);

    Atlas build(Provenance p) const {
        AtlasOptions o;
        o.provenance = p;
        o.symmetry = SymmetryKind::klein4;
        return build_atlas(inst.graph, region, o);
    }
};

} // namespace

TEST_SUITE("atlas") {

TEST_CASE("raw equal-parity hexagon words") {
    std::map<std::array<int, 3>, int> oracle;
    for (const auto& w : all_words(6))
        if (parity_ok(w)) ++oracle[counts_of(w)];
    auto be = enumerate_boundary_classes(6, SymmetryKind::none);
    CHECK(be.raw_counts == oracle);
    CHECK(be.raw_counts.size() == 3);
    CHECK(be.raw_counts[{0, 0, 6}] == 3);
    CHECK(be.raw_counts[{0, 2, 4}] == 90);
    CHECK(be.raw_counts[{2, 2, 2}] == 90);
}

TEST_CASE("a triangle boundary must be rainbow") {
    auto be = enumerate_boundary_classes(3, SymmetryKind::none);
    REQUIRE(be.raw_counts.size() == 1);
    CHECK(be.raw_counts.begin()->first == std::array<int, 3>{1, 1, 1});
    CHECK(be.raw_counts.begin()->second == 6);
    CHECK(be.classes.size() == 1);
}

TEST_CASE("YYY is a single class under synonyms and the Klein group") {
    auto count_yyy = [](SymmetryKind k) {
        auto be = enumerate_boundary_classes(6, k);
        return std::count_if(be.classes.begin(), be.classes.end(),
                             [](const BoundaryClass& c) { return c.signature == "YYY"; });
    };
    CHECK(count_yyy(SymmetryKind::klein4) == 1);
    CHECK(count_yyy(SymmetryKind::dihedral) == 1);
    // the two matchings of the hexagon stay apart without position symmetry
    CHECK(count_yyy(SymmetryKind::none) == 2);
    auto be = enumerate_boundary_classes(6, SymmetryKind::klein4);
    std::set<std::string> sigs;
    for (const auto& c : be.classes)
        if (c.counts == std::array<int, 3>{2, 2, 2}) sigs.insert(c.signature);
    CHECK(sigs == std::set<std::string>{"NNN", "NNY", "NYY", "YYY"});
}

TEST_CASE("orbits partition the equal-parity words") {
    for (int n : {4, 5, 6, 7}) {
        for (auto k : {SymmetryKind::none, SymmetryKind::cyclic, SymmetryKind::dihedral, SymmetryKind::klein4}) {
            if (k == SymmetryKind::klein4 && n % 2) {
                CHECK_THROWS_AS(enumerate_boundary_classes(n, k), InputError);
                continue;
            }
            auto be = enumerate_boundary_classes(n, k);
            auto group = symmetry_group(n, k);
            std::set<std::string> seen;
            std::size_t total = 0;
            for (const auto& c : be.classes) {
                for (const auto& m : c.members) {
                    CHECK(seen.insert(m).second);
                    std::vector<Color> w;
                    for (char ch : m) w.push_back(parse_color_name(std::string(1, ch)));
                    CHECK(canonical_word(w, group) == c.representative);
                }
                total += c.members.size();
            }
            std::size_t oracle = 0;
            for (const auto& w : all_words(n)) oracle += parity_ok(w);
            CHECK(total == oracle);
        }
    }
}

TEST_CASE("symmetry groups are closed") {
    for (int n : {5, 6, 8}) {
        for (auto k : {SymmetryKind::cyclic, SymmetryKind::dihedral, SymmetryKind::klein4}) {
            if (k == SymmetryKind::klein4 && n % 2) continue;
            auto g = symmetry_group(n, k);
            std::set<PositionMap> set(g.begin(), g.end());
            CHECK(set.size() == g.size());
            for (const auto& a : g)
                for (const auto& b : g) {
                    PositionMap ab(n);
                    for (int i = 0; i < n; ++i) ab[i] = a[b[i]];
                    CHECK(set.count(ab) == 1);
                }
        }
    }
    CHECK(symmetry_group(6, SymmetryKind::klein4).size() == 4);
    CHECK(symmetry_group(5, SymmetryKind::dihedral).size() == 10);
    CHECK_THROWS_AS(symmetry_group(2, SymmetryKind::none), InputError);
    CHECK_THROWS_AS(parse_symmetry("mirror"), InputError);
}

TEST_CASE("TD55 primary atlas holds both catalog shapes") {
    Td55 h;
    auto a = h.build(Provenance::primary);
    CHECK(a.group.size() == 4);
    std::set<std::string> labels;
    for (const auto& e : a.entries) {
        labels.insert(e.label);
        CHECK(equal_parity_word(std::vector<Color>(e.boundary.size(), Color::red)) == (e.boundary.size() % 2 == 0));
        auto c = e.counts;
        CHECK(c[0] % 2 == c[1] % 2);
        CHECK(c[1] % 2 == c[2] % 2);
        CHECK(e.abandoned.size() == 1);
        CHECK(e.kinds.front() != "TypeC");
        // the witness really is such a tiling
        Tiling t(h.inst.graph, TilingMode::partial(), e.witness);
        CHECK(is_valid(t));
        CHECK(t.count(Color::abandoned) == 1);
    }
    CHECK(labels.count("T_alpha") == 1);
    CHECK(labels.count("T_beta") == 1);
    for (const auto& e : a.entries) {
        if (e.label == "T_alpha") CHECK(e.signature == "NNN");
        if (e.label == "T_beta") CHECK(e.signature == "NYY");
        if (e.label == "T_alpha" || e.label == "T_beta") {
            CHECK(e.abandoned == std::vector<std::string>{"t0-t1"});
            CHECK(e.kinds == std::vector<std::string>{"TypeA"});
        }
    }
}

TEST_CASE("atlas build is deterministic") {
    Td55 h;
    auto a = h.build(Provenance::primary), b = h.build(Provenance::primary);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].key == b.entries[i].key);
        CHECK(a.entries[i].label == b.entries[i].label);
    }
    CHECK(render_atlas_table(a) == render_atlas_table(b));
}

TEST_CASE("pentagon tilings of sigma form one class with four edges of one color") {
    auto g = icosahedron();
    auto region = region_of(g, {0});
    AtlasOptions o;
    o.provenance = Provenance::four;
    auto a = build_atlas(g, region, o);
    REQUIRE(a.entries.size() == 1);
    const auto& e = a.entries[0];
    CHECK(e.abandoned.empty());
    Tiling t(g, TilingMode::partial(), e.witness);
    int four = 0;
    for (Color c : kRgb) {
        int spokes = 0, rim = 0;
        for (Vertex v = 1; v <= 5; ++v) spokes += t.color(0, v) == c;
        for (EdgeId x : region.omega_edges) rim += t.color(x) == c;
        if (spokes == 1 && rim == 3) ++four;
        CHECK(2 * spokes + rim == 5);
    }
    CHECK(four == 1);
}

TEST_CASE("secondary and tertiary entries carry derivations") {
    Td55 h;
    auto prim = h.build(Provenance::primary);
    std::set<std::string> primary_labels;
    for (const auto& e : prim.entries) primary_labels.insert(e.label);
    for (auto p : {Provenance::secondary, Provenance::tertiary}) {
        auto a = h.build(p);
        CHECK(a.entries.size() >= prim.entries.size());
        for (const auto& e : a.entries) {
            REQUIRE_FALSE(e.derivation.empty());
            CHECK(primary_labels.count(e.derivation.front()) == 1);
            if (e.provenance == Provenance::primary) CHECK(e.derivation.size() == 1);
            else CHECK(e.derivation.size() >= 2);
            if (e.provenance == Provenance::tertiary) CHECK(e.abandoned.size() >= 2);
            Tiling t(h.inst.graph, TilingMode::partial(), e.witness);
            CHECK(is_valid(t));
        }
        if (p == Provenance::tertiary) {
            bool multi = std::any_of(a.entries.begin(), a.entries.end(),
                                     [](const AtlasEntry& e) { return e.provenance == Provenance::tertiary; });
            CHECK(multi);
        }
    }
}

TEST_CASE("atlas caps and empty sigma") {
    Td55 h;
    AtlasOptions o;
    o.provenance = Provenance::secondary;
    o.max_states = 5;
    CHECK_THROWS_AS(build_atlas(h.inst.graph, h.region, o), OperationError);
    o.provenance = Provenance::primary;
    o.max_tilings = 3;
    CHECK_THROWS_AS(build_atlas(h.inst.graph, h.region, o), OperationError);
    CHECK_THROWS_AS(build_atlas(h.inst.graph, RegionSpec{}, AtlasOptions{}), InputError);
    CHECK_THROWS_AS(region_of(h.inst.graph, {}), OperationError);
}

TEST_CASE("intersections") {
    Td55 h;
    auto prim = h.build(Provenance::primary);
    auto self = intersect_atlases(prim, prim);
    for (std::size_t i = 0; i < prim.entries.size(); ++i) {
        bool found = std::any_of(self.full.begin(), self.full.end(),
                                 [&](const AtlasMatch& m) { return m.a == int(i) && m.b == int(i); });
        CHECK(found);
    }

    // different count classes never meet
    Atlas x, y;
    x.omega_size = y.omega_size = 6;
    AtlasEntry ex, ey;
    ex.boundary = "bbbbbb";
    ey.boundary = "bgrbgr";
    x.entries.push_back(ex);
    y.entries.push_back(ey);
    auto none = intersect_atlases(x, y);
    CHECK(none.boundary.empty());
    CHECK(none.full.empty());

    // the host is 4-colorable, so boundary classes are shared
    auto four = h.build(Provenance::four);
    auto both = intersect_atlases(prim, four);
    CHECK_FALSE(both.boundary.empty());
    CHECK(both.full.empty());

    auto ico = icosahedron();
    AtlasOptions o;
    o.provenance = Provenance::four;
    auto other = build_atlas(ico, region_of(ico, {0}), o);
    CHECK_THROWS_AS(intersect_atlases(prim, other), InputError);
}

TEST_CASE("table and DOT renderers") {
    Td55 h;
    auto a = h.build(Provenance::secondary);
    auto table = render_atlas_table(a);
    CHECK(std::count(table.begin(), table.end(), '\n') == static_cast<long>(a.entries.size() + 2));
    CHECK(table.find("T_alpha") != std::string::npos);
    auto dot = render_atlas_dot(a);
    CHECK(dot.rfind("digraph atlas {", 0) == 0);
    CHECK(dot.find("T_beta") != std::string::npos);
}

} // TEST_SUITE
