#include "rgbt/suite.hpp"

#include "rgbt/atlas.hpp"
#include "rgbt/corpus.hpp"
#include "rgbt/dual.hpp"
#include "rgbt/kempe.hpp"
#include "rgbt/routes.hpp"
#include "rgbt/surgery.hpp"
#include "rgbt/templates.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace rgbt {

std::string check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    }
    return "?";
}

bool SuiteReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

struct Recorder {
    CheckResult& out;
    long long failures = 0;

    void fail(const std::string& note, const Tiling* t = nullptr, const Embedding* g = nullptr) {
        ++failures;
        if (out.counterexample) return;
        Counterexample ce;
        ce.note = note;
        if (t) {
            ce.graph = format_graph(t->embedding());
            ce.tiling = format_tiling(*t);
        } else if (g) {
            ce.graph = format_graph(*g);
        }
        out.counterexample = ce;
    }
    void expect(bool ok, const std::string& note, const Tiling* t = nullptr, const Embedding* g = nullptr) {
        if (!ok) fail(note, t, g);
    }
};

std::vector<std::string> within(const std::vector<std::string>& names, const SuiteOptions& opt) {
    std::vector<std::string> out;
    for (const auto& n : names)
        if (corpus_graph(n).vertex_count() <= opt.max_vertices) out.push_back(n);
    return out;
}

std::vector<std::string> corpus_mpgs(const SuiteOptions& opt) {
    std::vector<std::string> out;
    for (const auto& n : corpus_names()) {
        auto g = corpus_graph(n);
        if (g.is_mpg() && g.vertex_count() <= opt.max_vertices) out.push_back(n);
    }
    return out;
}

bool odd_free_grand(const Tiling& t) {
    return !find_mono_odd_cycle(t, t.mode().color) && check_grand(t).has_value();
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

// Simple cycles up to max_len, each once, as vertex sequences.
std::vector<std::vector<Vertex>> short_cycles(const Embedding& g, int max_len) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path;
    std::vector<char> on(g.vertex_count(), 0);
    std::function<void(Vertex, Vertex)> go = [&](Vertex s, Vertex v) {
        for (Vertex w : g.rotation(v)) {
            if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (w <= s || on[w] || static_cast<int>(path.size()) >= max_len) continue;
            on[w] = 1;
            path.push_back(w);
            go(s, w);
            path.pop_back();
            on[w] = 0;
        }
    };
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        on[s] = 1;
        go(s, s);
        on[s] = 0;
    }
    return out;
}

// A cycle bounds a tiled disk when one of its sides holds no outer facet.
bool bounds_tiled_disk(const Embedding& g, const std::vector<Vertex>& cycle) {
    std::vector<char> cut(g.edge_count(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) cut[g.edge(cycle[i], cycle[(i + 1) % cycle.size()])] = 1;
    std::vector<int> side(g.face_count(), -1);
    std::vector<char> has_outer;
    for (int f0 = 0; f0 < g.face_count(); ++f0) {
        if (side[f0] >= 0) continue;
        int id = static_cast<int>(has_outer.size());
        has_outer.push_back(0);
        std::vector<int> stack{f0};
        side[f0] = id;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            if (g.facets()[f].kind == FacetKind::outer) has_outer[id] = 1;
            for (EdgeId x : g.facets()[f].edges) {
                if (cut[x]) continue;
                auto [p, q] = g.edge_facets(x);
                int o = p == f ? q : p;
                if (o >= 0 && side[o] < 0) {
                    side[o] = id;
                    stack.push_back(o);
                }
            }
        }
    }
    return std::find(has_outer.begin(), has_outer.end(), 0) != has_outer.end();
}

void coloring_correspondence(Recorder& r, const SuiteOptions& opt) {
    for (const auto& name : corpus_mpgs(opt)) {
        auto g = corpus_graph(name);
        long long tilings = 0, odd_free = 0;
        for_each_tiling(g, TilingMode::rgb(), [&](const Tiling& t) {
            ++tilings;
            odd_free += !has_mono_odd_cycle(t);
            return true;
        });
        long long colorings = static_cast<long long>(count_four_colorings(g));
        r.out.counts[name + ".colorings"] = colorings;
        r.out.counts[name + ".tilings"] = tilings;
        r.out.counts[name + ".odd_free"] = odd_free;
        r.expect(colorings == 4 * odd_free, name + ": colorings != 4 x odd-free rgb tilings", nullptr, &g);
    }
}

void extraction(Recorder& r, const SuiteOptions& opt) {
    auto names = within(corpus_names(), opt);
    long long runs = 0;
    for (const auto& name : names) {
        auto g = corpus_graph(name);
        for (Color c : kRgb)
            for_each_tiling(g, TilingMode::single(c), [&](const Tiling& t) {
                if (find_mono_odd_cycle(t, c)) return true;
                auto grand = check_grand(t);
                if (!grand) return true;
                ++runs;
                try {
                    r.expect(is_proper(g, extract_four_coloring(t, *grand)), name + ": improper extracted coloring", &t);
                } catch (const std::exception& ex) {
                    r.fail(name + ": " + ex.what(), &t);
                }
                return true;
            });
    }
    r.out.counts["extractions"] = runs;
}

void parity(Recorder& r, const SuiteOptions& opt) {
    auto names = within(corpus_names(), opt);
    long long words = 0;
    std::set<std::array<int, 3>> hexagon;
    for (const auto& name : names) {
        auto g = corpus_graph(name);
        std::vector<std::vector<Vertex>> cycles;
        for (auto& c : short_cycles(g, 8))
            if (bounds_tiled_disk(g, c)) cycles.push_back(std::move(c));
        r.out.counts[name + ".cycles"] = static_cast<long long>(cycles.size());
        for_each_tiling(g, TilingMode::rgb(), [&](const Tiling& t) {
            for (const auto& c : cycles) {
                auto w = boundary_word(t, c);
                ++words;
                if (!w.equal_parity()) r.fail(name + ": unequal parity on " + w.text(), &t);
                if (c.size() == 6) hexagon.insert(w.sorted_counts());
            }
            return true;
        });
    }
    const std::set<std::array<int, 3>> allowed{{0, 0, 6}, {0, 2, 4}, {2, 2, 2}};
    for (const auto& h : hexagon)
        r.expect(allowed.count(h) == 1, "hexagon count triple outside the three classes");
    r.out.counts["words"] = words;
    r.out.counts["hexagon_triples"] = static_cast<long long>(hexagon.size());
}

void canal_lemma(Recorder& r, const SuiteOptions& opt) {
    long long lines = 0, systems = 0;
    for (const auto& name : corpus_mpgs(opt)) {
        auto g = corpus_graph(name);
        for_each_tiling(g, TilingMode::rgb(), [&](const Tiling& t) {
            for (Color c : kRgb) {
                auto cs = extract_canal_system(t, c);
                for (const auto& l : cs.lines) {
                    ++lines;
                    r.expect(l.ring(), name + ": open canal line", &t);
                }
            }
            return true;
        });
    }
    for (const auto& name : within({"ico-minus-vertex"}, opt)) {
        auto g = corpus_graph(name);
        auto visit = [&](const Tiling& t) {
            for (Color c : kRgb) {
                if (t.mode().kind == Mode::single && t.mode().color != c) continue;
                auto cs = extract_canal_system(t, c);
                ++systems;
                r.expect(cs.non_crossing, name + ": crossing entrance/exit matching", &t);
            }
            return true;
        };
        for_each_tiling(g, TilingMode::rgb(), visit);
        for (Color c : kRgb) for_each_tiling(g, TilingMode::single(c), visit);
    }
    r.out.counts["lines"] = lines;
    r.out.counts["matchings"] = systems;
}

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

void ecs_involution(Recorder& r, const SuiteOptions& opt) {
    long long canal = 0, routes = 0, generalized = 0;
    auto names = within(corpus_names(), opt);
    for (const auto& name : names) {
        auto g = corpus_graph(name);
        for_each_tiling(g, TilingMode::rgb(), [&](const Tiling& t) {
            for (Color c : kRgb)
                for (const auto& l : extract_canal_system(t, c).lines) {
                    if (!l.ring()) continue;
                    ++canal;
                    auto u = ecs_canal_line(t, l);
                    r.expect(is_valid(u) && ecs_canal_line(u, l) == t, name + ": canal ECS", &t);
                }
            return true;
        });
        for (Color c : kRgb)
            for_each_tiling(g, TilingMode::single(c), [&](const Tiling& t) {
                for (const auto& route : switchable_routes(t, c)) {
                    if (!route.ring) continue;
                    ++routes;
                    auto u = ecs_diamond_route(t, route);
                    r.expect(is_valid(u) && ecs_diamond_route(u, route) == t, name + ": route ECS", &t);
                }
                return true;
            });
    }

    struct Site {
        Embedding g;
        std::vector<Vertex> td;
        std::pair<Vertex, Vertex> abandoned;
    };
    std::vector<Site> sites;
    if (icosahedron().vertex_count() <= opt.max_vertices) sites.push_back({icosahedron(), {0}, {0, 1}});
    auto td55 = instantiate_template(Template::TD55);
    if (td55.graph.vertex_count() <= opt.max_vertices)
        sites.push_back({td55.graph, td55.td, {td55.labels.at("a"), td55.labels.at("b")}});
    for (const auto& s : sites) {
        auto region = region_of(s.g, s.td);
        for (const auto& t : abandoned_starts(s.g, s.g.edge(s.abandoned.first, s.abandoned.second)))
            for (Color c : kRgb)
                for (EdgeId exit : region.omega_edges) {
                    RingQuery q;
                    q.color = c;
                    q.exit = exit;
                    q.limit = 16;
                    for (const auto& ring : enumerate_generalized_rings(t, region, q)) {
                        ++generalized;
                        try {
                            auto u = ecs_generalized(t, ring);
                            r.expect(is_valid(u) && ecs_generalized(u, ring) == t, "generalized ECS", &t);
                        } catch (const std::exception& ex) {
                            r.fail(std::string("generalized ECS: ") + ex.what(), &t);
                        }
                    }
                }
    }
    r.out.counts["canal_rings"] = canal;
    r.out.counts["route_rings"] = routes;
    r.out.counts["generalized_rings"] = generalized;
}

void amending(Recorder& r, const SuiteOptions& opt) {
    if (!within({"heptagon-disk"}, opt).empty()) {
        auto g = heptagon_disk();
        auto t = heptagon_seed_tiling(g);
        auto cyc = find_mono_odd_cycle(t, Color::green);
        r.expect(cyc && cyc->size() == 5, "seed tiling lacks its green 5-cycle", &t);
        long long amending = 0;
        for (const auto& route : switchable_routes(t, Color::green))
            amending += odd_free_grand(ecs_diamond_route(t, route));
        r.out.counts["heptagon.amending_routes"] = amending;
        r.expect(amending >= 1, "no route ECS amends the seeded 5-cycle", &t);
    }
    if (!within({"annulus-7-5"}, opt).empty()) {
        auto g = annulus({7, 5});
        const Color c = Color::green;
        bool witnessed = false;
        for_each_tiling(g, TilingMode::single(c), [&](const Tiling& t0) {
            if (!find_mono_odd_cycle(t0, c)) return true;
            for (const auto& r1 : switchable_routes(t0, c, 12)) {
                auto t1 = ecs_diamond_route(t0, r1);
                if (check_grand(t1)) continue;
                for (const auto& r2 : switchable_routes(t1, c, 12))
                    if (odd_free_grand(ecs_diamond_route(t1, r2))) {
                        witnessed = true;
                        return false;
                    }
            }
            return true;
        });
        r.out.counts["annulus.two_step"] = witnessed;
        r.expect(witnessed, "no two-step amending sequence on the annulus", nullptr, &g);
    }
}

void orientation(Recorder& r, const SuiteOptions& opt) {
    long long runs = 0;
    auto names = within(corpus_names(), opt);
    for (const auto& name : names) {
        auto g = corpus_graph(name);
        std::set<int> tri(g.triangles().begin(), g.triangles().end());
        for (Color c : kRgb)
            for_each_tiling(g, TilingMode::single(c), [&](const Tiling& t) {
                for (auto s : starts_of(t, c)) {
                    auto o = orientation_sets(t, c, s, 40);
                    ++runs;
                    std::set<int> all;
                    std::size_t total = 0;
                    for (const auto* part : {&o.bit, &o.nont, &o.unit}) {
                        all.insert(part->begin(), part->end());
                        total += part->size();
                    }
                    bool ok = all == tri && total == tri.size() && o.ot.count(o.out_triangle) == 1;
                    r.expect(ok, name + ": orientation sets do not partition the triangles", &t);
                }
                return true;
            });
    }
    r.out.counts["runs"] = runs;
}

void rotation(Recorder& r, const SuiteOptions& opt) {
    if (icosahedron().vertex_count() > opt.max_vertices) return;
    auto g = icosahedron();
    const auto plain = symmetry_group(5, SymmetryKind::none);
    long long runs = 0, closed = 0, escaped = 0;
    for (Vertex s = 1; s <= 5; ++s) {
        EdgeId spoke = g.edge(0, s);
        auto region = region_of(g, {0}, s, s % 5 + 1);
        for (const auto& t : abandoned_starts(g, spoke)) {
            if (classify_diamond(t, spoke).kind != DiamondClass::TypeA) continue;
            ++runs;
            auto run = rotate_td(t, region, Template::Ptg);
            if (run.outcome == RotationOutcome::escaped && run.coloring && is_proper(g, *run.coloring)) {
                ++escaped;
            } else if (run.outcome == RotationOutcome::closed &&
                       canonical_word(run.states.back().omega_colors, plain) ==
                           canonical_word(run.states.front().omega_colors, plain)) {
                ++closed;
            } else {
                r.fail("rotation ended " + rotation_outcome_name(run.outcome), &t);
            }
        }
    }
    r.out.counts["runs"] = runs;
    r.out.counts["closed"] = closed;
    r.out.counts["escaped"] = escaped;
    r.expect(runs > 0, "no TypeA start");
}

void atlas_counts(Recorder& r, const SuiteOptions&) {
    auto raw = enumerate_boundary_classes(6, SymmetryKind::none).raw_counts;
    r.out.counts["006"] = raw[{0, 0, 6}];
    r.out.counts["024"] = raw[{0, 2, 4}];
    r.out.counts["222"] = raw[{2, 2, 2}];
    r.expect(raw.size() == 3 && raw[{0, 0, 6}] == 3 && raw[{0, 2, 4}] == 90 && raw[{2, 2, 2}] == 90,
             "raw hexagon counts differ from 3, 90, 90");
    auto klein = enumerate_boundary_classes(6, SymmetryKind::klein4);
    long long yyy = std::count_if(klein.classes.begin(), klein.classes.end(),
                                  [](const BoundaryClass& c) { return c.signature == "YYY"; });
    r.out.counts["yyy_classes"] = yyy;
    r.expect(yyy == 1, "YYY is not a single class");
}

void surgery(Recorder& r, const SuiteOptions& opt) {
    auto inst = instantiate_template(Template::TD55);
    if (inst.graph.vertex_count() > opt.max_vertices) return;
    const auto& L = inst.labels;
    const int n = inst.graph.vertex_count();
    auto res = merge_surgery(inst.graph, {L.at("a"), L.at("b")}, std::pair{L.at("v2"), L.at("v4")},
                             {{L.at("v1"), L.at("v5")}});
    r.out.counts["before"] = n;
    r.out.counts["after"] = res.graph.vertex_count();
    r.expect(res.graph.vertex_count() == n - 3, "merge did not remove three vertices", nullptr, &res.graph);
    r.expect(res.graph.is_mpg() && validate_semi_mpg(res.graph).ok, "merge result is not an MPG", nullptr,
             &res.graph);
    auto f = find_four_coloring(res.graph);
    r.expect(f && is_proper(res.graph, *f), "merge result has no 4-coloring", nullptr, &res.graph);
}

struct Spec {
    const char* name;
    double budget;
    void (*run)(Recorder&, const SuiteOptions&);
};

const Spec kChecks[] = {
    {"coloring-tiling correspondence", 10, coloring_correspondence},
    {"extraction soundness", 30, extraction},
    {"parity lemma", 60, parity},
    {"canal lemma", 30, canal_lemma},
    {"ECS involution", 60, ecs_involution},
    {"odd-cycle amending", 10, amending},
    {"orientation partition", 60, orientation},
    {"rotation closure or escape", 120, rotation},
    {"atlas counts", 5, atlas_counts},
    {"surgery", 10, surgery},
};

} // namespace

std::vector<int> suite_criteria(const std::string& name) {
    if (name == "core") return {1, 2, 3, 10};
    if (name == "canal") return {4, 5, 6, 7};
    if (name == "kempe") return {8};
    if (name == "atlas") return {9};
    if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw InputError("unknown suite '" + name + "' (core, canal, kempe, atlas, all)");
}

CheckResult run_check(int criterion, const SuiteOptions& opt) {
    if (criterion < 1 || criterion > 10) throw InputError("criterion must be 1..10");
    const auto& spec = kChecks[criterion - 1];
    CheckResult out;
    out.criterion = criterion;
    out.name = spec.name;
    out.budget = spec.budget;
    Recorder r{out};
    auto t0 = std::chrono::steady_clock::now();
    try {
        spec.run(r, opt);
    } catch (const std::exception& ex) {
        r.fail(std::string("exception: ") + ex.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.counts["failures"] = r.failures;
    if (r.failures > 0) {
        out.status = CheckStatus::fail;
        out.detail = out.counterexample->note;
    } else if (out.seconds > out.budget) {
        out.status = CheckStatus::fail;
        out.detail = "over the time budget";
    } else if (out.counts.size() == 1) {
        out.status = CheckStatus::skip;
        out.detail = "no corpus graph within --max-vertices";
    }
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = name;
    for (int c : suite_criteria(name)) rep.checks.push_back(run_check(c, opt));
    return rep;
}

} // namespace rgbt
