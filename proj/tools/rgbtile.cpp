#include "rgbt/atlas.hpp"
#include "rgbt/corpus.hpp"
#include "rgbt/export.hpp"
#include "rgbt/kempe.hpp"
#include "rgbt/routes.hpp"
#include "rgbt/suite.hpp"
#include "rgbt/surgery.hpp"
#include "rgbt/templates.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rgbt;

namespace {

struct Options {
    std::string format = "json";
    std::string out;
    std::string graph;
    std::string tiling;
    std::string mode = "rgb";
    std::string color = "red";
    std::size_t limit = 0;
    bool count = false;
    int max_vertices = 20;
    std::uint64_t seed = 0;
    int threads = 1;
    bool timing = false;

    std::string edge, td, start, next, permit, c_edges, schedule, kind = "canal", target = "ring";
    std::string remove, merge, add, moves = "canal,generalized", provenance = "primary", sym = "klein4";
    std::string other;
    int apex = -1;
    int index = 0;
    int n = 0;
    int max_length = 40;
    std::size_t max_states = 2000;
    std::string suite;
};

// Exit status 1: the command ran but the property fails or nothing exists.
struct Negative {
    Json body;
    std::string text;
};

void emit(const Options& o, const std::string& s) {
    if (o.out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << s;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

Embedding load(const std::string& spec) {
    if (spec.empty()) throw InputError("a graph file or corpus name is required");
    if (std::filesystem::exists(spec)) return load_graph(spec);
    auto names = corpus_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) return corpus_graph(spec);
    throw InputError("no such graph file or corpus name '" + spec + "'");
}

Tiling load_t(const Options& o, const Embedding& g) {
    if (o.tiling.empty()) throw InputError("a tiling file is required");
    return load_tiling(o.tiling, g);
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw InputError("expected a comma separated vertex list, got '" + s + "'");
        }
    }
    return out;
}

std::pair<Vertex, Vertex> vertex_pair(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) throw InputError("expected an edge u-v, got '" + s + "'");
    auto a = int_list(s.substr(0, dash)), b = int_list(s.substr(dash + 1));
    if (a.size() != 1 || b.size() != 1) throw InputError("expected an edge u-v, got '" + s + "'");
    return {a[0], b[0]};
}

EdgeId edge_of(const Embedding& g, const std::string& s) {
    auto [a, b] = vertex_pair(s);
    return g.edge(a, b);
}

std::vector<EdgeId> edge_list(const Embedding& g, const std::string& s) {
    std::vector<EdgeId> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(edge_of(g, item));
    return out;
}

Color color_of(const Options& o) {
    Color c = parse_color_name(o.color);
    if (!is_rgb(c)) throw InputError("--color must be red, green or blue");
    return c;
}

TilingMode mode_of(const Options& o) {
    if (o.mode == "single") return TilingMode::single(color_of(o));
    return parse_mode(o.mode);
}

RegionSpec region_from(const Options& o, const Embedding& g) {
    if (o.td.empty()) throw InputError("--td is required");
    std::optional<Vertex> start, next;
    if (!o.start.empty()) start = int_list(o.start).at(0);
    if (!o.next.empty()) next = int_list(o.next).at(0);
    return region_of(g, int_list(o.td), start, next);
}

void emit_tiling(const Options& o, const Tiling& t, Json extra = {}) {
    if (o.format == "text") return emit(o, format_tiling(t));
    if (o.format == "dot") return emit(o, dot_of(t));
    Json j = extra.is_null() ? Json::object() : extra;
    j["tiling"] = json_of(t);
    emit_json(o, j);
}

int cmd_validate(const Options& o) {
    std::ifstream f(o.graph);
    std::string text;
    if (f) {
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        text = format_graph(load(o.graph));
    }
    auto rep = inspect(parse_graph_text(text));
    if (o.format == "text") {
        emit(o, std::string(rep.ok ? "ok" : "invalid") + (rep.is_mpg ? " mpg" : " semi-mpg") + " V=" +
                    std::to_string(rep.vertex_count) + " E=" + std::to_string(rep.edge_count) + "\n");
    } else {
        emit_json(o, json_of(rep));
    }
    return rep.ok ? 0 : 1;
}

int cmd_tile(const Options& o) {
    auto g = load(o.graph);
    auto mode = mode_of(o);
    if (o.count) {
        auto n = count_tilings(g, mode);
        emit_json(o, {{"mode", mode.name()}, {"count", n}});
        return n > 0 ? 0 : 1;
    }
    auto ts = enumerate_tilings(g, mode, o.limit == 0 ? 1 : o.limit);
    if (ts.empty()) throw Negative{{{"mode", mode.name()}, {"tilings", Json::array()}}, "no tiling\n"};
    if (o.format == "text") {
        std::string s;
        for (const auto& t : ts) s += format_tiling(t);
        return emit(o, s), 0;
    }
    if (o.format == "dot") return emit(o, dot_of(ts.front())), 0;
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back(json_of(t));
    emit_json(o, {{"mode", mode.name()}, {"tilings", arr}});
    return 0;
}

int cmd_color(const Options& o) {
    auto g = load(o.graph);
    if (o.count) {
        auto n = count_four_colorings(g);
        emit_json(o, {{"count", n}});
        return n > 0 ? 0 : 1;
    }
    auto f = find_four_coloring(g);
    if (!f) throw Negative{{{"coloring", nullptr}}, "no 4-coloring\n"};
    if (o.format == "text") {
        std::string s;
        for (std::size_t v = 0; v < f->size(); ++v) s += std::to_string(v) + " " + std::to_string((*f)[v]) + "\n";
        return emit(o, s), 0;
    }
    emit_json(o, {{"coloring", *f}, {"tiling", json_of(induce_tiling(g, *f))}});
    return 0;
}

int cmd_odd_cycle(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    Color c = t.mode().kind == Mode::single ? t.mode().color : color_of(o);
    auto cyc = find_mono_odd_cycle(t, c);
    if (!cyc) throw Negative{{{"color", color_name(c)}, {"cycle", nullptr}}, "no odd cycle\n"};
    emit_json(o, {{"color", color_name(c)}, {"cycle", *cyc}});
    return 0;
}

int cmd_grand(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    auto side = check_grand(t);
    if (!side) throw Negative{{{"grand", false}}, "not grand\n"};
    Json j{{"grand", true}, {"sides", *side}};
    if (!find_mono_odd_cycle(t, t.mode().color)) j["coloring"] = extract_four_coloring(t, *side);
    emit_json(o, j);
    return 0;
}

int cmd_complete(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    try {
        emit_tiling(o, complete_to_rgb(t));
        return 0;
    } catch (const CompletionError& ex) {
        Json cyc = Json::array();
        for (EdgeId x : ex.cycle()) cyc.push_back(json_edge(g, x));
        throw Negative{{{"error", ex.what()}, {"conflict_cycle", cyc}}, std::string(ex.what()) + "\n"};
    }
}

int cmd_canals(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    auto cs = extract_canal_system(t, t.mode().kind == Mode::single ? t.mode().color : color_of(o));
    if (o.format == "dot") {
        std::set<EdgeId> marked;
        for (const auto& l : cs.lines) marked.insert(l.walk.links.begin(), l.walk.links.end());
        return emit(o, dot_of(t, marked)), 0;
    }
    emit_json(o, json_of(g, cs));
    return 0;
}

RouteStart route_start(const Options& o, const Embedding& g) {
    EdgeId e = edge_of(g, o.edge);
    auto d = g.diamond(e);
    Vertex apex = o.apex >= 0 ? o.apex : d.x;
    if (apex != d.x && (!d.y || apex != *d.y)) throw InputError("--apex is not an apex of that edge");
    return {e, apex};
}

int cmd_routes(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    Color c = t.mode().kind == Mode::single ? t.mode().color : color_of(o);
    std::vector<DiamondRoute> found;
    if (o.edge.empty()) {
        found = switchable_routes(t, c, o.max_length);
    } else {
        RouteQuery q;
        q.from = route_start(o, g);
        q.max_length = o.max_length;
        if (o.target == "ring") q.target = RouteTarget::ring;
        else if (o.target == "outer") q.target = RouteTarget::outer;
        else {
            q.target = RouteTarget::edge;
            q.target_edge = edge_of(g, o.target);
        }
        if (auto r = search_diamond_route(t, c, q)) found.push_back(*r);
    }
    if (o.limit > 0 && found.size() > o.limit) found.resize(o.limit);
    if (found.empty()) throw Negative{{{"routes", Json::array()}}, "no route\n"};
    if (o.format == "dot") {
        std::set<EdgeId> marked(found.front().c_edges.begin(), found.front().c_edges.end());
        marked.insert(found.front().connectors.begin(), found.front().connectors.end());
        return emit(o, dot_of(t, marked)), 0;
    }
    Json arr = Json::array();
    for (const auto& r : found) arr.push_back(json_of(g, r));
    emit_json(o, {{"routes", arr}});
    return 0;
}

int cmd_orient(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    Color c = t.mode().kind == Mode::single ? t.mode().color : color_of(o);
    emit_json(o, json_of(orientation_sets(t, c, route_start(o, g), o.max_length)));
    return 0;
}

int cmd_ecs(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    Color c = t.mode().kind == Mode::single ? t.mode().color : color_of(o);
    auto pick = [&](std::size_t n) {
        if (o.index < 0 || static_cast<std::size_t>(o.index) >= n)
            throw Negative{{{"error", "no ring with index " + std::to_string(o.index)}, {"available", n}},
                           "no such ring\n"};
        return static_cast<std::size_t>(o.index);
    };
    if (o.kind == "canal") {
        auto cs = extract_canal_system(t, c);
        std::vector<CanalLine> rings;
        for (const auto& l : cs.lines)
            if (l.ring()) rings.push_back(l);
        const auto& l = rings[pick(rings.size())];
        return emit_tiling(o, ecs_canal_line(t, l), {{"ring", json_of(g, l.walk)}}), 0;
    }
    if (o.kind == "route") {
        auto rs = switchable_routes(t, c, o.max_length);
        const auto& r = rs[pick(rs.size())];
        return emit_tiling(o, ecs_diamond_route(t, r), {{"route", json_of(g, r)}}), 0;
    }
    if (o.kind == "gring") {
        auto region = region_from(o, g);
        RingQuery q;
        q.color = c;
        if (!o.edge.empty()) q.exit = edge_of(g, o.edge);
        if (!o.permit.empty()) {
            auto p = edge_list(g, o.permit);
            q.permit = std::set<EdgeId>(p.begin(), p.end());
        }
        q.limit = static_cast<std::size_t>(o.index) + 1;
        auto rs = enumerate_generalized_rings(t, region, q);
        const auto& r = rs[pick(rs.size())];
        return emit_tiling(o, ecs_generalized(t, r), {{"ring", json_of(g, r)}}), 0;
    }
    throw InputError("--kind must be canal, route or gring");
}

int cmd_diamond_type(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    emit_json(o, json_of(classify_diamond(t, edge_of(g, o.edge))));
    return 0;
}

int cmd_chains(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    emit_json(o, json_of(g, chain_constraints(t, region_from(o, g))));
    return 0;
}

int cmd_gring(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    auto region = region_from(o, g);
    Color c = color_of(o);
    EdgeId exit = edge_of(g, o.edge);
    std::set<EdgeId> permit = default_permit(t, region, c);
    if (!o.permit.empty()) {
        auto p = edge_list(g, o.permit);
        permit = std::set<EdgeId>(p.begin(), p.end());
    }
    auto r = find_generalized_ring(t, region, c, exit, permit);
    if (!r) throw Negative{{{"ring", nullptr}}, "no generalized ring\n"};
    if (o.format == "dot") return emit(o, dot_of(t, {r->walk.links.begin(), r->walk.links.end()})), 0;
    emit_json(o, {{"ring", json_of(g, *r)}});
    return 0;
}

int cmd_sigma_adjust(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    auto region = region_from(o, g);
    Color c = color_of(o);
    auto adj = o.c_edges.empty() ? sigma_adjust_ring(t, region, c)
                                 : sigma_adjust_retile(t, region, c, edge_list(g, o.c_edges));
    Json j;
    if (adj.ring) j["ring"] = json_of(g, *adj.ring);
    Json ab = Json::array();
    for (EdgeId x : adj.abandoned) ab.push_back(json_edge(g, x));
    j["abandoned"] = ab;
    j["omega_unchanged"] = adj.omega_unchanged;
    j["odd_cycle"] = adj.odd_cycle ? Json(*adj.odd_cycle) : Json(nullptr);
    j["chains"] = json_of(g, adj.chains);
    emit_tiling(o, adj.tiling, j);
    return 0;
}

int cmd_rotate(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    auto region = region_from(o, g);
    std::optional<std::vector<Color>> sched;
    if (!o.schedule.empty()) {
        sched.emplace();
        for (char ch : o.schedule) sched->push_back(parse_color_name(std::string(1, ch)));
    }
    auto run = rotate_td(t, region, parse_template(o.kind), sched);
    emit_json(o, json_of(g, run));
    bool ok = run.outcome == RotationOutcome::closed || run.outcome == RotationOutcome::escaped;
    return ok ? 0 : 1;
}

int cmd_explore(const Options& o) {
    auto g = load(o.graph);
    auto t = load_t(o, g);
    auto region = region_from(o, g);
    std::set<Move> moves;
    std::stringstream in(o.moves);
    std::string m;
    while (std::getline(in, m, ',')) {
        if (m == "canal") moves.insert(Move::canal_ecs);
        else if (m == "generalized") moves.insert(Move::generalized_ecs);
        else if (m == "sigma") moves.insert(Move::sigma_adjust);
        else throw InputError("unknown move '" + m + "' (canal, generalized, sigma)");
    }
    auto sg = congruence_explore(t, region, moves, o.max_states);
    if (o.format == "dot") return emit(o, dot_of(sg)), 0;
    emit_json(o, json_of(sg));
    return 0;
}

int cmd_atlas(const Options& o) {
    auto sym = parse_symmetry(o.sym);
    if (o.n > 0) {
        auto be = enumerate_boundary_classes(o.n, sym);
        if (o.format == "text") {
            std::ostringstream s;
            for (const auto& c : be.classes)
                s << c.representative << " " << c.counts[0] << c.counts[1] << c.counts[2] << " "
                  << (c.signature.empty() ? "-" : c.signature) << " " << c.members.size() << "\n";
            return emit(o, s.str()), 0;
        }
        emit_json(o, json_of(be));
        return 0;
    }
    auto g = load(o.graph);
    auto region = region_from(o, g);
    AtlasOptions opt;
    opt.provenance = parse_provenance(o.provenance);
    opt.symmetry = sym;
    if (o.limit > 0) opt.max_tilings = o.limit;
    opt.max_states = o.max_states;
    auto a = build_atlas(g, region, opt);
    if (!o.other.empty()) {
        AtlasOptions other = opt;
        other.provenance = parse_provenance(o.other);
        auto b = build_atlas(g, region, other);
        emit_json(o, {{"a", provenance_name(a.provenance)},
                      {"b", provenance_name(b.provenance)},
                      {"intersection", json_of(intersect_atlases(a, b))}});
        return 0;
    }
    if (o.format == "text") return emit(o, render_atlas_table(a)), 0;
    if (o.format == "dot") return emit(o, render_atlas_dot(a)), 0;
    emit_json(o, json_of(a));
    return 0;
}

int cmd_surgery(const Options& o) {
    auto g = load(o.graph);
    std::optional<std::pair<Vertex, Vertex>> merge;
    if (!o.merge.empty()) merge = vertex_pair(o.merge);
    std::vector<std::pair<Vertex, Vertex>> add;
    std::stringstream in(o.add);
    std::string item;
    while (std::getline(in, item, ',')) add.push_back(vertex_pair(item));
    auto res = merge_surgery(g, o.remove.empty() ? std::vector<Vertex>{} : int_list(o.remove), merge, add);
    if (o.format == "text") return emit(o, format_graph(res.graph)), 0;
    Json j;
    j["report"] = json_of(validate_semi_mpg(res.graph));
    j["vertex_map"] = res.vertex_map;
    j["four_colorable"] = find_four_coloring(res.graph).has_value();
    j["graph"] = format_graph(res.graph);
    emit_json(o, j);
    return 0;
}

int cmd_check(const Options& o) {
    SuiteOptions so;
    so.max_vertices = o.max_vertices;
    so.seed = o.seed;
    auto rep = run_suite(o.suite.empty() ? "all" : o.suite, so);
    if (!o.out.empty() && o.format != "text") {
        // counterexamples land next to the report
        auto dir = std::filesystem::path(o.out).parent_path();
        for (const auto& c : rep.checks) {
            if (!c.counterexample) continue;
            auto stem = dir / ("criterion" + std::to_string(c.criterion));
            if (!c.counterexample->graph.empty()) std::ofstream(stem.string() + ".graph") << c.counterexample->graph;
            if (!c.counterexample->tiling.empty()) std::ofstream(stem.string() + ".tiling") << c.counterexample->tiling;
        }
    }
    if (o.format == "text") {
        std::ostringstream s;
        for (const auto& c : rep.checks) {
            s << check_status_name(c.status) << " " << c.criterion << " " << c.name;
            if (o.timing) s << " " << c.seconds << "s";
            if (!c.detail.empty()) s << " (" << c.detail << ")";
            s << "\n";
        }
        emit(o, s.str());
    } else {
        Json j = json_of(rep, o.timing);
        j["seed"] = o.seed;
        j["max_vertices"] = o.max_vertices;
        emit_json(o, j);
    }
    return rep.ok() ? 0 : 1;
}

int cmd_corpus(const Options& o) {
    if (o.out.empty()) {
        emit_json(o, {{"corpus", corpus_names()}});
        return 0;
    }
    std::filesystem::create_directories(o.out);
    for (const auto& name : corpus_names())
        std::ofstream(std::filesystem::path(o.out) / (name + ".graph")) << format_graph(corpus_graph(name));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RGB-tilings of maximal planar graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    app.add_option("--out", o.out, "write to this file instead of stdout");
    app.add_option("--threads", o.threads, "worker threads (the library runs single threaded)")
        ->check(CLI::PositiveNumber);

    auto graph_arg = [&](CLI::App* s) { s->add_option("graph", o.graph, "graph file or corpus name")->required(); };
    auto tiling_arg = [&](CLI::App* s) {
        graph_arg(s);
        s->add_option("tiling", o.tiling, "tiling file")->required();
    };
    auto color_opt = [&](CLI::App* s) { s->add_option("--color", o.color, "red, green or blue")->capture_default_str(); };
    auto region_opts = [&](CLI::App* s) {
        s->add_option("--td", o.td, "topic vertices, comma separated")->required();
        s->add_option("--start", o.start, "first omega vertex");
        s->add_option("--next", o.next, "second omega vertex");
    };

    std::map<CLI::App*, std::function<int(const Options&)>> run;
    auto sub = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
        auto* s = app.add_subcommand(name, help);
        run[s] = std::move(fn);
        return s;
    };

    graph_arg(sub("validate", "check a graph file", cmd_validate));

    auto* tile = sub("tile", "enumerate tilings", cmd_tile);
    graph_arg(tile);
    tile->add_option("--mode", o.mode, "rgb, single, single:<color> or partial")->capture_default_str();
    color_opt(tile);
    tile->add_flag("--count", o.count, "count only");
    tile->add_option("--limit", o.limit, "tilings to list");

    auto* color = sub("color", "find or count proper 4-colorings", cmd_color);
    graph_arg(color);
    color->add_flag("--count", o.count, "count only");

    auto* odd = sub("odd-cycle", "find a monochromatic odd cycle", cmd_odd_cycle);
    tiling_arg(odd);
    color_opt(odd);

    tiling_arg(sub("grand", "check grandness and extract a 4-coloring", cmd_grand));
    tiling_arg(sub("complete", "complete a single-color tiling to rgb", cmd_complete));

    auto* canals = sub("canals", "canal lines of a color", cmd_canals);
    tiling_arg(canals);
    color_opt(canals);

    auto* routes = sub("routes", "switchable diamond routes, or a search from --edge", cmd_routes);
    tiling_arg(routes);
    color_opt(routes);
    routes->add_option("--edge", o.edge, "start edge u-v");
    routes->add_option("--apex", o.apex, "apex picking the out-triangle");
    routes->add_option("--target", o.target, "ring, outer or an edge u-v")->capture_default_str();
    routes->add_option("--max-length", o.max_length)->capture_default_str();
    routes->add_option("--limit", o.limit, "routes to list");

    auto* orient = sub("orient", "orientation sets from a start edge", cmd_orient);
    tiling_arg(orient);
    color_opt(orient);
    orient->add_option("--edge", o.edge, "start edge u-v")->required();
    orient->add_option("--apex", o.apex, "apex picking the out-triangle");
    orient->add_option("--max-length", o.max_length)->capture_default_str();

    auto* ecs = sub("ecs", "switch colors along a ring", cmd_ecs);
    tiling_arg(ecs);
    color_opt(ecs);
    ecs->add_option("--kind", o.kind, "canal, route or gring")->capture_default_str();
    ecs->add_option("--index", o.index, "which ring, in enumeration order")->capture_default_str();
    ecs->add_option("--edge", o.edge, "exit edge for gring");
    ecs->add_option("--permit", o.permit, "permitted generalized crossings u-v,...");
    ecs->add_option("--td", o.td, "topic vertices for gring");
    ecs->add_option("--max-length", o.max_length)->capture_default_str();

    auto* dt = sub("diamond-type", "classify the diamond of an abandoned edge", cmd_diamond_type);
    tiling_arg(dt);
    dt->add_option("--edge", o.edge, "abandoned edge u-v")->required();

    auto* chains = sub("chains", "Kempe chain constraints around td", cmd_chains);
    tiling_arg(chains);
    region_opts(chains);

    auto* gring = sub("gring", "find a generalized ring", cmd_gring);
    tiling_arg(gring);
    color_opt(gring);
    region_opts(gring);
    gring->add_option("--edge", o.edge, "exit edge u-v on omega")->required();
    gring->add_option("--permit", o.permit, "permitted generalized crossings u-v,...");

    auto* sa = sub("sigma-adjust", "re-tile sigma keeping the border", cmd_sigma_adjust);
    tiling_arg(sa);
    color_opt(sa);
    region_opts(sa);
    sa->add_option("--c-edges", o.c_edges, "inner edges to color, u-v,... (ring method when absent)");

    auto* rot = sub("rotate", "rotate the abandoned edge around td", cmd_rotate);
    tiling_arg(rot);
    region_opts(rot);
    rot->add_option("--template", o.kind, "Ptg or TD55")->required();
    rot->add_option("--schedule", o.schedule, "ring colors, e.g. rgrgr");

    auto* ex = sub("explore", "congruence state graph", cmd_explore);
    tiling_arg(ex);
    region_opts(ex);
    ex->add_option("--moves", o.moves, "canal,generalized,sigma")->capture_default_str();
    ex->add_option("--max-states", o.max_states)->capture_default_str();

    auto* atlas = sub("atlas", "boundary classes (--n) or an atlas of a host", cmd_atlas);
    atlas->add_option("graph", o.graph, "graph file or corpus name");
    atlas->add_option("--n", o.n, "cycle length for boundary classes");
    atlas->add_option("--sym", o.sym, "none, cyclic, dihedral or klein4")->capture_default_str();
    atlas->add_option("--td", o.td, "topic vertices");
    atlas->add_option("--start", o.start, "first omega vertex");
    atlas->add_option("--next", o.next, "second omega vertex");
    atlas->add_option("--provenance", o.provenance, "primary, 4, secondary or tertiary")->capture_default_str();
    atlas->add_option("--intersect", o.other, "second provenance to intersect with");
    atlas->add_option("--limit", o.limit, "tiling cap per enumeration");
    atlas->add_option("--max-states", o.max_states)->capture_default_str();

    auto* surg = sub("surgery", "remove, merge and re-triangulate", cmd_surgery);
    graph_arg(surg);
    surg->add_option("--remove", o.remove, "vertices to delete");
    surg->add_option("--merge", o.merge, "keep-drop pair u-v");
    surg->add_option("--add", o.add, "chords u-v,... in old ids");

    auto* check = sub("check", "run acceptance checks", cmd_check);
    check->add_option("suite", o.suite, "core, canal, kempe, atlas or all");
    check->add_option("--max-vertices", o.max_vertices)->capture_default_str();
    check->add_option("--seed", o.seed, "recorded in the report; no check samples")->capture_default_str();
    check->add_flag("--timing", o.timing, "include elapsed times");

    sub("corpus", "list the shipped corpus, or write it to --out", cmd_corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        for (auto& [s, fn] : run)
            if (s->parsed()) return fn(o);
    } catch (const Negative& n) {
        if (o.format == "json") emit_json(o, n.body);
        else std::cout << n.text;
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
    } catch (const OperationError& e) {
        std::cerr << "no result: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
