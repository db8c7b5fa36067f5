#include "rgbt/export.hpp"

#include <sstream>

namespace rgbt {

namespace {

std::string letters(const std::vector<Color>& cs) {
    std::string s;
    for (Color c : cs) s += color_letter(c);
    return s;
}

Json edges_json(const Embedding& e, const std::vector<EdgeId>& xs) {
    Json out = Json::array();
    for (EdgeId x : xs) out.push_back(json_edge(e, x));
    return out;
}

Json counts_json(const std::array<int, 3>& c) { return Json::array({c[0], c[1], c[2]}); }

const char* dot_color(Color c) {
    switch (c) {
    case Color::red: return "red";
    case Color::green: return "green3";
    case Color::blue: return "blue";
    case Color::black: return "gray30";
    case Color::abandoned: return "gold:invis:gold";
    }
    return "black";
}

} // namespace

Json json_edge(const Embedding& e, EdgeId x) {
    auto [u, v] = e.endpoints(x);
    return Json::array({u, v});
}

Json json_of(const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["is_mpg"] = r.is_mpg;
    j["vertices"] = r.vertex_count;
    j["edges"] = r.edge_count;
    j["faces"] = r.face_count;
    j["euler_ok"] = r.euler_ok;
    j["triangles_ok"] = r.triangles_ok;
    j["outer_sizes"] = r.outer_sizes;
    Json hist = Json::object();
    for (auto [d, n] : r.degree_histogram) hist[std::to_string(d)] = n;
    j["degree_histogram"] = hist;
    j["degree5"] = r.degree5_count;
    j["min_degree"] = r.min_degree;
    j["errors"] = r.errors;
    return j;
}

Json json_of(const Tiling& t) {
    const auto& e = t.embedding();
    Json j;
    j["mode"] = t.mode().name();
    Json edges = Json::array();
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        auto [u, v] = e.endpoints(x);
        edges.push_back(Json::array({u, v, std::string(1, color_letter(t.color(x)))}));
    }
    j["edges"] = edges;
    return j;
}

Json json_of(const BoundaryWord& w) {
    Json j;
    j["cycle"] = w.cycle;
    j["word"] = w.text();
    j["counts"] = counts_json(w.counts);
    j["equal_parity"] = w.equal_parity();
    return j;
}

Json json_of(const Embedding& e, const DualWalk& w) {
    DualGraph dual(e);
    Json nodes = Json::array();
    for (int n : w.nodes) {
        Json node;
        if (dual.is_pseudo(n)) {
            node["pseudo"] = json_edge(e, dual.pseudo_edge(n));
        } else {
            node["facet"] = dual.facet(n);
            node["vertices"] = e.facets()[dual.facet(n)].vertices;
        }
        nodes.push_back(node);
    }
    Json j;
    j["nodes"] = nodes;
    j["crossed"] = edges_json(e, w.links);
    j["ring"] = w.ring;
    return j;
}

Json json_of(const Embedding& e, const CanalSystem& cs) {
    Json j;
    j["color"] = color_name(cs.color);
    Json lines = Json::array();
    for (const auto& l : cs.lines) lines.push_back(json_of(e, l.walk));
    j["lines"] = lines;
    Json pairs = Json::array();
    for (const auto& p : cs.matching)
        pairs.push_back(Json::array({json_edge(e, p.first), json_edge(e, p.second)}));
    j["matching"] = pairs;
    j["non_crossing"] = cs.non_crossing;
    j["blocked_ends"] = cs.blocked_ends;
    return j;
}

Json json_of(const Embedding& e, const DiamondRoute& r) {
    Json j;
    j["color"] = color_name(r.color);
    j["c_edges"] = edges_json(e, r.c_edges);
    j["connectors"] = edges_json(e, r.connectors);
    j["ring"] = r.ring;
    j["switchable"] = r.switchable();
    j["walk"] = json_of(e, r.walk);
    return j;
}

Json json_of(const OrientationSets& o) {
    Json j;
    j["out_triangle"] = o.out_triangle;
    j["in_triangle"] = o.in_triangle;
    j["OT"] = o.ot;
    j["IT"] = o.it;
    j["BiT"] = o.bit;
    j["NonT"] = o.nont;
    j["UniT"] = o.unit;
    j["exceptional"] = o.exceptional;
    j["routes"] = o.routes;
    j["truncated"] = o.truncated;
    return j;
}

Json json_of(const DiamondType& d) {
    Json j;
    j["edge"] = Json::array({d.u, d.v});
    j["apexes"] = Json::array({d.x, d.y});
    j["quad"] = letters({d.quad.begin(), d.quad.end()});
    j["type"] = diamond_class_name(d.kind);
    Json chains = Json::array();
    for (Color c : d.chains) chains.push_back(color_name(c));
    j["chains"] = chains;
    if (d.completion) j["completion"] = color_name(*d.completion);
    return j;
}

Json json_of(const Embedding& e, const ChainReport& r) {
    Json j;
    Json ds = Json::array();
    for (const auto& d : r.diamonds) ds.push_back(json_of(d));
    j["diamonds"] = ds;
    Json cs = Json::array();
    for (const auto& c : r.constraints) {
        Json x;
        x["color"] = color_name(c.color);
        x["source"] = json_edge(e, c.source);
        x["from"] = c.from;
        x["to"] = c.to;
        x["group"] = c.group;
        x["verified"] = c.verified;
        x["witness"] = c.witness;
        cs.push_back(x);
    }
    j["constraints"] = cs;
    Json gs = Json::array();
    for (const auto& g : r.groups) {
        Json x;
        x["source"] = json_edge(e, g.source);
        x["color"] = color_name(g.color);
        x["internal"] = g.internal;
        x["satisfied"] = g.satisfied;
        x["refutable"] = g.refutable;
        x["members"] = g.members;
        gs.push_back(x);
    }
    j["groups"] = gs;
    if (r.escape) j["escape"] = *r.escape;
    return j;
}

Json json_of(const Embedding& e, const GeneralizedRing& r) {
    Json j = json_of(e, r.walk);
    j["color"] = color_name(r.color);
    j["generalized"] = edges_json(e, r.generalized_edges());
    return j;
}

Json json_of(const State& s) {
    Json j;
    j["label"] = s.label;
    j["omega"] = letters(s.omega_colors);
    j["abandoned"] = edges_json(s.tiling.embedding(), s.abandoned);
    j["key"] = s.key;
    return j;
}

Json json_of(const Embedding& e, const RotationRun& r) {
    Json j;
    j["outcome"] = rotation_outcome_name(r.outcome);
    Json sched = Json::array();
    for (Color c : r.schedule) sched.push_back(color_name(c));
    j["schedule"] = sched;
    Json states = Json::array();
    for (const auto& s : r.states) states.push_back(json_of(s));
    j["states"] = states;
    Json rings = Json::array();
    for (const auto& g : r.rings) rings.push_back(json_of(e, g));
    j["rings"] = rings;
    if (r.coloring) j["coloring"] = *r.coloring;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json json_of(const StateGraph& g) {
    Json j;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        Json n = json_of(g.states[i]);
        n["component"] = g.component[i];
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& x : g.edges) edges.push_back({{"from", x.from}, {"to", x.to}, {"move", x.move}});
    j["edges"] = edges;
    j["components"] = g.components;
    j["truncated"] = g.truncated;
    return j;
}

Json json_of(const BoundaryEnumeration& b) {
    Json j;
    j["n"] = b.n;
    j["symmetry"] = symmetry_name(b.symmetry);
    Json raw = Json::array();
    for (const auto& [c, n] : b.raw_counts) raw.push_back({{"counts", counts_json(c)}, {"words", n}});
    j["raw_counts"] = raw;
    Json classes = Json::array();
    for (const auto& c : b.classes) {
        Json x;
        x["representative"] = c.representative;
        x["counts"] = counts_json(c.counts);
        if (!c.signature.empty()) x["signature"] = c.signature;
        x["size"] = c.members.size();
        classes.push_back(x);
    }
    j["classes"] = classes;
    return j;
}

Json json_of(const Atlas& a) {
    Json j;
    j["omega_size"] = a.omega_size;
    j["td_size"] = a.td_size;
    j["symmetry"] = symmetry_name(a.symmetry);
    j["group_size"] = a.group.size();
    j["provenance"] = provenance_name(a.provenance);
    Json entries = Json::array();
    for (const auto& e : a.entries) {
        Json x;
        x["label"] = e.label;
        x["boundary"] = e.boundary;
        x["counts"] = counts_json(e.counts);
        if (!e.signature.empty()) x["signature"] = e.signature;
        x["abandoned"] = e.abandoned;
        x["kinds"] = e.kinds;
        if (!e.interior.empty()) x["interior"] = e.interior;
        x["constraints"] = e.constraints;
        x["provenance"] = provenance_name(e.provenance);
        x["derivation"] = e.derivation;
        x["witness"] = letters(e.witness);
        entries.push_back(x);
    }
    j["entries"] = entries;
    j["uncertified"] = a.uncertified;
    return j;
}

Json json_of(const AtlasIntersection& x) {
    auto pairs = [](const std::vector<AtlasMatch>& ms) {
        Json out = Json::array();
        for (const auto& m : ms) out.push_back(Json::array({m.a, m.b}));
        return out;
    };
    Json j;
    j["boundary"] = pairs(x.boundary);
    j["full"] = pairs(x.full);
    return j;
}

Json json_of(const SuiteReport& r, bool timing) {
    Json j;
    j["suite"] = r.suite;
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json x;
        x["criterion"] = c.criterion;
        x["name"] = c.name;
        x["status"] = check_status_name(c.status);
        Json counts = Json::object();
        for (const auto& [k, v] : c.counts) counts[k] = v;
        x["counts"] = counts;
        if (timing) x["seconds"] = c.seconds;
        x["budget"] = c.budget;
        if (!c.detail.empty()) x["detail"] = c.detail;
        if (c.counterexample) x["counterexample"] = {{"note", c.counterexample->note}};
        checks.push_back(x);
    }
    j["checks"] = checks;
    return j;
}

std::string dot_of(const Tiling& t, const std::set<EdgeId>& marked) {
    const auto& e = t.embedding();
    std::ostringstream out;
    out << "graph tiling {\n  node [shape=circle];\n";
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        auto [u, v] = e.endpoints(x);
        out << "  " << u << " -- " << v << " [color=\"" << dot_color(t.color(x)) << "\"";
        if (t.color(x) == Color::abandoned) out << ", penwidth=2";
        if (marked.count(x)) out << ", style=\"bold,dashed\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_of(const StateGraph& g) {
    std::ostringstream out;
    out << "digraph states {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        std::string omega;
        for (Color c : g.states[i].omega_colors) omega += color_letter(c);
        out << "  s" << i << " [label=\"" << g.states[i].label << "\\n" << omega << "\"];\n";
    }
    for (const auto& x : g.edges) out << "  s" << x.from << " -> s" << x.to << " [label=\"" << x.move << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace rgbt
