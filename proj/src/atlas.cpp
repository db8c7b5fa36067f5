#include "rgbt/atlas.hpp"
#include "rgbt/dual.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace rgbt {

std::string symmetry_name(SymmetryKind k) {
    switch (k) {
    case SymmetryKind::none: return "none";
    case SymmetryKind::cyclic: return "cyclic";
    case SymmetryKind::dihedral: return "dihedral";
    case SymmetryKind::klein4: return "klein4";
    }
    return "?";
}

SymmetryKind parse_symmetry(const std::string& s) {
    if (s == "none") return SymmetryKind::none;
    if (s == "cyclic") return SymmetryKind::cyclic;
    if (s == "dihedral") return SymmetryKind::dihedral;
    if (s == "klein4") return SymmetryKind::klein4;
    throw InputError("unknown symmetry '" + s + "' (none, cyclic, dihedral, klein4)");
}

std::vector<PositionMap> symmetry_group(int n, SymmetryKind k) {
    if (n < 3) throw InputError("cycle length must be at least 3");
    auto rot = [n](int s, bool flip) {
        PositionMap m(n);
        for (int i = 0; i < n; ++i) m[i] = ((flip ? -i : i) + s % n + 2 * n) % n;
        return m;
    };
    std::vector<PositionMap> g{rot(0, false)};
    switch (k) {
    case SymmetryKind::none: break;
    case SymmetryKind::cyclic:
        for (int s = 1; s < n; ++s) g.push_back(rot(s, false));
        break;
    case SymmetryKind::dihedral:
        for (int s = 1; s < n; ++s) g.push_back(rot(s, false));
        for (int s = 0; s < n; ++s) g.push_back(rot(s, true));
        break;
    case SymmetryKind::klein4:
        if (n % 2) throw InputError("klein4 symmetry needs an even cycle length");
        g.push_back(rot(0, true));
        g.push_back(rot(n / 2, true));
        g.push_back(rot(n / 2, false));
        break;
    }
    return g;
}

bool equal_parity_word(const std::vector<Color>& word) {
    std::array<int, 3> n{};
    for (Color c : word) {
        if (!is_rgb(c)) return false;
        ++n[static_cast<int>(c)];
    }
    return n[0] % 2 == n[1] % 2 && n[1] % 2 == n[2] % 2;
}

std::string adjacency_signature(const std::vector<Color>& word) {
    const int n = static_cast<int>(word.size());
    std::string sig;
    for (Color c : kRgb) {
        std::vector<int> at;
        for (int i = 0; i < n; ++i)
            if (word[i] == c) at.push_back(i);
        if (at.size() != 2) return {};
        int gap = at[1] - at[0];
        sig += (gap == 1 || gap == n - 1) ? 'Y' : 'N';
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

namespace {

constexpr std::array<std::array<Color, 3>, 6> kPerms{{{Color::red, Color::green, Color::blue},
                                                      {Color::red, Color::blue, Color::green},
                                                      {Color::green, Color::red, Color::blue},
                                                      {Color::green, Color::blue, Color::red},
                                                      {Color::blue, Color::red, Color::green},
                                                      {Color::blue, Color::green, Color::red}}};

Color apply(const std::array<Color, 3>& p, Color c) { return is_rgb(c) ? p[static_cast<int>(c)] : c; }

// Edge i of a cycle joins positions i and i+1; its image under m.
int map_edge(const PositionMap& m, int i) {
    const int n = static_cast<int>(m.size());
    int a = m[i], b = m[(i + 1) % n];
    return (a + 1) % n == b ? a : b;
}

std::vector<Color> map_word(const std::vector<Color>& w, const PositionMap& m, const std::array<Color, 3>& p) {
    std::vector<Color> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[map_edge(m, static_cast<int>(i))] = apply(p, w[i]);
    return out;
}

std::string letters(const std::vector<Color>& w) {
    std::string s;
    for (Color c : w) s += color_letter(c);
    return s;
}

std::array<int, 3> sorted_counts(const std::vector<Color>& w) {
    std::array<int, 3> n{};
    for (Color c : w)
        if (is_rgb(c)) ++n[static_cast<int>(c)];
    std::sort(n.begin(), n.end());
    return n;
}

std::vector<Color> parse_letters(const std::string& s) {
    std::vector<Color> out;
    for (char ch : s) out.push_back(parse_color_name(std::string(1, ch)));
    return out;
}

} // namespace

std::string canonical_word(const std::vector<Color>& word, const std::vector<PositionMap>& group) {
    std::string best;
    for (const auto& m : group)
        for (const auto& p : kPerms) {
            auto s = letters(map_word(word, m, p));
            if (best.empty() || s < best) best = s;
        }
    return best;
}

BoundaryEnumeration enumerate_boundary_classes(int n, SymmetryKind sym) {
    auto group = symmetry_group(n, sym);
    BoundaryEnumeration out;
    out.n = n;
    out.symmetry = sym;
    std::map<std::string, std::size_t> index;
    std::vector<Color> w(n, Color::red);
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long x = code;
        for (int i = n - 1; i >= 0; --i) {
            w[i] = kRgb[x % 3];
            x /= 3;
        }
        if (!equal_parity_word(w)) continue;
        ++out.raw_counts[sorted_counts(w)];
        auto canon = canonical_word(w, group);
        auto [it, fresh] = index.emplace(canon, out.classes.size());
        if (fresh) {
            BoundaryClass c;
            c.representative = canon;
            c.counts = sorted_counts(w);
            c.signature = adjacency_signature(parse_letters(canon));
            out.classes.push_back(std::move(c));
        }
        out.classes[it->second].members.push_back(letters(w));
    }
    return out;
}

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::primary: return "primary";
    case Provenance::four: return "4";
    case Provenance::secondary: return "secondary";
    case Provenance::tertiary: return "tertiary";
    }
    return "?";
}

Provenance parse_provenance(const std::string& s) {
    if (s == "primary") return Provenance::primary;
    if (s == "4" || s == "four") return Provenance::four;
    if (s == "secondary") return Provenance::secondary;
    if (s == "tertiary") return Provenance::tertiary;
    throw InputError("unknown provenance '" + s + "' (primary, 4, secondary, tertiary)");
}

namespace {

// A position map of omega together with the td permutation that makes it an
// automorphism of sigma.
struct SigmaSymmetry {
    PositionMap positions;
    std::vector<Vertex> vertex_map;  // host vertex -> host vertex, -1 outside sigma
};

class Canon {
public:
    Canon(const Embedding& g, const RegionSpec& r, SymmetryKind sym) : g_(g), r_(r) {
        const int n = static_cast<int>(r.omega.size());
        for (int i = 0; i < n; ++i) pos_[r.omega[i]] = i;
        for (std::size_t j = 0; j < r.td.size(); ++j) tdi_[r.td[j]] = static_cast<int>(j);
        for (const auto& m : symmetry_group(n, sym)) {
            std::vector<int> perm(r.td.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<Vertex> vm(g.vertex_count(), -1);
                for (int i = 0; i < n; ++i) vm[r.omega[i]] = r.omega[m[i]];
                for (std::size_t j = 0; j < perm.size(); ++j) vm[r.td[j]] = r.td[perm[j]];
                if (preserves(vm)) {
                    syms_.push_back({m, vm});
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    const std::vector<SigmaSymmetry>& symmetries() const { return syms_; }

    std::string name(Vertex v) const {
        if (auto it = pos_.find(v); it != pos_.end()) return "o" + std::to_string(it->second);
        return "t" + std::to_string(tdi_.at(v));
    }

    std::string edge_name(Vertex a, Vertex b) const {
        auto x = name(a), y = name(b);
        if (y < x) std::swap(x, y);
        return x + "-" + y;
    }

    struct Form {
        std::string key;
        std::string word;
        std::vector<std::string> abandoned, kinds, constraints;
        std::string interior;
    };

    // Minimal form over symmetries and synonyms. `kinds` follows `abandoned`.
    Form canonical(const std::vector<Color>& colors, const std::vector<EdgeId>& abandoned,
                   const std::vector<std::string>& kinds, const std::vector<KempeConstraint>& chains,
                   bool with_interior) const {
        std::vector<Color> word;
        for (EdgeId x : r_.omega_edges) word.push_back(colors[x]);
        Form best;
        bool first = true;
        for (const auto& s : syms_) {
            auto mapped = [&](EdgeId x) {
                auto [a, b] = g_.endpoints(x);
                return edge_name(s.vertex_map[a], s.vertex_map[b]);
            };
            std::vector<std::pair<std::string, std::string>> ab;
            for (std::size_t i = 0; i < abandoned.size(); ++i) ab.push_back({mapped(abandoned[i]), kinds[i]});
            std::sort(ab.begin(), ab.end());
            std::vector<std::pair<std::string, EdgeId>> inner;
            for (EdgeId x : r_.sigma_inner) inner.push_back({mapped(x), x});
            std::sort(inner.begin(), inner.end());
            for (const auto& p : kPerms) {
                Form f;
                f.word = letters(map_word(word, s.positions, p));
                for (auto& [n, k] : ab) {
                    f.abandoned.push_back(n);
                    f.kinds.push_back(k);
                }
                for (const auto& kc : chains)
                    if (kc.verified)
                        f.constraints.push_back(std::string(1, color_letter(apply(p, kc.color))) + ":" +
                                                edge_name(s.vertex_map[kc.from], s.vertex_map[kc.to]));
                std::sort(f.constraints.begin(), f.constraints.end());
                f.constraints.erase(std::unique(f.constraints.begin(), f.constraints.end()), f.constraints.end());
                for (auto& [n, x] : inner) f.interior += color_letter(apply(p, colors[x]));
                std::ostringstream k;
                k << f.word << "|";
                for (std::size_t i = 0; i < f.abandoned.size(); ++i) k << f.abandoned[i] << ":" << f.kinds[i] << ",";
                k << "|";
                for (auto& c : f.constraints) k << c << ",";
                if (with_interior) k << "|" << f.interior;
                f.key = k.str();
                if (first || f.key < best.key || (f.key == best.key && f.interior < best.interior)) {
                    best = std::move(f);
                    first = false;
                }
            }
        }
        return best;
    }

private:
    bool preserves(const std::vector<Vertex>& vm) const {
        for (EdgeId x : r_.sigma_edges) {
            auto [a, b] = g_.endpoints(x);
            auto y = g_.find_edge(vm[a], vm[b]);
            if (!y || !r_.edge_in_sigma[*y]) return false;
        }
        return true;
    }

    const Embedding& g_;
    const RegionSpec& r_;
    std::map<Vertex, int> pos_, tdi_;
    std::vector<SigmaSymmetry> syms_;
};

struct Builder {
    const Embedding& g;
    const RegionSpec& r;
    const AtlasOptions& opt;
    Canon canon;
    Atlas atlas;
    std::map<std::string, std::size_t> by_key;

    Builder(const Embedding& host, const RegionSpec& region, const AtlasOptions& o)
        : g(host), r(region), opt(o), canon(host, region, o.symmetry) {
        atlas.omega_size = static_cast<int>(region.omega.size());
        atlas.td_size = static_cast<int>(region.td.size());
        atlas.symmetry = o.symmetry;
        atlas.provenance = o.provenance;
        for (const auto& s : canon.symmetries()) atlas.group.push_back(s.positions);
    }

    // Returns the entry index and whether it was new.
    std::pair<std::size_t, bool> add(const Tiling& t, Provenance prov, std::vector<std::string> derivation) {
        auto ab = t.edges_of(Color::abandoned);
        std::vector<std::string> kinds;
        std::vector<KempeConstraint> chains;
        if (!ab.empty()) {
            for (EdgeId e : ab) kinds.push_back(diamond_class_name(classify_diamond(t, e).kind));
            chains = chain_constraints(t, r).constraints;
        }
        auto f = canon.canonical(t.colors(), ab, kinds, chains, prov == Provenance::four);
        if (auto it = by_key.find(f.key); it != by_key.end()) return {it->second, false};
        AtlasEntry e;
        e.boundary = f.word;
        e.counts = sorted_counts(parse_letters(f.word));
        e.signature = adjacency_signature(parse_letters(f.word));
        e.abandoned = f.abandoned;
        e.kinds = f.kinds;
        e.interior = f.interior;
        e.constraints = f.constraints;
        e.provenance = prov;
        e.key = f.key;
        e.witness = t.colors();
        e.label = catalog_label(e, atlas.omega_size, atlas.td_size);
        if (e.label.empty()) e.label = "E" + std::to_string(atlas.entries.size());
        if (derivation.empty()) derivation.push_back(e.label);
        e.derivation = std::move(derivation);
        by_key[e.key] = atlas.entries.size();
        atlas.entries.push_back(std::move(e));
        return {atlas.entries.size() - 1, true};
    }

    void primary() {
        for (EdgeId e : r.sigma_inner) {
            std::vector<std::optional<Color>> fixed(g.edge_count());
            fixed[e] = Color::abandoned;
            std::size_t seen = 0;
            for_each_tiling(
                g, TilingMode::partial(),
                [&](const Tiling& t) {
                    if (++seen > opt.max_tilings)
                        throw OperationError("atlas cap exceeded: more than " + std::to_string(opt.max_tilings) +
                                             " tilings with one abandoned edge");
                    if (t.count(Color::abandoned) != 1) return true;
                    if (!g.diamond(e).y) return true;
                    if (classify_diamond(t, e).kind == DiamondClass::TypeC) return true;
                    add(t, Provenance::primary, {});
                    return true;
                },
                fixed);
        }
    }

    void four() {
        std::vector<EdgeId> edges = r.sigma_edges;
        std::sort(edges.begin(), edges.end());
        std::map<EdgeId, std::vector<int>> faces_of;
        for (int f : r.sigma_faces)
            for (EdgeId x : g.facets()[f].edges) faces_of[x].push_back(f);
        Tiling t(g, TilingMode::partial(), Color::black);
        std::size_t count = 0;
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (i == edges.size()) {
                if (++count > opt.max_tilings) throw OperationError("atlas cap exceeded in sigma tilings");
                add(t, Provenance::four, {});
                return;
            }
            EdgeId x = edges[i];
            for (Color c : kRgb) {
                bool ok = true;
                for (int f : faces_of[x])
                    for (EdgeId y : g.facets()[f].edges)
                        if (y != x && t.color(y) == c) ok = false;
                if (!ok) continue;
                t.set(x, c);
                go(i + 1);
                t.set(x, Color::black);
            }
        };
        go(0);
    }

    // ECS closure from the primary witnesses.
    void closure(bool tertiary) {
        struct Node {
            std::vector<Color> colors;
            int parent;
            std::string move;
            std::size_t root;  // primary entry
        };
        std::vector<Node> nodes;
        std::map<std::string, int> seen;
        std::queue<int> todo;
        const std::size_t primaries = atlas.entries.size();
        for (std::size_t i = 0; i < primaries; ++i) {
            Tiling t(g, TilingMode::partial(), atlas.entries[i].witness);
            auto k = synonym_canonical(t).key();
            if (!seen.emplace(k, static_cast<int>(nodes.size())).second) continue;
            todo.push(static_cast<int>(nodes.size()));
            nodes.push_back({t.colors(), -1, "", i});
        }
        auto chain_of = [&](int id) {
            std::vector<std::string> steps;
            for (int x = id; nodes[x].parent >= 0; x = nodes[x].parent) steps.push_back(nodes[x].move);
            steps.push_back(atlas.entries[nodes[id].root].label);
            std::reverse(steps.begin(), steps.end());
            return steps;
        };
        while (!todo.empty()) {
            int id = todo.front();
            todo.pop();
            Tiling cur(g, TilingMode::partial(), nodes[id].colors);
            auto ab = cur.edges_of(Color::abandoned);
            if (ab.empty()) continue;  // a 4-coloring escape
            if (nodes[id].parent >= 0) {
                Provenance p = ab.size() > 1 && tertiary ? Provenance::tertiary : Provenance::secondary;
                if (ab.size() == 1 || tertiary) add(cur, p, chain_of(id));
            }
            auto push = [&](const Tiling& next, std::string move) {
                auto k = synonym_canonical(next).key();
                if (seen.count(k)) return;
                if (nodes.size() >= opt.max_states)
                    throw OperationError("atlas cap exceeded: more than " + std::to_string(opt.max_states) +
                                         " closure states");
                seen[k] = static_cast<int>(nodes.size());
                todo.push(static_cast<int>(nodes.size()));
                nodes.push_back({next.colors(), id, std::move(move), nodes[id].root});
            };
            for (Color c : kRgb) {
                auto sys = extract_canal_system(cur, c);
                for (std::size_t i = 0; i < sys.lines.size(); ++i)
                    push(ecs_canal_line(cur, sys.lines[i]), "canal-ecs " + color_name(c));
                for (EdgeId a : ab) {
                    RingQuery q;
                    q.color = c;
                    q.through = a;
                    q.limit = 16;
                    for (const auto& ring : enumerate_generalized_rings(cur, r, q)) {
                        auto [x, y] = g.endpoints(a);
                        push(ecs_generalized(cur, ring), "generalized-ecs " + color_name(c) + " via " + canon.edge_name(x, y));
                    }
                }
            }
        }
        if (!tertiary) return;
        // multi-abandoned subsets: count the ones no derivation reaches
        std::vector<EdgeId> inner(r.sigma_inner.begin(), r.sigma_inner.end());
        auto faces_share = [&](EdgeId a, EdgeId b) {
            auto fa = g.edge_facets(a), fb = g.edge_facets(b);
            for (int x : {fa.first, fa.second})
                for (int y : {fb.first, fb.second})
                    if (x >= 0 && x == y) return true;
            return false;
        };
        std::vector<EdgeId> pick;
        std::function<void(std::size_t)> subsets = [&](std::size_t from) {
            if (pick.size() >= 2) {
                std::vector<std::optional<Color>> fixed(g.edge_count());
                for (EdgeId x : pick) fixed[x] = Color::abandoned;
                std::size_t n = 0;
                for_each_tiling(
                    g, TilingMode::partial(),
                    [&](const Tiling& t) {
                        if (++n > opt.max_tilings) throw OperationError("atlas cap exceeded in tertiary subsets");
                        if (t.count(Color::abandoned) != static_cast<int>(pick.size())) return true;
                        for (EdgeId x : pick)
                            if (classify_diamond(t, x).kind == DiamondClass::TypeC) return true;
                        if (!seen.count(synonym_canonical(t).key())) ++atlas.uncertified;
                        return true;
                    },
                    fixed);
            }
            if (static_cast<int>(pick.size()) >= opt.max_abandoned) return;
            for (std::size_t i = from; i < inner.size(); ++i) {
                bool clash = false;
                for (EdgeId x : pick) clash = clash || faces_share(x, inner[i]);
                if (clash) continue;
                pick.push_back(inner[i]);
                subsets(i + 1);
                pick.pop_back();
            }
        };
        subsets(0);
    }
};

} // namespace

Atlas build_atlas(const Embedding& host, const RegionSpec& region, const AtlasOptions& opt) {
    if (region.td.empty() || region.sigma_faces.empty()) throw InputError("sigma is empty");
    Builder b(host, region, opt);
    switch (opt.provenance) {
    case Provenance::primary: b.primary(); break;
    case Provenance::four: b.four(); break;
    case Provenance::secondary:
        b.primary();
        b.closure(false);
        break;
    case Provenance::tertiary:
        b.primary();
        b.closure(true);
        break;
    }
    return std::move(b.atlas);
}

std::string catalog_label(const AtlasEntry& e, int omega_size, int td_size) {
    if (omega_size == 6 && td_size == 2 && e.abandoned == std::vector<std::string>{"t0-t1"} &&
        e.kinds == std::vector<std::string>{"TypeA"} && e.provenance == Provenance::primary &&
        e.constraints.size() == 2) {
        // both rings verified
        if (e.signature == "NNN") return "T_alpha";
        if (e.signature == "NYY") return "T_beta";
    }
    return {};
}

AtlasIntersection intersect_atlases(const Atlas& a, const Atlas& b) {
    if (a.omega_size != b.omega_size || a.td_size != b.td_size || a.group != b.group)
        throw InputError("atlases come from different regions or symmetry");
    AtlasIntersection out;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        for (std::size_t j = 0; j < b.entries.size(); ++j) {
            const auto& x = a.entries[i];
            const auto& y = b.entries[j];
            if (x.boundary != y.boundary) continue;
            out.boundary.push_back({static_cast<int>(i), static_cast<int>(j)});
            if (x.abandoned == y.abandoned && x.constraints == y.constraints && x.kinds == y.kinds)
                out.full.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return out;
}

namespace {

std::string joined(const std::vector<std::string>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s.empty() ? "-" : s;
}

std::string counts_text(const std::array<int, 3>& c) {
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

} // namespace

std::string render_atlas_table(const Atlas& a) {
    std::ostringstream out;
    out << "atlas " << provenance_name(a.provenance) << "  |omega|=" << a.omega_size << "  |td|=" << a.td_size
        << "  symmetry=" << symmetry_name(a.symmetry) << " (" << a.group.size() << ")  entries=" << a.entries.size()
        << "\n";
    const char* head[] = {"label", "counts", "boundary", "sig", "abandoned", "interior", "constraints"};
    std::vector<std::array<std::string, 7>> rows;
    for (const auto& e : a.entries)
        rows.push_back({e.label, counts_text(e.counts), e.boundary, e.signature.empty() ? "-" : e.signature,
                        joined(e.abandoned, ","), e.interior.empty() ? "-" : e.interior, joined(e.constraints)});
    std::array<std::size_t, 7> w{};
    for (int i = 0; i < 7; ++i) w[i] = std::string(head[i]).size();
    for (const auto& r : rows)
        for (int i = 0; i < 7; ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::array<std::string, 7>& r) {
        for (int i = 0; i < 7; ++i) {
            out << r[i];
            if (i < 6) out << std::string(w[i] - r[i].size() + 2, ' ');
        }
        out << "\n";
    };
    line({head[0], head[1], head[2], head[3], head[4], head[5], head[6]});
    for (const auto& r : rows) line(r);
    return out.str();
}

std::string render_atlas_dot(const Atlas& a) {
    std::ostringstream out;
    out << "digraph atlas {\n  node [shape=record];\n";
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& e = a.entries[i];
        out << "  e" << i << " [label=\"{" << e.label << "|" << e.boundary << " " << counts_text(e.counts) << "|"
            << joined(e.abandoned, ",") << "|" << joined(e.constraints) << "}\"];\n";
    }
    std::map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < a.entries.size(); ++i) by_label[a.entries[i].label] = i;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& d = a.entries[i].derivation;
        if (d.size() > 1)
            if (auto it = by_label.find(d.front()); it != by_label.end())
                out << "  e" << it->second << " -> e" << i << " [label=\"" << (d.size() - 1) << " moves\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rgbt
