#include "rgbt/tiling.hpp"
#include "rgbt/parity_union_find.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace rgbt {

char color_letter(Color c) {
    switch (c) {
    case Color::red: return 'r';
    case Color::green: return 'g';
    case Color::blue: return 'b';
    case Color::black: return 'k';
    case Color::abandoned: return 'y';
    }
    return '?';
}

std::string color_name(Color c) {
    switch (c) {
    case Color::red: return "red";
    case Color::green: return "green";
    case Color::blue: return "blue";
    case Color::black: return "black";
    case Color::abandoned: return "abandoned";
    }
    return "?";
}

Color parse_color_name(const std::string& s) {
    if (s == "r" || s == "red") return Color::red;
    if (s == "g" || s == "green") return Color::green;
    if (s == "b" || s == "blue") return Color::blue;
    if (s == "k" || s == "black") return Color::black;
    if (s == "y" || s == "abandoned") return Color::abandoned;
    throw InputError("unknown color '" + s + "'");
}

bool is_rgb(Color c) { return c == Color::red || c == Color::green || c == Color::blue; }

std::array<Color, 2> other_colors(Color c) {
    switch (c) {
    case Color::red: return {Color::green, Color::blue};
    case Color::green: return {Color::red, Color::blue};
    case Color::blue: return {Color::red, Color::green};
    default: throw EngineError("other_colors of a non-rgb color");
    }
}

Color third_color(Color a, Color b) {
    for (Color c : kRgb)
        if (c != a && c != b) return c;
    throw EngineError("third_color of equal colors");
}

std::string TilingMode::name() const {
    switch (kind) {
    case Mode::rgb: return "rgb";
    case Mode::single: return "single:" + color_name(color);
    case Mode::partial: return "partial";
    }
    return "?";
}

TilingMode parse_mode(const std::string& s) {
    if (s == "rgb") return TilingMode::rgb();
    if (s == "partial") return TilingMode::partial();
    if (s.rfind("single:", 0) == 0) {
        Color c = parse_color_name(s.substr(7));
        if (!is_rgb(c)) throw InputError("single mode needs red, green or blue");
        return TilingMode::single(c);
    }
    throw InputError("unknown tiling mode '" + s + "'");
}

Tiling::Tiling(const Embedding& base, TilingMode mode, std::vector<Color> colors)
    : base_(&base), mode_(mode), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != base.edge_count())
        throw InputError("tiling has " + std::to_string(colors_.size()) + " colors for " +
                         std::to_string(base.edge_count()) + " edges");
}

Tiling::Tiling(const Embedding& base, TilingMode mode, Color fill)
    : Tiling(base, mode, std::vector<Color>(base.edge_count(), fill)) {}

std::vector<EdgeId> Tiling::edges_of(Color c) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(colors_.size()); ++e)
        if (colors_[e] == c) out.push_back(e);
    return out;
}

int Tiling::count(Color c) const { return static_cast<int>(std::count(colors_.begin(), colors_.end(), c)); }

std::string Tiling::key() const {
    std::string s;
    s.reserve(colors_.size());
    for (Color c : colors_) s += color_letter(c);
    return s;
}

TilingCheck validate_tiling(const Tiling& t) {
    const auto& emb = t.embedding();
    const auto mode = t.mode();
    TilingCheck out;
    auto fail = [&](int f, std::string msg) {
        out.ok = false;
        out.facet = f;
        out.message = std::move(msg);
        return out;
    };
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        Color c = t.color(e);
        bool allowed = false;
        switch (mode.kind) {
        case Mode::rgb: allowed = is_rgb(c); break;
        case Mode::single: allowed = c == mode.color || c == Color::black; break;
        case Mode::partial: allowed = is_rgb(c) || c == Color::abandoned; break;
        }
        if (!allowed) {
            auto [a, b] = emb.endpoints(e);
            out.ok = false;
            out.message = "edge " + std::to_string(a) + "-" + std::to_string(b) + " has color " +
                          color_name(c) + " not allowed in mode " + mode.name();
            return out;
        }
    }
    for (int f : emb.triangles()) {
        std::array<int, 5> cnt{};
        for (EdgeId e : emb.facets()[f].edges) cnt[static_cast<int>(t.color(e))]++;
        const auto& vs = emb.facets()[f].vertices;
        std::string where = "triangle " + std::to_string(vs[0]) + "-" + std::to_string(vs[1]) + "-" + std::to_string(vs[2]);
        switch (mode.kind) {
        case Mode::rgb:
            if (cnt[0] != 1 || cnt[1] != 1 || cnt[2] != 1) return fail(f, where + " is not rainbow");
            break;
        case Mode::single:
            if (cnt[static_cast<int>(mode.color)] != 1)
                return fail(f, where + " has " + std::to_string(cnt[static_cast<int>(mode.color)]) + " " +
                                   color_name(mode.color) + " edges");
            break;
        case Mode::partial:
            if (cnt[4] > 1) return fail(f, where + " has two abandoned edges");
            if (cnt[4] == 0 && (cnt[0] != 1 || cnt[1] != 1 || cnt[2] != 1)) return fail(f, where + " is not rainbow");
            break;
        }
    }
    return out;
}

bool is_valid(const Tiling& t) { return validate_tiling(t).ok; }

std::size_t for_each_tiling(const Embedding& emb, TilingMode mode, const std::function<bool(const Tiling&)>& visit,
                            const std::vector<std::optional<Color>>& fixed) {
    const int E = emb.edge_count();
    std::vector<std::vector<int>> tris_of(E);
    for (int f : emb.triangles())
        for (EdgeId e : emb.facets()[f].edges) tris_of[e].push_back(f);
    std::vector<std::array<int, 5>> cnt(emb.face_count(), std::array<int, 5>{});
    std::vector<int> assigned(emb.face_count(), 0);

    std::vector<Color> candidates;
    if (mode.kind == Mode::single) candidates = {mode.color, Color::black};
    else candidates = {Color::red, Color::green, Color::blue};

    Tiling cur(emb, mode, Color::black);
    std::size_t visited = 0;
    bool stop = false;

    auto ok_after = [&](EdgeId e) {
        for (int f : tris_of[e]) {
            const auto& c = cnt[f];
            if (c[4] > 1) return false;
            if (mode.kind == Mode::single) {
                int k = static_cast<int>(mode.color);
                if (c[k] > 1) return false;
                if (assigned[f] == 3 && c[k] == 0) return false;
            } else if (c[4] == 0) {
                if (c[0] > 1 || c[1] > 1 || c[2] > 1 || c[3] > 0) return false;
            }
        }
        return true;
    };

    std::function<void(EdgeId)> rec = [&](EdgeId e) {
        if (stop) return;
        if (e == E) {
            ++visited;
            if (!visit(cur)) stop = true;
            return;
        }
        auto try_color = [&](Color c) {
            cur.set(e, c);
            for (int f : tris_of[e]) {
                cnt[f][static_cast<int>(c)]++;
                assigned[f]++;
            }
            if (ok_after(e)) rec(e + 1);
            for (int f : tris_of[e]) {
                cnt[f][static_cast<int>(c)]--;
                assigned[f]--;
            }
        };
        if (!fixed.empty() && fixed[e]) {
            try_color(*fixed[e]);
        } else {
            for (Color c : candidates) {
                try_color(c);
                if (stop) return;
            }
        }
    };
    rec(0);
    return visited;
}

std::vector<Tiling> enumerate_tilings(const Embedding& e, TilingMode mode, std::size_t limit) {
    std::vector<Tiling> out;
    if (limit == 0) return out;
    for_each_tiling(e, mode, [&](const Tiling& t) {
        out.push_back(t);
        return out.size() < limit;
    });
    return out;
}

std::size_t count_tilings(const Embedding& e, TilingMode mode) {
    return for_each_tiling(e, mode, [](const Tiling&) { return true; });
}

std::optional<std::vector<Vertex>> find_mono_odd_cycle(const Tiling& t, Color c) {
    const auto& emb = t.embedding();
    const int n = emb.vertex_count();
    std::vector<int> depth(n, -1), parent(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            auto nbrs = emb.rotation(a);
            auto es = emb.incident_edges(a);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (t.color(es[i]) != c) continue;
                Vertex b = nbrs[i];
                if (depth[b] < 0) {
                    depth[b] = depth[a] + 1;
                    parent[b] = a;
                    q.push(b);
                } else if (depth[b] == depth[a]) {
                    std::vector<Vertex> left{a}, right{b};
                    Vertex x = a, y = b;
                    while (x != y) {
                        x = parent[x];
                        y = parent[y];
                        left.push_back(x);
                        right.push_back(y);
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    return left;
                }
            }
        }
    }
    return std::nullopt;
}

bool has_mono_odd_cycle(const Tiling& t) {
    for (Color c : kRgb)
        if (t.count(c) > 0 && find_mono_odd_cycle(t, c)) return true;
    return false;
}

Tiling single_view(const Tiling& t, Color c) {
    std::vector<Color> cols(t.colors());
    for (auto& x : cols) {
        if (x == Color::abandoned) throw OperationError("single view of a tiling with abandoned edges");
        if (x != c) x = Color::black;
    }
    return Tiling(t.embedding(), TilingMode::single(c), std::move(cols));
}

std::optional<Bipartition> check_grand(const Tiling& t) {
    if (t.mode().kind != Mode::single) throw OperationError("grandness is defined for single-color tilings");
    const auto& emb = t.embedding();
    ParityUnionFind uf(emb.vertex_count());
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        auto [a, b] = emb.endpoints(e);
        if (!uf.relate(a, b, t.color(e) == Color::black ? 1 : 0)) return std::nullopt;
    }
    Bipartition side(emb.vertex_count());
    for (Vertex v = 0; v < emb.vertex_count(); ++v) side[v] = uf.parity(v);
    // normalize so that the lowest vertex of each component sits on side 0
    std::vector<int> flip(emb.vertex_count(), -1);
    for (Vertex v = 0; v < emb.vertex_count(); ++v) {
        int r = uf.find(v);
        if (flip[r] < 0) flip[r] = side[v];
        side[v] ^= flip[r];
    }
    return side;
}

Tiling complete_to_rgb(const Tiling& t) {
    if (t.mode().kind != Mode::single) throw OperationError("completion needs a single-color tiling");
    const Color c = t.mode().color;
    const auto others = other_colors(c);
    const auto& emb = t.embedding();
    const int E = emb.edge_count();
    for (int f : emb.triangles()) {
        int k = 0;
        for (EdgeId e : emb.facets()[f].edges) k += t.color(e) == c;
        if (k != 1) throw OperationError("completion input is not a valid single-color tiling");
    }
    // conflict graph over non-c edges
    std::vector<std::vector<EdgeId>> adj(E);
    for (int f : emb.triangles()) {
        std::vector<EdgeId> nc;
        for (EdgeId e : emb.facets()[f].edges)
            if (t.color(e) != c) nc.push_back(e);
        adj[nc[0]].push_back(nc[1]);
        adj[nc[1]].push_back(nc[0]);
    }
    std::vector<int> val(E, -1), parent(E, -1), root(E, -1);
    auto fixed_val = [&](EdgeId e) {
        Color x = t.color(e);
        if (x == others[0]) return 0;
        if (x == others[1]) return 1;
        return -1;
    };
    auto path_to_root = [&](EdgeId e) {
        std::vector<EdgeId> p{e};
        while (parent[p.back()] >= 0) p.push_back(parent[p.back()]);
        return p;
    };
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < E; ++e)
        if (t.color(e) != c && fixed_val(e) >= 0) order.push_back(e);
    for (EdgeId e = 0; e < E; ++e)
        if (t.color(e) != c && fixed_val(e) < 0) order.push_back(e);
    std::queue<EdgeId> q;
    auto seed = [&](EdgeId s) {
        int fv = fixed_val(s);
        val[s] = fv >= 0 ? fv : 0;
        root[s] = s;
        q.push(s);
    };
    auto fail = [&](EdgeId a, EdgeId b) {
        auto pa = path_to_root(a), pb = path_to_root(b);
        if (pa.back() == pb.back()) {
            while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
                pa.pop_back();
                pb.pop_back();
            }
            pb.pop_back();
        }
        std::reverse(pb.begin(), pb.end());
        pa.insert(pa.end(), pb.begin(), pb.end());
        throw CompletionError("completion impossible: odd conflict cycle of " + std::to_string(pa.size()) + " edges",
                              pa);
    };
    // fixed edges first, then the free ones as new roots
    for (EdgeId s : order)
        if (fixed_val(s) >= 0) seed(s);
    auto drain = [&]() {
        while (!q.empty()) {
            EdgeId a = q.front();
            q.pop();
            for (EdgeId b : adj[a]) {
                if (val[b] < 0) {
                    val[b] = 1 - val[a];
                    parent[b] = a;
                    root[b] = root[a];
                    q.push(b);
                } else if (val[b] == val[a]) {
                    fail(a, b);
                }
            }
        }
    };
    drain();
    for (EdgeId s : order)
        if (val[s] < 0) {
            seed(s);
            drain();
        }
    std::vector<Color> cols(E);
    for (EdgeId e = 0; e < E; ++e) cols[e] = t.color(e) == c ? c : others[val[e]];
    Tiling out(emb, TilingMode::rgb(), std::move(cols));
    if (!is_valid(out)) throw EngineError("completion produced an invalid tiling");
    return out;
}

bool is_proper(const Embedding& e, const FourColoring& f) {
    if (static_cast<int>(f.size()) != e.vertex_count()) return false;
    for (int x : f)
        if (x < 1 || x > 4) return false;
    for (const auto& [a, b] : e.edges())
        if (f[a] == f[b]) return false;
    return true;
}

Color pair_class(int a, int b) {
    switch ((a - 1) ^ (b - 1)) {
    case 1: return Color::red;
    case 2: return Color::green;
    case 3: return Color::blue;
    }
    throw OperationError("pair class of equal colors");
}

FourColoring extract_four_coloring(const Tiling& t, const Bipartition& grand) {
    if (t.mode().kind != Mode::single) throw OperationError("extraction needs a single-color tiling");
    const Color c = t.mode().color;
    const auto& emb = t.embedding();
    const int n = emb.vertex_count();
    if (static_cast<int>(grand.size()) != n) throw OperationError("bipartition size mismatch");
    std::array<std::array<int, 2>, 2> palette{};
    switch (c) {
    case Color::red: palette = {{{1, 2}, {3, 4}}}; break;
    case Color::green: palette = {{{1, 3}, {2, 4}}}; break;
    case Color::blue: palette = {{{1, 4}, {2, 3}}}; break;
    default: throw EngineError("bad single color");
    }
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        auto [a, b] = emb.endpoints(e);
        bool cross = grand[a] != grand[b];
        if (t.color(e) == c && cross) throw OperationError("a " + color_name(c) + " edge crosses the bipartition");
        if (t.color(e) == Color::black && !cross) throw OperationError("a black edge lies inside one part");
    }
    std::vector<int> sub(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (sub[s] >= 0) continue;
        sub[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            auto nbrs = emb.rotation(a);
            auto es = emb.incident_edges(a);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (t.color(es[i]) != c) continue;
                Vertex b = nbrs[i];
                if (sub[b] < 0) {
                    sub[b] = 1 - sub[a];
                    q.push(b);
                } else if (sub[b] == sub[a]) {
                    throw OperationError("the " + color_name(c) + " subgraph has an odd cycle");
                }
            }
        }
    }
    FourColoring f(n);
    for (Vertex v = 0; v < n; ++v) f[v] = palette[grand[v]][sub[v]];
    if (!is_proper(emb, f)) throw EngineError("extracted coloring is not proper");
    return f;
}

Tiling induce_tiling(const Embedding& e, const FourColoring& f) {
    if (!is_proper(e, f)) throw OperationError("coloring is not proper");
    std::vector<Color> cols(e.edge_count());
    for (EdgeId x = 0; x < e.edge_count(); ++x) {
        auto [a, b] = e.endpoints(x);
        cols[x] = pair_class(f[a], f[b]);
    }
    return Tiling(e, TilingMode::rgb(), std::move(cols));
}

Tiling permute_colors(const Tiling& t, const std::array<Color, 3>& image) {
    std::vector<Color> cols(t.colors());
    for (auto& c : cols)
        if (is_rgb(c)) c = image[static_cast<int>(c)];
    TilingMode m = t.mode();
    if (m.kind == Mode::single) m.color = image[static_cast<int>(m.color)];
    return Tiling(t.embedding(), m, std::move(cols));
}

Tiling synonym_canonical(const Tiling& t) {
    std::array<Color, 3> perm = kRgb;
    std::optional<Tiling> best;
    do {
        Tiling cand = permute_colors(t, perm);
        if (!best || cand.colors() < best->colors()) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

bool BoundaryWord::equal_parity() const {
    return counts[0] % 2 == counts[1] % 2 && counts[1] % 2 == counts[2] % 2;
}

std::array<int, 3> BoundaryWord::sorted_counts() const {
    auto s = counts;
    std::sort(s.begin(), s.end());
    return s;
}

std::string BoundaryWord::text() const {
    std::string s;
    for (Color c : word) s += color_letter(c);
    return s;
}

BoundaryWord boundary_word(const Tiling& t, const std::vector<Vertex>& cycle) {
    BoundaryWord w;
    w.cycle = cycle;
    const auto& emb = t.embedding();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        auto e = emb.find_edge(a, b);
        if (!e) throw InputError("cycle step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
        Color c = t.color(*e);
        if (!is_rgb(c))
            throw OperationError("cycle edge " + std::to_string(a) + "-" + std::to_string(b) + " is " + color_name(c));
        w.word.push_back(c);
        w.counts[static_cast<int>(c)]++;
    }
    return w;
}

std::size_t for_each_four_coloring(const Embedding& e, const std::function<bool(const FourColoring&)>& visit) {
    const int n = e.vertex_count();
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            order.push_back(a);
            for (Vertex b : e.rotation(a))
                if (!seen[b]) {
                    seen[b] = 1;
                    q.push(b);
                }
        }
    }
    FourColoring f(n, 0);
    std::size_t visited = 0;
    bool stop = false;
    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == n) {
            ++visited;
            if (!visit(f)) stop = true;
            return;
        }
        Vertex v = order[i];
        for (int c = 1; c <= 4 && !stop; ++c) {
            bool ok = true;
            for (Vertex u : e.rotation(v))
                if (f[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            f[v] = c;
            rec(i + 1);
            f[v] = 0;
        }
    };
    rec(0);
    return visited;
}

std::size_t count_four_colorings(const Embedding& e) {
    return for_each_four_coloring(e, [](const FourColoring&) { return true; });
}

std::optional<FourColoring> find_four_coloring(const Embedding& e) {
    std::optional<FourColoring> out;
    for_each_four_coloring(e, [&](const FourColoring& f) {
        out = f;
        return false;
    });
    return out;
}

Tiling parse_tiling(std::string_view text, const Embedding& emb) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<TilingMode> mode;
    std::vector<std::optional<Color>> cols(emb.edge_count());
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = raw.substr(0, raw.find('#'));
        std::istringstream ls(s);
        std::string tok;
        if (!(ls >> tok)) continue;
        int col = static_cast<int>(s.find(tok)) + 1;
        if (!mode) {
            std::string ver, m;
            if (tok != "tiling" || !(ls >> ver) || ver != "v1" || !(ls >> m) || m.rfind("mode=", 0) != 0)
                throw InputError("expected header 'tiling v1 mode=<mode>'", line_no, col);
            try {
                mode = parse_mode(m.substr(5));
            } catch (const InputError& err) {
                throw InputError(err.what(), line_no, static_cast<int>(s.find(m)) + 1);
            }
            continue;
        }
        if (tok != "e") throw InputError("expected 'e <u> <v> <color>'", line_no, col);
        int u, v;
        std::string c;
        if (!(ls >> u >> v >> c)) throw InputError("expected 'e <u> <v> <color>'", line_no, col);
        auto e = emb.find_edge(u, v);
        if (!e) throw InputError("not an edge: " + std::to_string(u) + "-" + std::to_string(v), line_no, col + 2);
        if (c.size() != 1) throw InputError("color must be one of r g b k y", line_no, static_cast<int>(s.rfind(c)) + 1);
        Color color;
        try {
            color = parse_color_name(c);
        } catch (const InputError&) {
            throw InputError("color must be one of r g b k y", line_no, static_cast<int>(s.rfind(c)) + 1);
        }
        if (cols[*e]) throw InputError("edge listed twice", line_no, col);
        cols[*e] = color;
    }
    if (!mode) throw InputError("empty tiling file", line_no, 1);
    std::vector<Color> out(emb.edge_count());
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        if (!cols[e]) {
            auto [a, b] = emb.endpoints(e);
            throw InputError("missing color for edge " + std::to_string(a) + "-" + std::to_string(b), line_no, 1);
        }
        out[e] = *cols[e];
    }
    return Tiling(emb, *mode, std::move(out));
}

Tiling load_tiling(const std::string& path, const Embedding& e) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tiling(ss.str(), e);
}

std::string format_tiling(const Tiling& t) {
    std::ostringstream out;
    out << "tiling v1 mode=" << t.mode().name() << "\n";
    const auto& emb = t.embedding();
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
        auto [a, b] = emb.endpoints(e);
        out << "e " << a << ' ' << b << ' ' << color_letter(t.color(e)) << "\n";
    }
    return out.str();
}

} // namespace rgbt
