#include "rgbt/embedding.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace rgbt {

namespace {

std::int64_t pair_key(Vertex a, Vertex b) {
    auto [lo, hi] = canonical_pair(a, b);
    return (static_cast<std::int64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
}

int index_in(std::span<const Vertex> rot, Vertex v) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == v) return static_cast<int>(i);
    return -1;
}

// Canonical form of a cyclic sequence up to rotation and reversal.
std::vector<Vertex> cycle_key(std::vector<Vertex> c) {
    if (c.empty()) return c;
    auto best = c;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t s = 0; s < c.size(); ++s) {
            std::vector<Vertex> r(c.begin() + s, c.end());
            r.insert(r.end(), c.begin(), c.begin() + s);
            best = std::min(best, r);
        }
        std::reverse(c.begin(), c.end());
    }
    return best;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

} // namespace

std::optional<EdgeId> Embedding::find_edge(Vertex a, Vertex b) const {
    auto it = edge_index_.find(pair_key(a, b));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

EdgeId Embedding::edge(Vertex a, Vertex b) const {
    auto e = find_edge(a, b);
    if (!e) throw InputError("unknown edge " + std::to_string(a) + "-" + std::to_string(b));
    return *e;
}

Vertex Embedding::other_end(EdgeId e, Vertex v) const {
    const auto& [a, b] = edges_.at(e);
    return a == v ? b : a;
}

bool Embedding::on_outer(EdgeId e) const {
    auto [f1, f2] = edge_facets_.at(e);
    return facets_[f1].kind == FacetKind::outer || facets_[f2].kind == FacetKind::outer;
}

std::vector<int> Embedding::outer_facet_indices() const {
    std::vector<int> out(outer_count_, -1);
    for (int f = 0; f < face_count(); ++f)
        if (facets_[f].kind == FacetKind::outer) out[facets_[f].outer_index] = f;
    return out;
}

Vertex Embedding::apex(int facet, EdgeId e) const {
    const auto& f = facets_.at(facet);
    const auto& [a, b] = edges_.at(e);
    for (Vertex w : f.vertices)
        if (w != a && w != b) return w;
    throw EngineError("facet has no apex");
}

Diamond Embedding::diamond(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw InputError("unknown edge id " + std::to_string(e));
    Diamond d;
    d.edge = e;
    d.u = edges_[e].first;
    d.v = edges_[e].second;
    auto [f1, f2] = edge_facets_[e];
    std::vector<int> tris;
    for (int f : {f1, f2})
        if (facets_[f].kind == FacetKind::triangle) tris.push_back(f);
    d.along_outer = tris.size() < 2;
    if (tris.empty()) return d;
    d.facet_x = tris[0];
    d.x = apex(tris[0], e);
    if (tris.size() == 2) {
        d.facet_y = tris[1];
        d.y = apex(tris[1], e);
    }
    return d;
}

RotationSystem Embedding::rotation_system() const {
    RotationSystem rs;
    rs.vertex_count = vertex_count();
    rs.rotation = rotation_;
    rs.outer.resize(outer_count_);
    for (const auto& f : facets_)
        if (f.kind == FacetKind::outer) rs.outer[f.outer_index] = f.vertices;
    return rs;
}

// Shared by build() and inspect(). Returns an embedding only when the report
// is clean; otherwise the report lists every problem found.
static std::optional<Embedding> build_checked(const RotationSystem& rs, ValidationReport& rep);

class EmbeddingBuilder {
public:
    static std::optional<Embedding> run(const RotationSystem& rs, ValidationReport& rep) {
        auto fail = [&](std::string msg) {
            rep.ok = false;
            rep.errors.push_back(std::move(msg));
        };
        const int n = rs.vertex_count;
        rep.vertex_count = n;
        if (n < 3) {
            fail("need at least 3 vertices");
            return std::nullopt;
        }
        if (static_cast<int>(rs.rotation.size()) != n) {
            fail("rotation count does not match vertex count");
            return std::nullopt;
        }
        for (Vertex v = 0; v < n; ++v) {
            std::set<Vertex> seen;
            for (Vertex u : rs.rotation[v]) {
                if (u < 0 || u >= n) fail("vertex " + std::to_string(v) + " lists unknown vertex " + std::to_string(u));
                else if (u == v) fail("self-loop at vertex " + std::to_string(v));
                else if (!seen.insert(u).second) fail("parallel edge " + std::to_string(v) + "-" + std::to_string(u));
            }
        }
        if (!rep.ok) return std::nullopt;
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : rs.rotation[v])
                if (index_in(rs.rotation[u], v) < 0)
                    fail("asymmetric adjacency: " + std::to_string(v) + " lists " + std::to_string(u) +
                         " but " + std::to_string(u) + " omits " + std::to_string(v));
        if (!rep.ok) return std::nullopt;

        Embedding emb;
        emb.rotation_ = rs.rotation;
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : rs.rotation[v])
                if (v < u) emb.edges_.emplace_back(v, u);
        std::sort(emb.edges_.begin(), emb.edges_.end());
        for (EdgeId e = 0; e < emb.edge_count(); ++e)
            emb.edge_index_[pair_key(emb.edges_[e].first, emb.edges_[e].second)] = e;
        emb.rotation_edges_.resize(n);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : rs.rotation[v]) emb.rotation_edges_[v].push_back(*emb.find_edge(v, u));

        rep.edge_count = emb.edge_count();
        rep.min_degree = n;
        for (Vertex v = 0; v < n; ++v) {
            int d = emb.degree(v);
            rep.degree_histogram[d]++;
            rep.min_degree = std::min(rep.min_degree, d);
            if (d == 5) rep.degree5_count++;
        }

        // connectivity
        std::vector<char> seen(n, 0);
        std::queue<Vertex> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : emb.rotation_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    q.push(u);
                }
        }
        if (reached != n) fail("graph is disconnected");

        // face tracing: dart (u->v) is followed by (v->w), w preceding u in rot(v)
        std::vector<std::vector<int>> dart_face(n);
        for (Vertex v = 0; v < n; ++v) dart_face[v].assign(emb.rotation_[v].size(), -1);
        std::vector<std::vector<Vertex>> traced;
        for (Vertex s = 0; s < n; ++s) {
            for (std::size_t i = 0; i < emb.rotation_[s].size(); ++i) {
                if (dart_face[s][i] >= 0) continue;
                int face = static_cast<int>(traced.size());
                traced.emplace_back();
                Vertex u = s;
                int idx = static_cast<int>(i);
                while (dart_face[u][idx] < 0) {
                    dart_face[u][idx] = face;
                    traced.back().push_back(u);
                    Vertex v = emb.rotation_[u][idx];
                    int j = index_in(emb.rotation_[v], u);
                    int deg = static_cast<int>(emb.rotation_[v].size());
                    idx = (j - 1 + deg) % deg;
                    u = v;
                }
            }
        }
        rep.face_count = static_cast<int>(traced.size());
        rep.euler_ok = n - emb.edge_count() + rep.face_count == 2;
        if (!rep.euler_ok)
            fail("Euler formula violated: V - E + F = " +
                 std::to_string(n - emb.edge_count() + rep.face_count) + " (rotation system is not planar)");

        // match declared outer facets
        std::map<std::vector<Vertex>, int> traced_by_key;
        for (int f = 0; f < rep.face_count; ++f) traced_by_key.emplace(cycle_key(traced[f]), f);
        std::vector<int> outer_of_face(traced.size(), -1);
        for (std::size_t k = 0; k < rs.outer.size(); ++k) {
            const auto& cyc = rs.outer[k];
            std::set<Vertex> distinct(cyc.begin(), cyc.end());
            if (cyc.size() < 3 || distinct.size() != cyc.size()) {
                fail("outer facet " + std::to_string(k) + " is not a simple cycle");
                continue;
            }
            auto it = traced_by_key.find(cycle_key(cyc));
            if (it == traced_by_key.end()) {
                fail("outer facet " + std::to_string(k) + " is not a face of the rotation system");
                continue;
            }
            if (outer_of_face[it->second] >= 0) {
                fail("outer facet " + std::to_string(k) + " declared twice");
                continue;
            }
            outer_of_face[it->second] = static_cast<int>(k);
            rep.outer_sizes.push_back(static_cast<int>(cyc.size()));
        }
        rep.triangles_ok = true;
        for (int f = 0; f < rep.face_count; ++f) {
            if (outer_of_face[f] >= 0) continue;
            std::set<Vertex> distinct(traced[f].begin(), traced[f].end());
            if (traced[f].size() != 3 || distinct.size() != 3) {
                rep.triangles_ok = false;
                std::string cyc;
                for (Vertex v : traced[f]) cyc += (cyc.empty() ? "" : " ") + std::to_string(v);
                fail("non-triangle inner face (" + cyc + ")");
            }
        }
        if (!rep.ok) return std::nullopt;

        emb.outer_count_ = static_cast<int>(rs.outer.size());
        emb.edge_facets_.assign(emb.edge_count(), {-1, -1});
        for (int f = 0; f < rep.face_count; ++f) {
            Facet fac;
            fac.kind = outer_of_face[f] >= 0 ? FacetKind::outer : FacetKind::triangle;
            fac.outer_index = outer_of_face[f];
            fac.vertices = traced[f];
            const auto& c = fac.vertices;
            for (std::size_t i = 0; i < c.size(); ++i) {
                Vertex a = c[i], b = c[(i + 1) % c.size()];
                EdgeId e = *emb.find_edge(a, b);
                fac.edges.push_back(e);
                if (a < b) emb.edge_facets_[e].first = f;
                else emb.edge_facets_[e].second = f;
            }
            if (fac.kind == FacetKind::triangle) emb.triangles_.push_back(f);
            emb.facets_.push_back(std::move(fac));
        }
        for (EdgeId e = 0; e < emb.edge_count(); ++e) {
            auto [f1, f2] = emb.edge_facets_[e];
            if (f1 == f2) {
                fail("edge " + std::to_string(emb.edges_[e].first) + "-" + std::to_string(emb.edges_[e].second) +
                     " has the same facet on both sides");
            }
        }
        if (!rep.ok) return std::nullopt;
        rep.is_mpg = emb.outer_count_ == 0;
        if (rep.is_mpg && emb.edge_count() != 3 * n - 6) {
            fail("MPG must have 3V - 6 edges");
            return std::nullopt;
        }
        return emb;
    }
};

static std::optional<Embedding> build_checked(const RotationSystem& rs, ValidationReport& rep) {
    return EmbeddingBuilder::run(rs, rep);
}

Embedding Embedding::build(const RotationSystem& rs) {
    ValidationReport rep;
    auto emb = build_checked(rs, rep);
    if (!emb) throw ValidationError(join(rep.errors));
    return std::move(*emb);
}

Embedding Embedding::from_faces(int vertex_count, const std::vector<std::vector<Vertex>>& triangles,
                                const std::vector<std::vector<Vertex>>& outer) {
    std::vector<std::vector<Vertex>> faces = triangles;
    faces.insert(faces.end(), outer.begin(), outer.end());
    const int nf = static_cast<int>(faces.size());

    // directed edge -> (face, position); used to propagate a common orientation
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> faces_of_edge;
    for (int f = 0; f < nf; ++f) {
        const auto& c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i)
            faces_of_edge[canonical_pair(c[i], c[(i + 1) % c.size()])].push_back(f);
    }
    for (const auto& [edge, fs] : faces_of_edge)
        if (fs.size() != 2)
            throw ValidationError("edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                                  " lies on " + std::to_string(fs.size()) + " facets");

    auto has_dart = [&](int f, Vertex a, Vertex b) {
        const auto& c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] == a && c[(i + 1) % c.size()] == b) return true;
        return false;
    };
    std::vector<int> state(nf, 0); // 0 unvisited, 1 oriented
    for (int root = 0; root < nf; ++root) {
        if (state[root]) continue;
        state[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            const auto c = faces[f];
            for (std::size_t i = 0; i < c.size(); ++i) {
                Vertex a = c[i], b = c[(i + 1) % c.size()];
                for (int g : faces_of_edge[canonical_pair(a, b)]) {
                    if (g == f) continue;
                    bool same = has_dart(g, a, b);
                    if (!state[g]) {
                        if (same) std::reverse(faces[g].begin(), faces[g].end());
                        state[g] = 1;
                        q.push(g);
                    } else if (same) {
                        throw ValidationError("facets cannot be oriented consistently");
                    }
                }
            }
        }
    }

    // corner (a, x, b) in an oriented face gives next_x(b) = a
    std::vector<std::map<Vertex, Vertex>> next(vertex_count);
    for (const auto& c : faces) {
        const std::size_t k = c.size();
        for (std::size_t i = 0; i < k; ++i) {
            Vertex a = c[(i + k - 1) % k], x = c[i], b = c[(i + 1) % k];
            if (x < 0 || x >= vertex_count) throw ValidationError("facet uses unknown vertex");
            if (!next[x].emplace(b, a).second) throw ValidationError("vertex " + std::to_string(x) + " is not manifold");
        }
    }
    RotationSystem rs;
    rs.vertex_count = vertex_count;
    rs.rotation.resize(vertex_count);
    for (Vertex x = 0; x < vertex_count; ++x) {
        if (next[x].empty()) throw ValidationError("vertex " + std::to_string(x) + " lies on no facet");
        Vertex start = next[x].begin()->first;
        Vertex cur = start;
        do {
            rs.rotation[x].push_back(cur);
            auto it = next[x].find(cur);
            if (it == next[x].end()) throw ValidationError("vertex " + std::to_string(x) + " is not manifold");
            cur = it->second;
        } while (cur != start && rs.rotation[x].size() <= next[x].size());
        if (rs.rotation[x].size() != next[x].size())
            throw ValidationError("vertex " + std::to_string(x) + " is not manifold");
    }
    for (std::size_t k = 0; k < outer.size(); ++k) rs.outer.push_back(faces[triangles.size() + k]);
    return build(rs);
}

ValidationReport inspect(const RotationSystem& rs) {
    ValidationReport rep;
    build_checked(rs, rep);
    return rep;
}

ValidationReport validate_semi_mpg(const Embedding& e) { return inspect(e.rotation_system()); }

RotationSystem parse_graph_text(std::string_view text) {
    RotationSystem rs;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool header = false;
    bool have_n = false;
    std::vector<char> have_rot;
    std::vector<int> rot_line;
    auto strip = [](std::string s) {
        auto hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    auto parse_ints = [&](const std::string& s, int col0) {
        std::vector<int> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
            if (i >= s.size()) break;
            std::size_t j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
            std::string tok = s.substr(i, j - i);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
                throw InputError("expected a vertex id, got '" + tok + "'", line_no, col0 + static_cast<int>(i) + 1);
            out.push_back(std::stoi(tok));
            i = j;
        }
        return out;
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = strip(raw);
        if (s.empty()) continue;
        int col = static_cast<int>(raw.find(s.front())) + 1;
        if (!header) {
            if (s != "semimpg v1") throw InputError("expected header 'semimpg v1'", line_no, col);
            header = true;
            continue;
        }
        if (s.rfind("n ", 0) == 0) {
            if (have_n) throw InputError("duplicate vertex count", line_no, col);
            auto v = parse_ints(s.substr(2), col + 1);
            if (v.size() != 1 || v[0] <= 0) throw InputError("bad vertex count", line_no, col + 2);
            rs.vertex_count = v[0];
            rs.rotation.resize(v[0]);
            have_rot.assign(v[0], 0);
            rot_line.assign(v[0], 0);
            have_n = true;
            continue;
        }
        if (s.rfind("rot ", 0) == 0) {
            if (!have_n) throw InputError("rot line before vertex count", line_no, col);
            auto colon = s.find(':');
            if (colon == std::string::npos) throw InputError("missing ':' in rot line", line_no, col + static_cast<int>(s.size()));
            auto head = parse_ints(s.substr(4, colon - 4), col + 3);
            if (head.size() != 1) throw InputError("expected one vertex before ':'", line_no, col + 4);
            Vertex v = head[0];
            if (v >= rs.vertex_count) throw InputError("vertex id out of range", line_no, col + 4);
            if (have_rot[v]) throw InputError("duplicate rot line for vertex " + std::to_string(v), line_no, col);
            auto nbrs = parse_ints(s.substr(colon + 1), col + static_cast<int>(colon));
            for (Vertex u : nbrs)
                if (u >= rs.vertex_count) throw InputError("neighbor id out of range", line_no, col + static_cast<int>(colon) + 1);
            rs.rotation[v] = std::move(nbrs);
            have_rot[v] = 1;
            rot_line[v] = line_no;
            continue;
        }
        if (s.rfind("outer:", 0) == 0) {
            if (!have_n) throw InputError("outer line before vertex count", line_no, col);
            auto cyc = parse_ints(s.substr(6), col + 5);
            for (Vertex u : cyc)
                if (u >= rs.vertex_count) throw InputError("outer vertex out of range", line_no, col + 6);
            rs.outer.push_back(std::move(cyc));
            continue;
        }
        throw InputError("unrecognized line", line_no, col);
    }
    if (!header) throw InputError("empty graph file", line_no, 1);
    if (!have_n) throw InputError("missing vertex count", line_no, 1);
    for (Vertex v = 0; v < rs.vertex_count; ++v)
        if (!have_rot[v]) throw InputError("missing rot line for vertex " + std::to_string(v), line_no, 1);
    // symmetry and rotation consistency are reported with the offending line
    for (Vertex v = 0; v < rs.vertex_count; ++v) {
        std::set<Vertex> seen;
        for (Vertex u : rs.rotation[v]) {
            if (u == v) throw InputError("self-loop at vertex " + std::to_string(v), rot_line[v], 1);
            if (!seen.insert(u).second)
                throw InputError("rotation of vertex " + std::to_string(v) + " repeats " + std::to_string(u), rot_line[v], 1);
            if (index_in(rs.rotation[u], v) < 0)
                throw InputError("asymmetric adjacency: " + std::to_string(v) + " lists " + std::to_string(u) +
                                     " but " + std::to_string(u) + " omits " + std::to_string(v),
                                 rot_line[v], 1);
        }
    }
    return rs;
}

Embedding parse_graph(std::string_view text) { return Embedding::build(parse_graph_text(text)); }

Embedding load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const Embedding& e) {
    std::ostringstream out;
    out << "semimpg v1\n";
    out << "n " << e.vertex_count() << "\n";
    for (Vertex v = 0; v < e.vertex_count(); ++v) {
        out << "rot " << v << ":";
        for (Vertex u : e.rotation(v)) out << ' ' << u;
        out << "\n";
    }
    auto rs = e.rotation_system();
    for (const auto& c : rs.outer) {
        out << "outer:";
        for (Vertex v : c) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

} // namespace rgbt
