#include "rgbt/templates.hpp"
#include "rgbt/corpus.hpp"

namespace rgbt {

std::string template_name(Template t) {
    switch (t) {
    case Template::Ptg: return "Ptg";
    case Template::TD55: return "TD55";
    case Template::TD5cubed: return "TD5cubed";
    case Template::TD5fourth: return "TD5fourth";
    case Template::HatTD: return "HatTD";
    case Template::M1: return "M1";
    case Template::M2: return "M2";
    }
    return "?";
}

Template parse_template(const std::string& s) {
    for (Template t : all_templates())
        if (template_name(t) == s) return t;
    throw InputError("unknown template '" + s + "'");
}

std::vector<Template> all_templates() {
    return {Template::Ptg, Template::TD55, Template::TD5cubed, Template::TD5fourth,
            Template::HatTD, Template::M1, Template::M2};
}

namespace {

// Adjacent degree-5 pair a=0, b=1 inside the hexagon d,v1,v2,c,v4,v5 (ids
// 2..7). The two common neighbors of a and b sit at hexagon positions s, s+3.
TemplateDisk hexagon_pair(Template kind, int s) {
    TemplateDisk d;
    d.kind = kind;
    d.vertex_count = 8;
    const std::vector<Vertex> p{2, 3, 4, 5, 6, 7};
    auto P = [&](int i) { return p[((i % 6) + 6) % 6]; };
    for (int i = s; i < s + 3; ++i) d.triangles.push_back({0, P(i), P(i + 1)});
    d.triangles.push_back({0, P(s + 3), 1});
    for (int i = s + 3; i < s + 6; ++i) d.triangles.push_back({1, P(i), P(i + 1)});
    d.triangles.push_back({1, P(s), 0});
    d.boundary = p;
    d.omega = p;
    d.td = {0, 1};
    d.labels = {{"a", 0}, {"b", 1}, {"d", 2}, {"v1", 3}, {"v2", 4}, {"c", 5}, {"v4", 6}, {"v5", 7}};
    d.required_degree = {{0, 5}, {1, 5}};
    return d;
}

TemplateDisk triangle_core(Template kind) {
    TemplateDisk d;
    d.kind = kind;
    d.vertex_count = 9;
    const Vertex a = 0, b = 1, c = 2, dd = 3, v1 = 4, v2 = 5, v3 = 6, v4 = 7, v5 = 8;
    d.triangles = {{a, dd, v1}, {a, v1, v2}, {a, v2, c},  {c, v2, v3}, {c, v3, v4},
                   {c, v4, b},  {b, v4, v5}, {b, v5, dd}, {b, dd, a},  {a, b, c}};
    d.omega = {dd, v1, v2, v3, v4, v5};
    d.boundary = d.omega;
    d.td = {a, b, c};
    d.labels = {{"a", a}, {"b", b}, {"c", c}, {"d", dd}, {"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4}, {"v5", v5}};
    d.required_degree = {{a, 5}, {b, 5}, {c, 5}};
    return d;
}

} // namespace

TemplateDisk template_disk(Template t) {
    switch (t) {
    case Template::Ptg: {
        TemplateDisk d;
        d.kind = t;
        d.vertex_count = 6;
        for (int i = 0; i < 5; ++i) d.triangles.push_back({0, 1 + i, 1 + (i + 1) % 5});
        d.omega = {1, 2, 3, 4, 5};
        d.boundary = d.omega;
        d.td = {0};
        d.labels = {{"v", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3}, {"v4", 4}, {"v5", 5}};
        d.required_degree = {{0, 5}};
        return d;
    }
    case Template::TD55: return hexagon_pair(t, 0);
    case Template::M1: return hexagon_pair(t, 1);
    case Template::M2: return hexagon_pair(t, 2);
    case Template::TD5cubed: return triangle_core(t);
    case Template::TD5fourth: {
        TemplateDisk d;
        d.kind = t;
        d.vertex_count = 10;
        const Vertex a = 0, b = 1, c = 2, dd = 3;
        const Vertex v1 = 4, v2 = 5, v3 = 6, v4 = 7, v5 = 8, v6 = 9;
        d.triangles = {{a, b, c},  {a, dd, b},  {c, v1, v2}, {c, v2, v3}, {c, v3, b},   {c, a, v1},
                       {b, v3, v4}, {b, v4, dd}, {dd, v4, v5}, {dd, v5, v6}, {dd, v6, a}, {a, v6, v1}};
        d.omega = {v1, v2, v3, v4, v5, v6};
        d.boundary = d.omega;
        d.td = {a, b, c, dd};
        d.labels = {{"a", a},   {"b", b},   {"c", c},   {"d", dd},  {"v1", v1},
                    {"v2", v2}, {"v3", v3}, {"v4", v4}, {"v5", v5}, {"v6", v6}};
        d.required_degree = {{a, 5}, {b, 5}, {c, 5}, {dd, 5}};
        return d;
    }
    case Template::HatTD: {
        TemplateDisk d = triangle_core(t);
        const auto p = d.omega;
        std::vector<Vertex> u(6);
        for (int i = 0; i < 6; ++i) {
            u[i] = 9 + i;
            d.labels["u" + std::to_string(i + 1)] = u[i];
        }
        for (int i = 0; i < 6; ++i) {
            d.triangles.push_back({p[i], p[(i + 1) % 6], u[i]});
            d.triangles.push_back({p[(i + 1) % 6], u[(i + 1) % 6], u[i]});
        }
        d.vertex_count = 15;
        d.boundary = u;
        for (const char* name : {"d", "v2", "v4"}) d.required_degree[d.labels.at(name)] = 6;
        for (const char* name : {"v1", "v3", "v5"}) d.required_degree[d.labels.at(name)] = 5;
        return d;
    }
    }
    throw InputError("unknown template");
}

namespace {

TemplateInstance finish(Embedding g, const TemplateDisk& d, const std::vector<Vertex>& map) {
    TemplateInstance inst{std::move(g), d.kind, {}, {}, {}, {}};
    for (const auto& [name, v] : d.labels) {
        inst.labels[name] = map[v];
        inst.degrees[name] = inst.graph.degree(map[v]);
    }
    for (Vertex v : d.td) inst.td.push_back(map[v]);
    for (Vertex v : d.omega) inst.omega.push_back(map[v]);
    for (const auto& [v, deg] : d.required_degree) {
        int got = inst.graph.degree(map[v]);
        if (got != deg) {
            std::string name;
            for (const auto& [n, x] : d.labels)
                if (x == v) name = n;
            throw OperationError("degree requirement impossible at this site: deg(" + name + ") = " +
                                 std::to_string(got) + ", need " + std::to_string(deg));
        }
    }
    return inst;
}

} // namespace

TemplateInstance instantiate_template(Template t, int layers) {
    if (layers < 0) throw InputError("layers must be non-negative");
    TemplateDisk d = template_disk(t);
    Embedding g = close_disk(d.vertex_count, d.triangles, d.boundary, layers);
    std::vector<Vertex> map(d.vertex_count);
    for (int i = 0; i < d.vertex_count; ++i) map[i] = i;
    return finish(std::move(g), d, map);
}

TemplateInstance glue_template(Template t, const Embedding& host, int outer_index, int offset, bool reflect) {
    TemplateDisk d = template_disk(t);
    auto outer = host.outer_facet_indices();
    if (outer_index < 0 || outer_index >= static_cast<int>(outer.size()))
        throw InputError("host has no outer facet " + std::to_string(outer_index));
    const auto& site = host.facets()[outer[outer_index]].vertices;
    const int m = static_cast<int>(site.size());
    if (m != static_cast<int>(d.boundary.size()))
        throw OperationError("attachment length mismatch: site has " + std::to_string(m) + " vertices, template boundary " +
                             std::to_string(d.boundary.size()));
    std::vector<Vertex> map(d.vertex_count, -1);
    for (int i = 0; i < m; ++i) {
        int pos = reflect ? offset - i : offset + i;
        map[d.boundary[i]] = site[((pos % m) + m) % m];
    }
    int n = host.vertex_count();
    for (Vertex v = 0; v < d.vertex_count; ++v)
        if (map[v] < 0) map[v] = n++;
    std::vector<std::vector<Vertex>> tris, outers;
    for (int f : host.triangles()) tris.push_back(host.facets()[f].vertices);
    for (int k = 0; k < static_cast<int>(outer.size()); ++k)
        if (k != outer_index) outers.push_back(host.facets()[outer[k]].vertices);
    for (auto tri : d.triangles) {
        for (auto& v : tri) v = map[v];
        tris.push_back(tri);
    }
    try {
        return finish(Embedding::from_faces(n, tris, outers), d, map);
    } catch (const ValidationError& err) {
        throw OperationError(std::string("gluing produced an invalid embedding: ") + err.what());
    }
}

} // namespace rgbt
