#pragma once

#include "rgbt/embedding.hpp"

#include <map>
#include <string>
#include <vector>

namespace rgbt {

enum class Template { Ptg, TD55, TD5cubed, TD5fourth, HatTD, M1, M2 };

std::string template_name(Template t);
Template parse_template(const std::string& s);  // throws InputError
std::vector<Template> all_templates();

/// A triangulated disk: the local configuration with its boundary cycle.
struct TemplateDisk {
    Template kind;
    int vertex_count = 0;
    std::vector<std::vector<Vertex>> triangles;
    std::vector<Vertex> boundary;        // outer rim of the disk
    std::vector<Vertex> td;              // topic vertices
    std::vector<Vertex> omega;           // border cycle of td, labeled order
    std::map<std::string, Vertex> labels;
    std::map<Vertex, int> required_degree;  // checked after instantiation
};

TemplateDisk template_disk(Template t);

struct TemplateInstance {
    Embedding graph;
    Template kind;
    std::map<std::string, Vertex> labels;   // template label -> host vertex
    std::vector<Vertex> td;
    std::vector<Vertex> omega;
    std::map<std::string, int> degrees;     // achieved degrees of labeled vertices
};

/// Closes the template disk into an MPG with `layers` antiprism bands and a
/// cap vertex. Throws OperationError when a degree requirement fails.
TemplateInstance instantiate_template(Template t, int layers = 1);

/// Glues the template disk into outer facet `outer_index` of `host`,
/// matching boundary position i of the disk to host facet position
/// (i + offset), reversed when `reflect` is set.
TemplateInstance glue_template(Template t, const Embedding& host, int outer_index, int offset = 0,
                               bool reflect = false);

} // namespace rgbt
