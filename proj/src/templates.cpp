// SPDX-License-Identifier: Apache-2.0
#include "graphbench/templates.hpp"

#include <stdexcept>

namespace graphbench {

namespace {

struct TemplateInfo {
    QueryTemplate id;
    std::string_view name;
    std::string_view category;
    ComparisonMode mode;
    std::string_view instruction;
    std::string_view schema;
    std::vector<std::string> fields;
};

const std::vector<TemplateInfo>& table() {
    static const std::vector<TemplateInfo> infos = {
        {QueryTemplate::node_count, "node_count", "Retrieval & Aggregation",
         ComparisonMode::single_count,
         "Count the number of \"{source_label}\" nodes that are connected to any "
         "\"{target_label}\" node. Return ONLY the output with the count in JSON "
         "format: {output_schema}.",
         R"([{"count": "number"}])",
         {"count"}},
        {QueryTemplate::relationship_count, "relationship_count",
         "Retrieval & Aggregation", ComparisonMode::single_count,
         "How many relationships of type \"{rel_type_name}\" exist? Return ONLY the "
         "output with the count in JSON format: {output_schema}.",
         R"([{"count": "number"}])",
         {"count"}},
        {QueryTemplate::node_with_most_relationships, "node_with_most_relationships",
         "Retrieval & Aggregation", ComparisonMode::argmax_membership,
         "Which \"{source_node_label}\" node has the most outgoing \"{rel_type_name}\" "
         "relationships? Return ONLY ONE answer in JSON format as per the schema: "
         "{output_schema}.",
         R"([{"node_key": "string", "rel_count": "number"}])",
         {"node_key", "rel_count"}},
        {QueryTemplate::node_by_property, "node_by_property", "Retrieval & Aggregation",
         ComparisonMode::exact_set,
         "Find all \"{node_label}\" nodes where \"{prop_name}\" is \"{prop_value}\". "
         "Return results in JSON format according to the schema: {output_schema}.",
         R"([{"node_key": "string"}])",
         {"node_key"}},
        {QueryTemplate::relationship_by_property, "relationship_by_property",
         "Retrieval & Aggregation", ComparisonMode::exact_set,
         "Find all \"{rel_type_name}\" relationships where \"{prop_name}\" is "
         "\"{prop_value}\". Return results in JSON format based on the schema: "
         "{output_schema}.",
         R"([{"source_key": "string", "target_key": "string", ...}])",
         {"source_key", "target_key"}},
        {QueryTemplate::path_finding, "path_finding", "Path & Relational Traversal",
         ComparisonMode::exact_set,
         "Find all paths from \"{source_label}\" to \"{target_label}\" through "
         "\"{middle_label}\". Return results in JSON format as per schema: "
         "{output_schema}.",
         R"([{"source_node_key": "string", "target_node_key": "string"}])",
         {"source_node_key", "target_node_key"}},
        {QueryTemplate::variable_hop_path, "variable_hop_path",
         "Path & Relational Traversal", ComparisonMode::exact_set,
         "Find all paths where a \"{source_label}\" node reaches a \"{target_label}\" "
         "node in 1 to {n} steps, then takes one more step to any other node. Return "
         "the keys of the source and target nodes in JSON format as per schema: "
         "{output_schema}.",
         R"([{"source_node_key": "string", "target_node_key": "string"}])",
         {"source_node_key", "target_node_key"}},
        {QueryTemplate::path_from_specific_node, "path_from_specific_node",
         "Path & Relational Traversal", ComparisonMode::exact_set,
         "Find all paths of 1 to {n} steps from the node with key \"{source_key}\" to "
         "any node of type \"{target_label}\". Return the keys of the target nodes "
         "found in JSON format: {output_schema}.",
         R"([{"target_node_key": "string"}])",
         {"target_node_key"}},
        {QueryTemplate::remote_node_property, "remote_node_property",
         "Path & Relational Traversal", ComparisonMode::value_membership,
         "From a \"{source_label}\" node with key \"{source_key}\" find a "
         "\"{target_label}\" node that is not a direct neighbor but is reachable in 2 "
         "or more hops, and return its \"{prop_name}\". ANY valid node's property will "
         "be accepted. Return ONLY ONE answer in JSON format: {output_schema}.",
         R"([{"value": "{prop_type}"}])",
         {"value"}},
        {QueryTemplate::compositional_intersection, "compositional_intersection",
         "Complex Logical Composition", ComparisonMode::exact_set,
         "Find all nodes of type \"{source_label}\" that have a relationship to at "
         "least one \"{target1_label}\" node AND at least one \"{target2_label}\" "
         "node. Return the keys of these \"{source_label}\" nodes in JSON in this "
         "format: {output_schema}.",
         R"([{"node_key": "string"}])",
         {"node_key"}},
        {QueryTemplate::negation_with_connection, "negation_with_connection",
         "Complex Logical Composition", ComparisonMode::exact_set,
         "Find all nodes of type \"{source_label}\" that are connected to at least one "
         "\"{positive_target_label}\" node AND are not connected to any "
         "\"{negative_target_label}\" node. Return their keys in JSON in this format: "
         "{output_schema}.",
         R"([{"node_key": "string"}])",
         {"node_key"}},
        {QueryTemplate::negation_on_rel_property, "negation_on_rel_property",
         "Complex Logical Composition", ComparisonMode::exact_set,
         "Find all \"{source_label}\" nodes where \"{source_prop_name}\" is "
         "\"{source_prop_value}\". From those, find the ones connected to a "
         "\"{target_label}\" node by a \"{rel_type_name}\" relationship where the "
         "relationship's \"{prop_name}\" is not \"{val2}\". Return the keys of the "
         "source nodes in JSON in this format: {output_schema}.",
         R"([{"node_key": "string"}])",
         {"node_key"}},
    };
    return infos;
}

const TemplateInfo& info(QueryTemplate t) {
    for (const auto& i : table())
        if (i.id == t)
            return i;
    throw std::logic_error("unknown query template");
}

}  // namespace

std::string_view template_name(QueryTemplate t) { return info(t).name; }

std::optional<QueryTemplate> template_from_name(std::string_view name) {
    for (const auto& i : table())
        if (i.name == name)
            return i.id;
    return std::nullopt;
}

std::string_view instruction_template(QueryTemplate t) { return info(t).instruction; }

std::string_view output_schema_template(QueryTemplate t) { return info(t).schema; }

std::string_view category_name(QueryTemplate t) { return info(t).category; }

ComparisonMode comparison_mode(QueryTemplate t) { return info(t).mode; }

std::string_view comparison_mode_name(ComparisonMode m) {
    switch (m) {
        case ComparisonMode::exact_set: return "exact_set";
        case ComparisonMode::single_count: return "single_count";
        case ComparisonMode::argmax_membership: return "argmax_membership";
        case ComparisonMode::value_membership: return "value_membership";
    }
    throw std::logic_error("unknown comparison mode");
}

std::optional<ComparisonMode> comparison_mode_from_name(std::string_view name) {
    for (ComparisonMode m : {ComparisonMode::exact_set, ComparisonMode::single_count,
                             ComparisonMode::argmax_membership,
                             ComparisonMode::value_membership})
        if (comparison_mode_name(m) == name)
            return m;
    return std::nullopt;
}

std::vector<std::string> answer_fields(QueryTemplate t) { return info(t).fields; }

std::string fill_placeholders(
    std::string_view text,
    const std::vector<std::pair<std::string, std::string>>& slots) {
    std::string out(text);
    for (const auto& [slot, value] : slots) {
        std::string needle = "{" + slot + "}";
        std::size_t pos = 0;
        while ((pos = out.find(needle, pos)) != std::string::npos) {
            out.replace(pos, needle.size(), value);
            pos += value.size();
        }
    }
    return out;
}

}  // namespace graphbench
