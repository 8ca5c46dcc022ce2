// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphbench {

enum class QueryTemplate {
    node_count,
    relationship_count,
    node_with_most_relationships,
    node_by_property,
    relationship_by_property,
    path_finding,
    variable_hop_path,
    path_from_specific_node,
    remote_node_property,
    compositional_intersection,
    negation_with_connection,
    negation_on_rel_property,
};

inline constexpr std::array<QueryTemplate, 12> kAllTemplates = {
    QueryTemplate::node_count,
    QueryTemplate::relationship_count,
    QueryTemplate::node_with_most_relationships,
    QueryTemplate::node_by_property,
    QueryTemplate::relationship_by_property,
    QueryTemplate::path_finding,
    QueryTemplate::variable_hop_path,
    QueryTemplate::path_from_specific_node,
    QueryTemplate::remote_node_property,
    QueryTemplate::compositional_intersection,
    QueryTemplate::negation_with_connection,
    QueryTemplate::negation_on_rel_property,
};

enum class ComparisonMode {
    exact_set,
    single_count,
    argmax_membership,
    value_membership,
};

std::string_view template_name(QueryTemplate t);
std::optional<QueryTemplate> template_from_name(std::string_view name);

// Instruction text with {slot} placeholders, including {output_schema}.
std::string_view instruction_template(QueryTemplate t);

// Output schema literal; remote_node_property keeps a {prop_type} slot.
std::string_view output_schema_template(QueryTemplate t);

std::string_view category_name(QueryTemplate t);
ComparisonMode comparison_mode(QueryTemplate t);

std::string_view comparison_mode_name(ComparisonMode m);
std::optional<ComparisonMode> comparison_mode_from_name(std::string_view name);

// Field names scored records must carry.
std::vector<std::string> answer_fields(QueryTemplate t);

// Fills {slot} placeholders by literal replacement.
std::string fill_placeholders(std::string_view text,
                              const std::vector<std::pair<std::string, std::string>>& slots);

}  // namespace graphbench
