// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphbench/graph.hpp"
#include "graphbench/rng.hpp"
#include "graphbench/templates.hpp"

namespace graphbench {

using AnswerRecord = std::map<std::string, PropertyValue>;

struct QueryInstance {
    QueryTemplate templ = QueryTemplate::node_count;
    std::map<std::string, std::string> params;        // slot name -> rendered value
    std::map<std::string, PropertyValue> value_params;  // typed property values
    int hop_bound = 3;
    std::string question_text;
    std::string output_schema;

    nlohmann::json to_json() const;
    static QueryInstance from_json(const nlohmann::json& j);
};

struct GoldAnswer {
    ComparisonMode mode = ComparisonMode::exact_set;
    std::vector<AnswerRecord> records;  // sorted, distinct
    long long count = 0;                // single_count value / argmax maximum

    bool empty() const;
    nlohmann::json to_json() const;
    static GoldAnswer from_json(const nlohmann::json& j);
    friend bool operator==(const GoldAnswer&, const GoldAnswer&) = default;
};

// Samples slot values until the gold answer is non-empty; throws after
// 100 attempts. hop_bound fills every n / max_hops slot.
QueryInstance instantiate(QueryTemplate t, const PropertyGraph& graph,
                          const SchemaDescription& schema, Rng& rng, int hop_bound = 3);

GoldAnswer gold_answer(const QueryInstance& instance, const PropertyGraph& graph);

// Naive full-enumeration oracle; refuses graphs over 2,000 relationships.
GoldAnswer brute_force_gold(const QueryInstance& instance, const PropertyGraph& graph);

nlohmann::json record_to_json(const AnswerRecord& record);
void sort_records(std::vector<AnswerRecord>& records);

}  // namespace graphbench
