// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphbench/dictionary.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/rng.hpp"

namespace graphbench {

struct GeneratorConfig {
    std::size_t num_nodes = 100;
    std::size_t node_classes = 4;
    std::size_t rel_classes = 2;
    std::size_t avg_props_per_entity = 3;
    std::size_t values_per_property = 5;
    double edge_density = 0.04;
    int label_min_length = 4;
    int label_max_length = 8;
    double numeric_property_fraction = 0.25;
    std::uint64_t seed = 0;

    void validate() const;
};

struct PropertySpec {
    std::string name;
    std::vector<PropertyValue> pool;
};

struct NodeClassSpec {
    std::string label;
    std::vector<PropertySpec> properties;
};

struct RelClassSpec {
    std::string name;
    std::string source_label;
    std::string target_label;
    std::vector<PropertySpec> properties;
};

struct SchemaBlueprint {
    std::vector<NodeClassSpec> node_classes;
    std::vector<RelClassSpec> rel_classes;

    // Node property lists gain the implicit `key` entry.
    SchemaDescription to_description() const;

    nlohmann::json to_json() const;
    static SchemaBlueprint from_json(const nlohmann::json& j);
};

struct GeneratedGraph {
    PropertyGraph graph;
    SchemaBlueprint blueprint;
};

// Random alphabetic string in the length range that is not a dictionary
// word. Throws after 10,000 consecutive rejections.
std::string random_label(Rng& rng, int min_length, int max_length,
                         const Dictionary& dictionary);

SchemaBlueprint generate_blueprint(const GeneratorConfig& config, Rng& rng,
                                   const Dictionary& dictionary = Dictionary::standard());

GeneratedGraph generate_graph(const GeneratorConfig& config,
                              const Dictionary& dictionary = Dictionary::standard());

}  // namespace graphbench
