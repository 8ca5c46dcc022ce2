// SPDX-License-Identifier: Apache-2.0
#include "graphbench/presets.hpp"

namespace graphbench {

namespace {

GeneratorConfig primary(std::size_t nodes) {
    GeneratorConfig config;
    config.num_nodes = nodes;
    config.node_classes = 4;
    config.rel_classes = 2;
    config.avg_props_per_entity = 3;
    config.values_per_property = 5;
    config.edge_density = 0.04;
    return config;
}

GeneratorConfig scaled(std::size_t nodes) {
    GeneratorConfig config;
    config.num_nodes = nodes;
    config.node_classes = 8;
    config.rel_classes = 4;
    config.avg_props_per_entity = 6;
    config.values_per_property = 10;
    config.edge_density = 0.04;
    return config;
}

}  // namespace

std::optional<GeneratorConfig> preset_config(std::string_view name) {
    if (name == "paper-100")
        return primary(100);
    if (name == "paper-150")
        return scaled(150);
    if (name == "paper-200")
        return scaled(200);
    if (name == "paper-500")
        return scaled(500);
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    return {"paper-100", "paper-150", "paper-200", "paper-500"};
}

}  // namespace graphbench
