// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphbench/generator.hpp"

namespace graphbench {

// Named generator setups. paper-100 is the primary configuration (100
// nodes, 4 node classes, 2 relationship classes, 3 properties per entity,
// 5 values per property); paper-150/200/500 are the scaled family (8 node
// classes, 4 relationship classes, 6 properties, 10 values). Seed is left
// at 0 for the caller to fill.
std::optional<GeneratorConfig> preset_config(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace graphbench
