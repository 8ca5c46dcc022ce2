// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "graphbench/maze.hpp"

namespace graphbench {

// System prompt for tool-using graph query runs; {graph_schema} and
// {system_time} filled, everything else fixed text.
std::string build_prompt_with_tools(const std::string& schema_text,
                                    const std::string& system_time);

// System prompt for runs where the whole graph is serialized into the
// context instead of offering tools.
std::string build_prompt_no_tools(const std::string& graph_text,
                                  const std::string& system_time);

// The answer shape maze prompts ask for: {"path": ["key1", "key2", ...]}.
std::string maze_output_schema();

// Maze prompt embedding the rendered grid (no tools available).
std::string build_maze_prompt_no_tools(const MazeState& maze);

// Maze prompt for the tool-using setting; embeds the cell/ADJACENT schema
// table instead of the grid.
std::string build_maze_prompt_with_tools(const MazeState& maze);

}  // namespace graphbench
