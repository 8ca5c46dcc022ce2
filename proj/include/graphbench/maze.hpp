// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphbench/graph.hpp"

namespace graphbench {

struct MazeConfig {
    int width = 10;
    int height = 10;
    double wall_ratio = 0.5;
    int min_path_len = 15;  // steps, not cells
    std::uint64_t seed = 0;

    void validate() const;
};

struct MazeCell {
    bool is_wall = false;
    double euclidean_distance = 0.0;
    bool marked = false;
    int mark_order = -1;
};

using MazePath = std::vector<std::string>;

enum class MazeOverlay { plain, exploration };

class MazeState {
public:
    int width() const { return width_; }
    int height() const { return height_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const MazeCell& cell(int index) const { return cells_.at(index); }
    std::string start_key() const { return std::to_string(start_); }
    std::string goal_key() const { return std::to_string(goal_); }

    // The path carved during generation, as cell keys start to goal.
    MazePath carved_path() const;
    double actual_wall_ratio() const;

    // Marks the cell and reports traversable neighbors; errors come back
    // as in-band messages, never exceptions.
    std::string get_possible_next_cells(const std::string& node_id);
    std::string get_connected_path() const;

    // Neighboring path-cell indices in up, down, left, right order.
    std::vector<int> adjacent_path_cells(int index) const;

    struct Validation {
        bool valid = false;
        std::string reason;
    };
    Validation validate_path(const MazePath& path) const;

    std::string render_ascii(MazeOverlay overlay) const;

    nlohmann::json to_json() const;
    static MazeState from_json(const nlohmann::json& j);

    friend MazeState generate_maze(const MazeConfig& config);

private:
    int index_of(const std::string& key) const;  // -1 when malformed or out of range

    int width_ = 0;
    int height_ = 0;
    int start_ = 0;
    int goal_ = 0;
    std::vector<MazeCell> cells_;
    std::vector<int> carved_;
    int visit_counter_ = 0;
    std::vector<int> last_output_;
};

// Carves a random start-goal path of at least min_path_len steps, then
// fills wall_ratio of the remaining cells with walls. Throws
// "infeasible config" after 1,000 failed carve attempts.
MazeState generate_maze(const MazeConfig& config);

// The maze-as-graph schema shown to agents in the with-tools setting.
SchemaDescription maze_schema_description();

}  // namespace graphbench
