// SPDX-License-Identifier: Apache-2.0
#include "graphbench/maze.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphbench/rng.hpp"
#include "graphbench/value.hpp"

namespace graphbench {

namespace {

constexpr double kWallSentinel = -1e9;
constexpr int kCarveAttempts = 1000;

std::string quoted_list(const std::vector<std::string>& keys) {
    std::string out = "[";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i)
            out += ", ";
        out += "'" + keys[i] + "'";
    }
    return out + "]";
}

}  // namespace

void MazeConfig::validate() const {
    if (width < 1 || height < 1)
        throw std::invalid_argument("maze dimensions must be positive");
    if (wall_ratio < 0.0 || wall_ratio >= 1.0)
        throw std::invalid_argument("wall_ratio must lie in [0,1)");
    if (min_path_len < 1 || min_path_len >= width * height)
        throw std::invalid_argument("min_path_len must lie in [1, width*height)");
}

int MazeState::index_of(const std::string& key) const {
    if (key.empty() || key.size() > 9)
        return -1;
    for (char c : key)
        if (c < '0' || c > '9')
            return -1;
    if (key.size() > 1 && key[0] == '0')
        return -1;
    int idx = std::stoi(key);
    return idx < cell_count() ? idx : -1;
}

std::vector<int> MazeState::adjacent_path_cells(int index) const {
    int r = index / width_;
    int c = index % width_;
    std::vector<int> out;
    const int dr[] = {-1, 1, 0, 0};
    const int dc[] = {0, 0, -1, 1};  // up, down, left, right
    for (int i = 0; i < 4; ++i) {
        int nr = r + dr[i];
        int nc = c + dc[i];
        if (nr < 0 || nr >= height_ || nc < 0 || nc >= width_)
            continue;
        int n = nr * width_ + nc;
        if (!cells_[n].is_wall)
            out.push_back(n);
    }
    return out;
}

std::string MazeState::get_possible_next_cells(const std::string& node_id) {
    int idx = index_of(node_id);
    if (idx < 0)
        return "Error: invalid cell (key " + node_id + ").";
    if (cells_[idx].is_wall)
        return "Error: cell is a wall (key " + node_id + ").";
    if (!cells_[idx].marked) {
        cells_[idx].marked = true;
        cells_[idx].mark_order = visit_counter_++;
    }
    auto neighbors = adjacent_path_cells(idx);
    last_output_ = neighbors;
    std::string out = "Cell " + node_id + " marked as visited (mark_order=" +
                      std::to_string(cells_[idx].mark_order) +
                      "). Traversable neighboring cells: [";
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
        const MazeCell& n = cells_[neighbors[i]];
        if (i)
            out += ", ";
        out += "{'key': '" + std::to_string(neighbors[i]) +
               "', 'euclidean_distance': " + PropertyValue(n.euclidean_distance).canonical() +
               ", 'marked': " + (n.marked ? "True" : "False") +
               ", 'mark_order': " + std::to_string(n.mark_order) + "}";
    }
    return out + "]";
}

std::string MazeState::get_connected_path() const {
    int first = -1, last = -1;
    std::set<int> marked;
    for (int i = 0; i < cell_count(); ++i) {
        if (!cells_[i].marked)
            continue;
        marked.insert(i);
        if (first < 0 || cells_[i].mark_order < cells_[first].mark_order)
            first = i;
        if (last < 0 || cells_[i].mark_order > cells_[last].mark_order)
            last = i;
    }
    if (first < 0)
        return "Error: no cells have been visited yet.";

    std::deque<int> queue{first};
    std::vector<int> parent(cell_count(), -2);
    parent[first] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == last)
            break;
        for (int n : adjacent_path_cells(cur)) {
            if (!marked.contains(n) || parent[n] != -2)
                continue;
            parent[n] = cur;
            queue.push_back(n);
        }
    }
    if (parent[last] == -2)
        return "Error: no valid path can be formed from the visited cells.";

    std::vector<std::string> path;
    for (int cur = last; cur != -1; cur = parent[cur])
        path.push_back(std::to_string(cur));
    std::reverse(path.begin(), path.end());
    return "Shortest path from cell " + std::to_string(first) + " to cell " +
           std::to_string(last) + ": " + quoted_list(path);
}

MazeState::Validation MazeState::validate_path(const MazePath& path) const {
    if (path.empty())
        return {false, "empty path"};
    if (path.front() != start_key())
        return {false, "does not start at the start cell"};
    std::set<int> seen;
    int prev = -1;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int idx = index_of(path[i]);
        if (idx < 0)
            return {false, "invalid cell (key " + path[i] + ")"};
        if (cells_[idx].is_wall)
            return {false, "wall cell (key " + path[i] + ")"};
        if (!seen.insert(idx).second)
            return {false, "repeated cell (key " + path[i] + ")"};
        if (i > 0) {
            auto adj = adjacent_path_cells(prev);
            if (std::find(adj.begin(), adj.end(), idx) == adj.end())
                return {false, "non-adjacent step (" + path[i - 1] + " to " + path[i] + ")"};
        }
        prev = idx;
    }
    if (path.back() != goal_key())
        return {false, "does not end at the goal cell"};
    return {true, ""};
}

std::string MazeState::render_ascii(MazeOverlay overlay) const {
    std::size_t cell_width = 1;
    if (overlay == MazeOverlay::plain)
        cell_width = std::to_string(cell_count() - 1).size();

    std::set<int> output_cells(last_output_.begin(), last_output_.end());
    auto glyph = [&](int idx) -> std::string {
        const MazeCell& c = cells_[idx];
        if (overlay == MazeOverlay::plain) {
            if (idx == start_)
                return "S";
            if (idx == goal_)
                return "G";
            if (c.is_wall)
                return "#";
            return std::to_string(idx);
        }
        if (c.is_wall)
            return "#";
        if (idx == start_)
            return "s";
        if (idx == goal_)
            return "G";
        if (output_cells.contains(idx))
            return "*";
        if (c.marked)
            return "o";
        return ".";
    };

    std::string border = "+";
    for (int c = 0; c < width_; ++c)
        border += std::string(cell_width + 2, '-') + "+";
    border += "\n";

    std::string out = border;
    for (int r = 0; r < height_; ++r) {
        out += "|";
        for (int c = 0; c < width_; ++c) {
            std::string g = glyph(r * width_ + c);
            std::size_t pad = cell_width - g.size();
            out += " " + std::string(pad / 2, ' ') + g +
                   std::string(pad - pad / 2, ' ') + " |";
        }
        out += "\n" + border;
    }
    return out;
}

MazePath MazeState::carved_path() const {
    MazePath path;
    for (int idx : carved_)
        path.push_back(std::to_string(idx));
    return path;
}

double MazeState::actual_wall_ratio() const {
    int walls = 0;
    for (const auto& c : cells_)
        walls += c.is_wall ? 1 : 0;
    return static_cast<double>(walls) / static_cast<double>(cell_count());
}

MazeState generate_maze(const MazeConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const int total = config.width * config.height;

    for (int attempt = 0; attempt < kCarveAttempts; ++attempt) {
        int start = static_cast<int>(rng.below(total));
        int goal = static_cast<int>(rng.below(total - 1));
        if (goal >= start)
            ++goal;

        std::vector<int> walk{start};
        std::vector<char> in_walk(total, 0);
        in_walk[start] = 1;
        bool carved = false;
        while (true) {
            int cur = walk.back();
            int r = cur / config.width;
            int c = cur % config.width;
            std::vector<int> candidates;
            const int dr[] = {-1, 1, 0, 0};
            const int dc[] = {0, 0, -1, 1};
            for (int i = 0; i < 4; ++i) {
                int nr = r + dr[i];
                int nc = c + dc[i];
                if (nr < 0 || nr >= config.height || nc < 0 || nc >= config.width)
                    continue;
                int n = nr * config.width + nc;
                if (in_walk[n])
                    continue;
                if (n == goal && walk.size() < static_cast<std::size_t>(config.min_path_len))
                    continue;
                candidates.push_back(n);
            }
            if (candidates.empty())
                break;
            int next = rng.pick(candidates);
            walk.push_back(next);
            in_walk[next] = 1;
            if (next == goal) {
                carved = true;
                break;
            }
        }
        if (!carved)
            continue;

        MazeState maze;
        maze.width_ = config.width;
        maze.height_ = config.height;
        maze.start_ = start;
        maze.goal_ = goal;
        maze.carved_ = walk;
        maze.cells_.resize(total);

        std::vector<int> wall_candidates;
        for (int i = 0; i < total; ++i)
            if (!in_walk[i])
                wall_candidates.push_back(i);
        for (std::size_t i = wall_candidates.size(); i > 1; --i)
            std::swap(wall_candidates[i - 1], wall_candidates[rng.below(i)]);
        auto budget = static_cast<std::size_t>(std::llround(config.wall_ratio * total));
        budget = std::min(budget, wall_candidates.size());
        for (std::size_t i = 0; i < budget; ++i)
            maze.cells_[wall_candidates[i]].is_wall = true;

        int gr = goal / config.width;
        int gc = goal % config.width;
        for (int i = 0; i < total; ++i) {
            if (maze.cells_[i].is_wall) {
                maze.cells_[i].euclidean_distance = kWallSentinel;
            } else {
                double drr = i / config.width - gr;
                double dcc = i % config.width - gc;
                maze.cells_[i].euclidean_distance = std::sqrt(drr * drr + dcc * dcc);
            }
        }
        return maze;
    }
    throw std::runtime_error("infeasible config: no start-goal carve of at least " +
                             std::to_string(config.min_path_len) + " steps found in " +
                             std::to_string(kCarveAttempts) + " attempts");
}

SchemaDescription maze_schema_description() {
    SchemaDescription d;
    d.node_classes.push_back(
        {"Cell", {"euclidean_distance", "key", "mark_order", "marked"}});
    d.rel_classes.push_back({"ADJACENT", "Cell", "Cell", {}});
    return d;
}

nlohmann::json MazeState::to_json() const {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : cells_)
        cells.push_back({{"is_wall", c.is_wall},
                         {"euclidean_distance", c.euclidean_distance},
                         {"marked", c.marked},
                         {"mark_order", c.mark_order}});
    return {{"width", width_},
            {"height", height_},
            {"start", start_},
            {"goal", goal_},
            {"carved", carved_},
            {"visit_counter", visit_counter_},
            {"cells", std::move(cells)}};
}

MazeState MazeState::from_json(const nlohmann::json& j) {
    MazeState m;
    m.width_ = j.at("width").get<int>();
    m.height_ = j.at("height").get<int>();
    m.start_ = j.at("start").get<int>();
    m.goal_ = j.at("goal").get<int>();
    m.carved_ = j.at("carved").get<std::vector<int>>();
    m.visit_counter_ = j.at("visit_counter").get<int>();
    for (const auto& item : j.at("cells")) {
        MazeCell c;
        c.is_wall = item.at("is_wall").get<bool>();
        c.euclidean_distance = item.at("euclidean_distance").get<double>();
        c.marked = item.at("marked").get<bool>();
        c.mark_order = item.at("mark_order").get<int>();
        m.cells_.push_back(c);
    }
    if (static_cast<int>(m.cells_.size()) != m.width_ * m.height_)
        throw std::runtime_error("maze cell count does not match dimensions");
    return m;
}

}  // namespace graphbench
