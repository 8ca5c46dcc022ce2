// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphbench/agent.hpp"
#include "graphbench/benchmark.hpp"

namespace graphbench {

// Deterministic reference agent: answers any of the 12 query templates using
// only the four graph tools — it never touches the graph object. Serves as
// the tool-sufficiency witness and as a gold-standard backend for pipeline
// tests.
class ScriptedSolver : public AgentBackend {
public:
    ScriptedSolver(QueryInstance instance, SchemaDescription schema);
    BackendTurn next_turn(const Conversation& conversation) override;

private:
    QueryInstance q_;
    SchemaDescription schema_;
    int stage_ = 0;
    int level_ = 0;
    int id_ = 1;

    std::vector<ToolCall> pending_;
    std::map<std::string, nlohmann::json> neighbors_;  // key -> entry array
    std::map<std::string, std::string> label_of_;
    std::map<std::string, nlohmann::json> props_of_;
    std::vector<std::string> listed_keys_;             // last key enumeration
    std::map<std::string, nlohmann::json> lookups_;    // label -> node dicts

    std::vector<std::string> source_keys_;
    std::string source_label_;
    std::map<std::string, std::set<std::string>> frontier_;
    std::map<std::string, std::set<std::string>> reached_;
    std::map<std::string, std::vector<std::string>> mids_of_;

    ToolCall make(const std::string& name, nlohmann::json args);
    BackendTurn act(std::vector<ToolCall> calls);
    BackendTurn think_first();
    void ingest(const Conversation& conversation);
    std::vector<ToolCall> missing_neighbor_fetches(const std::set<std::string>& keys);
    bool bfs_advance(int target_levels, std::vector<ToolCall>& calls);
    long long outgoing_count(const std::string& key, const std::string& rel_type) const;
    bool has_outgoing_label(const std::string& key, const std::string& label) const;
    std::set<std::string> outgoing_keys(const std::string& key) const;
};

// Depth-first maze explorer: walks via get_possible_next_cells, always
// trying the unvisited neighbor closest to the goal, backtracking at dead
// ends, then reads its final answer from get_connected_path.
class MazeScriptedAgent : public AgentBackend {
public:
    MazeScriptedAgent(std::string start_key, std::string goal_key);
    BackendTurn next_turn(const Conversation& conversation) override;

private:
    std::string start_;
    std::string goal_;
    int stage_ = 0;
    int id_ = 1;
    std::string pending_cell_;
    bool awaiting_path_ = false;
    std::vector<std::string> stack_;
    std::set<std::string> visited_;
    std::map<std::string, std::vector<std::pair<double, std::string>>> options_;

    ToolCall make(const std::string& name, nlohmann::json args);
};

}  // namespace graphbench
