// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphbench/graph.hpp"
#include "graphbench/maze.hpp"

namespace graphbench {

struct ToolCall {
    std::string call_id;
    std::string name;
    nlohmann::json arguments;
};

struct ToolResult {
    std::string call_id;
    std::string content;
    bool is_error = false;
    nlohmann::json data;  // structured mirror of content for scripted agents
};

struct ToolParameter {
    std::string name;
    nlohmann::json schema;  // JSON-schema fragment, e.g. {"type": "string"}
    bool required = true;
};

struct ToolDescriptor {
    std::string name;
    std::string description;
    std::vector<ToolParameter> parameters;
    bool deterministic = true;
    std::function<ToolResult(const nlohmann::json& arguments)> handler;
};

class ToolRegistry {
public:
    void add(ToolDescriptor descriptor);
    const std::vector<ToolDescriptor>& descriptors() const { return tools_; }
    const ToolDescriptor* find(const std::string& name) const;

    // Never throws; failures come back as is_error results.
    ToolResult dispatch(const ToolCall& call) const;

    // Chat-completions "tools" payload.
    nlohmann::json to_wire_json() const;

private:
    std::vector<ToolDescriptor> tools_;
};

// Chat-completions "tools" payload for an arbitrary descriptor list.
nlohmann::json tools_wire_json(const std::vector<ToolDescriptor>& tools);

ToolRegistry kg_registry(const PropertyGraph& graph, const SchemaDescription& schema);
ToolRegistry kg_registry(const PropertyGraph& graph);
ToolRegistry maze_registry(MazeState& maze);

}  // namespace graphbench
