// SPDX-License-Identifier: Apache-2.0
#include "graphbench/tools.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>

#include "graphbench/value.hpp"

namespace graphbench {

namespace {

const char* kNodeByPropertyDoc =
    R"(Retrieve a specific node from the graph database by matching a property value.

This tool searches for nodes with a specific label that have a particular property
set to a given value. It's the primary way to find specific entities in the graph
when you know their identifying property (like name, ID, or other unique attribute).

Use this when you need to:
- Find a specific person, organization, drug, or other entity by name
- Locate nodes with specific IDs or codes
- Search for entities with particular attributes

Args:
    label (str): The node label/type (e.g., "Person", "Drug", "Company").
        Must match exactly with labels in the graph schema.
    property_name (str): The property to search by (e.g., "name", "id", "code").
        Must be a valid property for the specified label.
    property_value: The exact value to match. Can be string, number, or other types
        depending on the property. Must match exactly (case-sensitive for strings).

Returns:
    list: List of matching nodes with all their properties. Each node is a dictionary
        containing all property key-value pairs for that node.

Example:
    get_node_by_property("Person", "name", "John Smith")
    Returns: [{"name": "John Smith", "age": 30, "id": "person_123"}])";

const char* kNearestNeighborsDoc =
    R"(Get all directly connected neighbors of a specific node in the graph database.

This tool finds a node by its property value and returns ALL nodes that are directly
connected to it through any type of relationship. This is useful for exploring the
immediate neighborhood of a node and understanding its direct connections.

Use this when you need to:
- Explore what entities are directly connected to a specific node
- Find all immediate relationships of a person, organization, or other entity
- Discover the local neighborhood around a node
- Get a comprehensive view of direct connections before drilling down

Args:
    label (str): The label/type of the central node (e.g., "Person", "Drug", "Company").
        Must match exactly with labels in the graph schema.
    property_name (str): The property to identify the central node (e.g., "name", "id").
        Must be a valid property for the specified label.
    property_value: The exact value to match for finding the central node.
        Must match exactly (case-sensitive for strings).

Returns:
    list: List of all neighboring nodes with their properties and relationship information.
        Each result includes both the neighbor node data and the relationship that
        connects it to the central node.

Example:
    get_all_nearest_neighbors("Person", "name", "John Smith")
    Returns all people, organizations, locations, etc. directly connected to John Smith)";

const char* kUniqueValuesDoc =
    R"(Retrieve all unique values for a specific property across all nodes or relationships of a given type.

This tool is essential for data exploration and understanding what values exist
in the database. It helps you discover available options, validate data, and
understand the scope of information available for a particular entity type.

Use this when you need to:
- Explore what values are available for a property (e.g., all company names, or all relationship weights)
- Validate if a specific value exists before searching
- Get a complete list of options for categorical properties
- Understand the data distribution and available entities
- Find all possible values to choose from when building queries

Args:
    property_name (str): The name of the property to get values for (e.g., "name",
        "category", "status"). Must be a valid property in the schema
        for the specified entity.
    entity_name (str): The node label or relationship type to examine (e.g., "Person", "Drug",
        "Company", "INTERACTS_WITH"). Must match exactly with labels/types in
        the graph schema.
    entity_type (str): The type of the entity to examine, which can be 'node' or 'relationship'.

Returns:
    list: A list of dictionaries, each containing a unique value for the specified
        property. The structure is [{"values": value1}, {"values": value2}, ...].

Example for a node:
    get_unique_property_values("name", "Company", "Node")
    Returns: [{"values": "Pfizer"}, {"values": "Johnson & Johnson"}, {"values": "Merck"}]

Example for a relationship:
    get_unique_property_values("year", "MET_IN", "Relationship")
    Returns: [{"values": "2020"}, {"values": "2021"}])";

const char* kThinkDoc =
    R"(Record and process reasoning steps during graph traversal and query planning.

This tool allows you to document your thought process, reasoning steps, and intermediate
conclusions while working through complex graph queries. It's particularly valuable
for multi-step problems where you need to plan your approach, track progress, or
explain your reasoning.

Use this when you need to:
- Break down complex queries into logical steps
- Document your reasoning for choosing specific tools or approaches
- Summarize findings from previous tool calls before proceeding
- Explain why you're taking a particular path through the graph
- Keep track of progress in multi-step graph traversals
- Clarify your understanding of the problem before answering

Args:
    thought (str): Your reasoning, observation, or plan. Can include analysis of
        previous results, next steps to take, or explanations of your
        approach to solving the user's query.

Returns:
    str: The same thought string you provided, allowing you to record and
        reference your reasoning process.

Example:
    think("I found John Smith in the database. Now I need to find his company
        affiliations by looking at his neighbors, then find other employees
        of those companies."))";

const char* kNextCellsDoc =
    R"(Get the neighboring cells that are traversable from a given node.

This tool identifies all path cells directly adjacent (up, down, left, right)
to the specified node. It will:
1. Check if the given input node is a valid traversable cell (not a wall).
2. Mark the given input node as visited in the maze.
3. Return a list of adjacent cells that are paths (not walls).

Use this tool to explore the maze by checking which directions are open from your given position.

Args:
    node_id (str): The ID of the cell to explore.

Returns:
    str: A message listing the traversable neighboring cells,
        Returns an error if the input node is a wall or invalid.)";

const char* kConnectedPathDoc =
    R"(Find the shortest connected path through all cells visited so far.

This tool automatically retrieves the complete list of cells you have visited
(in the order they were marked) Tand then finds the shortest valid connected path
from the first visited cell to the last visited cell using only those cells.
Each step in the path must be to an adjacent cell (up, down, left, right -
no diagonals or jumps).

Use-cases for this tool:
- Derive the final answer path after finishing your exploration
- Check whether the cells you have visited so far form a valid connected route
  from start to your current position

Returns:
    str: The shortest valid connected path found within the visited cells, or an
        error message if no valid path can be formed from the visited cells.

Example:
    get_connected_path()
    Returns: "Shortest path from cell 0 to cell 42: ['0', '1', '2', ..., '42'])";

nlohmann::json string_schema() { return {{"type", "string"}}; }

nlohmann::json value_schema() {
    return {{"type", nlohmann::json::array({"string", "number"})}};
}

ToolResult ok_result(nlohmann::json data) {
    ToolResult r;
    r.content = data.dump();
    r.data = std::move(data);
    return r;
}

ToolResult text_result(std::string text, nlohmann::json data = nullptr) {
    ToolResult r;
    r.content = std::move(text);
    r.data = std::move(data);
    return r;
}

ToolResult error_result(std::string message) {
    ToolResult r;
    r.content = std::move(message);
    r.is_error = true;
    return r;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ", ";
        out += items[i];
    }
    return out;
}

nlohmann::json properties_to_json(const PropertyMap& properties) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [name, value] : properties)
        obj[name] = value.to_json();
    return obj;
}

// LLMs frequently quote numbers; fall back to the numeric reading when the
// literal string matches nothing.
std::optional<PropertyValue> parse_value(const nlohmann::json& raw) {
    if (raw.is_number())
        return PropertyValue(raw.get<double>());
    if (raw.is_string()) {
        auto s = raw.get<std::string>();
        if (s.empty())
            return std::nullopt;
        return PropertyValue(s);
    }
    return std::nullopt;
}

std::optional<PropertyValue> numeric_reading(const PropertyValue& value) {
    if (!value.is_text())
        return std::nullopt;
    if (auto n = parse_number(value.text()))
        return PropertyValue(*n);
    return std::nullopt;
}

struct KgContext {
    const PropertyGraph* graph;
    SchemaDescription schema;

    std::vector<std::string> node_labels() const {
        std::vector<std::string> out;
        for (const auto& nc : schema.node_classes)
            out.push_back(nc.label);
        return out;
    }

    const SchemaDescription::NodeClass* node_class(const std::string& label) const {
        for (const auto& nc : schema.node_classes)
            if (nc.label == label)
                return &nc;
        return nullptr;
    }
};

std::vector<NodeId> lookup_nodes(const KgContext& ctx, const std::string& label,
                                 const std::string& property_name,
                                 const PropertyValue& value) {
    auto ids = ctx.graph->nodes_by_property(label, property_name, value);
    if (ids.empty()) {
        if (auto coerced = numeric_reading(value))
            ids = ctx.graph->nodes_by_property(label, property_name, *coerced);
    }
    return ids;
}

ToolResult run_node_by_property(const KgContext& ctx, const nlohmann::json& args) {
    auto label = args.at("label").get<std::string>();
    const auto* nc = ctx.node_class(label);
    if (!nc)
        return error_result("Error: unknown label '" + label +
                            "'. Valid labels: " + join(ctx.node_labels()) + ".");
    auto property_name = args.at("property_name").get<std::string>();
    if (std::find(nc->property_names.begin(), nc->property_names.end(), property_name) ==
        nc->property_names.end())
        return error_result("Error: '" + property_name + "' is not a property of label '" +
                            label + "'. Valid properties: " + join(nc->property_names) + ".");
    auto value = parse_value(args.at("property_value"));
    if (!value)
        return error_result("Error: property_value must be a non-empty string or a number.");

    nlohmann::json out = nlohmann::json::array();
    for (NodeId id : lookup_nodes(ctx, label, property_name, *value))
        out.push_back(properties_to_json(ctx.graph->node(id).properties));
    return ok_result(std::move(out));
}

ToolResult run_nearest_neighbors(const KgContext& ctx, const nlohmann::json& args) {
    auto label = args.at("label").get<std::string>();
    const auto* nc = ctx.node_class(label);
    if (!nc)
        return error_result("Error: unknown label '" + label +
                            "'. Valid labels: " + join(ctx.node_labels()) + ".");
    auto property_name = args.at("property_name").get<std::string>();
    if (std::find(nc->property_names.begin(), nc->property_names.end(), property_name) ==
        nc->property_names.end())
        return error_result("Error: '" + property_name + "' is not a property of label '" +
                            label + "'. Valid properties: " + join(nc->property_names) + ".");
    auto value = parse_value(args.at("property_value"));
    if (!value)
        return error_result("Error: property_value must be a non-empty string or a number.");

    auto centers = lookup_nodes(ctx, label, property_name, *value);
    if (centers.empty())
        return error_result("Error: no node with label '" + label + "' has " +
                            property_name + " = " + value->canonical() + ".");

    nlohmann::json out = nlohmann::json::array();
    for (NodeId center : centers) {
        for (const auto& entry : ctx.graph->neighbors(center)) {
            const auto& rel = ctx.graph->relationship(entry.rel);
            const auto& other = ctx.graph->node(entry.other);
            out.push_back(
                {{"neighbor", properties_to_json(other.properties)},
                 {"neighbor_label", other.label},
                 {"relationship_type", rel.rel_type},
                 {"direction",
                  entry.direction == Direction::outgoing ? "outgoing" : "incoming"},
                 {"relationship_properties", properties_to_json(rel.properties)}});
        }
    }
    return ok_result(std::move(out));
}

ToolResult run_unique_values(const KgContext& ctx, const nlohmann::json& args) {
    auto property_name = args.at("property_name").get<std::string>();
    auto entity_name = args.at("entity_name").get<std::string>();
    auto entity_type = args.at("entity_type").get<std::string>();
    std::string folded;
    for (char c : entity_type)
        folded += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (folded != "node" && folded != "relationship")
        return error_result("Error: entity_type must be 'node' or 'relationship', got '" +
                            entity_type + "'.");
    auto kind = folded == "node" ? EntityKind::node : EntityKind::relationship;

    // Schema-declared but uninstantiated classes yield an empty list.
    bool declared = false;
    if (kind == EntityKind::node) {
        declared = ctx.node_class(entity_name) != nullptr;
    } else {
        for (const auto& rc : ctx.schema.rel_classes)
            if (rc.name == entity_name)
                declared = true;
    }

    try {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : ctx.graph->unique_property_values(property_name, entity_name, kind))
            out.push_back({{"values", v.to_json()}});
        return ok_result(std::move(out));
    } catch (const GraphError& e) {
        if (declared)
            return ok_result(nlohmann::json::array());
        return error_result(std::string("Error: ") + e.what());
    }
}

}  // namespace

void ToolRegistry::add(ToolDescriptor descriptor) {
    tools_.push_back(std::move(descriptor));
}

const ToolDescriptor* ToolRegistry::find(const std::string& name) const {
    for (const auto& t : tools_)
        if (t.name == name)
            return &t;
    return nullptr;
}

ToolResult ToolRegistry::dispatch(const ToolCall& call) const {
    const auto* tool = find(call.name);
    ToolResult result;
    if (!tool) {
        std::vector<std::string> names;
        for (const auto& t : tools_)
            names.push_back(t.name);
        result = error_result("Error: unknown tool '" + call.name +
                              "'; available tools: " + join(names) + ".");
        result.call_id = call.call_id;
        return result;
    }
    if (!call.arguments.is_object()) {
        result = error_result("Error: arguments for '" + call.name +
                              "' must be a JSON object.");
        result.call_id = call.call_id;
        return result;
    }
    for (const auto& p : tool->parameters) {
        if (p.required && !call.arguments.contains(p.name)) {
            result = error_result("Error: missing required argument '" + p.name +
                                  "' for tool '" + call.name + "'.");
            result.call_id = call.call_id;
            return result;
        }
    }
    try {
        result = tool->handler(call.arguments);
    } catch (const std::exception& e) {
        result = error_result(std::string("Error: ") + e.what());
    }
    result.call_id = call.call_id;
    return result;
}

nlohmann::json tools_wire_json(const std::vector<ToolDescriptor>& tools) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : tools) {
        nlohmann::json properties = nlohmann::json::object();
        nlohmann::json required = nlohmann::json::array();
        for (const auto& p : t.parameters) {
            properties[p.name] = p.schema;
            if (p.required)
                required.push_back(p.name);
        }
        out.push_back({{"type", "function"},
                       {"function",
                        {{"name", t.name},
                         {"description", t.description},
                         {"parameters",
                          {{"type", "object"},
                           {"properties", std::move(properties)},
                           {"required", std::move(required)}}}}}});
    }
    return out;
}

nlohmann::json ToolRegistry::to_wire_json() const { return tools_wire_json(tools_); }

ToolRegistry kg_registry(const PropertyGraph& graph, const SchemaDescription& schema) {
    auto ctx = std::make_shared<KgContext>(KgContext{&graph, schema});
    ToolRegistry registry;

    registry.add({"get_node_by_property",
                  kNodeByPropertyDoc,
                  {{"label", string_schema(), true},
                   {"property_name", string_schema(), true},
                   {"property_value", value_schema(), true}},
                  true,
                  [ctx](const nlohmann::json& args) { return run_node_by_property(*ctx, args); }});

    registry.add({"get_all_nearest_neighbors",
                  kNearestNeighborsDoc,
                  {{"label", string_schema(), true},
                   {"property_name", string_schema(), true},
                   {"property_value", value_schema(), true}},
                  true,
                  [ctx](const nlohmann::json& args) { return run_nearest_neighbors(*ctx, args); }});

    registry.add({"get_unique_property_values",
                  kUniqueValuesDoc,
                  {{"property_name", string_schema(), true},
                   {"entity_name", string_schema(), true},
                   {"entity_type", string_schema(), true}},
                  true,
                  [ctx](const nlohmann::json& args) { return run_unique_values(*ctx, args); }});

    registry.add({"think",
                  kThinkDoc,
                  {{"thought", string_schema(), true}},
                  false,
                  [](const nlohmann::json& args) {
                      auto thought = args.at("thought").is_string()
                                         ? args.at("thought").get<std::string>()
                                         : args.at("thought").dump();
                      return text_result(thought, thought);
                  }});

    return registry;
}

ToolRegistry kg_registry(const PropertyGraph& graph) {
    return kg_registry(graph, graph.schema_description());
}

ToolRegistry maze_registry(MazeState& maze) {
    ToolRegistry registry;
    auto* state = &maze;

    registry.add({"get_possible_next_cells",
                  kNextCellsDoc,
                  {{"node_id", string_schema(), true}},
                  true,
                  [state](const nlohmann::json& args) {
                      auto node_id = args.at("node_id").is_string()
                                         ? args.at("node_id").get<std::string>()
                                         : args.at("node_id").dump();
                      auto message = state->get_possible_next_cells(node_id);
                      if (message.rfind("Error:", 0) == 0)
                          return error_result(message);
                      int idx = std::stoi(node_id);
                      nlohmann::json neighbors = nlohmann::json::array();
                      for (int n : state->adjacent_path_cells(idx)) {
                          const auto& cell = state->cell(n);
                          neighbors.push_back({{"key", std::to_string(n)},
                                               {"euclidean_distance", cell.euclidean_distance},
                                               {"marked", cell.marked},
                                               {"mark_order", cell.mark_order}});
                      }
                      return text_result(message,
                                         {{"cell", node_id},
                                          {"mark_order", state->cell(idx).mark_order},
                                          {"neighbors", std::move(neighbors)}});
                  }});

    registry.add({"get_connected_path",
                  kConnectedPathDoc,
                  {},
                  true,
                  [state](const nlohmann::json&) {
                      auto message = state->get_connected_path();
                      if (message.rfind("Error:", 0) == 0)
                          return error_result(message);
                      auto colon = message.rfind(": ");
                      nlohmann::json keys = nlohmann::json::array();
                      auto list = message.substr(colon + 2);
                      for (std::size_t pos = list.find('\''); pos != std::string::npos;
                           pos = list.find('\'', pos)) {
                          auto end = list.find('\'', pos + 1);
                          keys.push_back(list.substr(pos + 1, end - pos - 1));
                          pos = end + 1;
                      }
                      return text_result(message, {{"path", std::move(keys)}});
                  }});

    return registry;
}

}  // namespace graphbench
