// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "graphbench/tools.hpp"

using namespace graphbench;
using nlohmann::json;

namespace {

PropertyGraph sample_graph() {
    PropertyGraph g;
    auto a = g.add_node("Cevaz", {{"key", PropertyValue("anib")},
                                  {"bexame", PropertyValue("joru")},
                                  {"tanu", PropertyValue(2.5)}});
    auto b = g.add_node("Cevaz", {{"key", PropertyValue("bolk")},
                                  {"bexame", PropertyValue("joru")},
                                  {"tanu", PropertyValue(7.0)}});
    auto c = g.add_node("Egodpw", {{"key", PropertyValue("cigu")},
                                   {"uqpc", PropertyValue("wam")}});
    g.add_relationship("EPUQOSS", a, c, {{"ukog", PropertyValue(1.5)}});
    g.add_relationship("EPUQOSS", b, c, {{"ukog", PropertyValue(3.25)}});
    return g;
}

ToolCall call(std::string name, json args, std::string id = "call-1") {
    return ToolCall{std::move(id), std::move(name), std::move(args)};
}

}  // namespace

TEST_CASE("think echoes its input untouched") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto result = registry.dispatch(call("think", {{"thought", "plan: find node first"}}));
    CHECK(!result.is_error);
    CHECK(result.content == "plan: find node first");
    CHECK(result.call_id == "call-1");
    CHECK(registry.find("think")->deterministic == false);
}

TEST_CASE("node lookup returns full property dictionaries") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto result = registry.dispatch(call("get_node_by_property",
                                         {{"label", "Cevaz"},
                                          {"property_name", "bexame"},
                                          {"property_value", "joru"}}));
    REQUIRE(!result.is_error);
    auto parsed = json::parse(result.content);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["key"] == "anib");
    CHECK(parsed[0]["tanu"] == 2.5);
    CHECK(parsed[1]["key"] == "bolk");

    auto miss = registry.dispatch(call("get_node_by_property",
                                       {{"label", "Cevaz"},
                                        {"property_name", "bexame"},
                                        {"property_value", "zzz"}}));
    CHECK(!miss.is_error);
    CHECK(json::parse(miss.content) == json::array());
}

TEST_CASE("node lookup coerces numeric strings") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto result = registry.dispatch(call("get_node_by_property",
                                         {{"label", "Cevaz"},
                                          {"property_name", "tanu"},
                                          {"property_value", "2.5"}}));
    REQUIRE(!result.is_error);
    auto parsed = json::parse(result.content);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["key"] == "anib");
}

TEST_CASE("unknown labels and properties produce guided errors") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto bad_label = registry.dispatch(call("get_node_by_property",
                                            {{"label", "Wrong"},
                                             {"property_name", "bexame"},
                                             {"property_value", "joru"}}));
    CHECK(bad_label.is_error);
    CHECK(bad_label.content.find("Cevaz") != std::string::npos);
    CHECK(bad_label.content.find("Egodpw") != std::string::npos);

    auto bad_prop = registry.dispatch(call("get_node_by_property",
                                           {{"label", "Cevaz"},
                                            {"property_name", "nope"},
                                            {"property_value", "joru"}}));
    CHECK(bad_prop.is_error);
    CHECK(bad_prop.content.find("bexame") != std::string::npos);
}

TEST_CASE("neighbor exploration reports relationships in both directions") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto result = registry.dispatch(call("get_all_nearest_neighbors",
                                         {{"label", "Egodpw"},
                                          {"property_name", "key"},
                                          {"property_value", "cigu"}}));
    REQUIRE(!result.is_error);
    auto parsed = json::parse(result.content);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["neighbor"]["key"] == "anib");
    CHECK(parsed[0]["neighbor_label"] == "Cevaz");
    CHECK(parsed[0]["relationship_type"] == "EPUQOSS");
    CHECK(parsed[0]["direction"] == "incoming");
    CHECK(parsed[0]["relationship_properties"]["ukog"] == 1.5);

    auto missing = registry.dispatch(call("get_all_nearest_neighbors",
                                          {{"label", "Cevaz"},
                                           {"property_name", "key"},
                                           {"property_value", "nope"}}));
    CHECK(missing.is_error);
    CHECK(missing.content.find("no node") != std::string::npos);
}

TEST_CASE("unique value listing matches the documented shape") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto result = registry.dispatch(call("get_unique_property_values",
                                         {{"property_name", "bexame"},
                                          {"entity_name", "Cevaz"},
                                          {"entity_type", "node"}}));
    REQUIRE(!result.is_error);
    CHECK(json::parse(result.content) == json::parse(R"([{"values":"joru"}])"));

    auto rels = registry.dispatch(call("get_unique_property_values",
                                       {{"property_name", "ukog"},
                                        {"entity_name", "EPUQOSS"},
                                        {"entity_type", "Relationship"}}));
    REQUIRE(!rels.is_error);
    CHECK(json::parse(rels.content) == json::parse(R"([{"values":1.5},{"values":3.25}])"));

    auto bad_type = registry.dispatch(call("get_unique_property_values",
                                           {{"property_name", "ukog"},
                                            {"entity_name", "EPUQOSS"},
                                            {"entity_type", "edge"}}));
    CHECK(bad_type.is_error);

    auto bad_entity = registry.dispatch(call("get_unique_property_values",
                                             {{"property_name", "x"},
                                              {"entity_name", "Missing"},
                                              {"entity_type", "node"}}));
    CHECK(bad_entity.is_error);
    CHECK(bad_entity.content.find("Cevaz") != std::string::npos);
}

TEST_CASE("declared but empty classes yield empty lists, not errors") {
    auto g = sample_graph();
    SchemaDescription schema = g.schema_description();
    schema.node_classes.push_back({"Ghost", {"key", "zuna"}});
    auto registry = kg_registry(g, schema);
    auto result = registry.dispatch(call("get_unique_property_values",
                                         {{"property_name", "zuna"},
                                          {"entity_name", "Ghost"},
                                          {"entity_type", "node"}}));
    CHECK(!result.is_error);
    CHECK(json::parse(result.content) == json::array());
}

TEST_CASE("dispatch guards tool names and arguments") {
    auto g = sample_graph();
    auto registry = kg_registry(g);

    auto unknown = registry.dispatch(call("foo", json::object()));
    CHECK(unknown.is_error);
    CHECK(unknown.content.find("unknown tool 'foo'") != std::string::npos);
    CHECK(unknown.content.find("get_node_by_property") != std::string::npos);

    auto missing = registry.dispatch(call("think", json::object()));
    CHECK(missing.is_error);
    CHECK(missing.content.find("'thought'") != std::string::npos);

    auto malformed = registry.dispatch(call("think", json::array()));
    CHECK(malformed.is_error);
    CHECK(malformed.content.find("JSON object") != std::string::npos);
}

TEST_CASE("query tools are deterministic") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    for (const char* name :
         {"get_node_by_property", "get_all_nearest_neighbors", "get_unique_property_values"}) {
        CHECK(registry.find(name)->deterministic);
    }
    json args = {{"label", "Cevaz"}, {"property_name", "key"}, {"property_value", "anib"}};
    auto first = registry.dispatch(call("get_all_nearest_neighbors", args));
    auto second = registry.dispatch(call("get_all_nearest_neighbors", args));
    CHECK(first.content == second.content);
}

TEST_CASE("wire payload is stable and complete") {
    auto g = sample_graph();
    auto registry = kg_registry(g);
    auto wire = registry.to_wire_json();
    REQUIRE(wire.size() == 4);
    CHECK(wire[0]["type"] == "function");
    CHECK(wire[0]["function"]["name"] == "get_node_by_property");
    CHECK(wire[1]["function"]["name"] == "get_all_nearest_neighbors");
    CHECK(wire[2]["function"]["name"] == "get_unique_property_values");
    CHECK(wire[3]["function"]["name"] == "think");
    CHECK(wire[0]["function"]["parameters"]["required"] ==
          json::array({"label", "property_name", "property_value"}));
    CHECK(wire.dump() == kg_registry(g).to_wire_json().dump());

    auto desc = wire[2]["function"]["description"].get<std::string>();
    CHECK(desc.find(R"([{"values": value1}, {"values": value2}, ...])") != std::string::npos);
    CHECK(desc.find("can be 'node' or 'relationship'") != std::string::npos);
}

TEST_CASE("maze registry wraps the two traversal tools") {
    MazeConfig cfg;
    cfg.width = 3;
    cfg.height = 3;
    cfg.wall_ratio = 0.0;
    cfg.min_path_len = 2;
    cfg.seed = 5;
    auto maze = generate_maze(cfg);
    auto registry = maze_registry(maze);
    REQUIRE(registry.descriptors().size() == 2);

    auto early = registry.dispatch(call("get_connected_path", json::object()));
    CHECK(early.is_error);

    auto first = registry.dispatch(call("get_possible_next_cells", {{"node_id", "4"}}));
    REQUIRE(!first.is_error);
    CHECK(first.data["neighbors"].size() == 4);
    CHECK(first.data["neighbors"][0]["key"] == "1");
    auto second = registry.dispatch(call("get_possible_next_cells", {{"node_id", "4"}}));
    CHECK(first.content == second.content);

    registry.dispatch(call("get_possible_next_cells", {{"node_id", "1"}}));
    auto path = registry.dispatch(call("get_connected_path", json::object()));
    REQUIRE(!path.is_error);
    CHECK(path.data["path"] == json::array({"4", "1"}));
    CHECK(path.content.find("Shortest path from cell 4 to cell 1") == 0);

    auto wall_or_bad = registry.dispatch(call("get_possible_next_cells", {{"node_id", "99"}}));
    CHECK(wall_or_bad.is_error);

    auto wire = registry.to_wire_json();
    CHECK(wire[0]["function"]["name"] == "get_possible_next_cells");
    auto doc = wire[1]["function"]["description"].get<std::string>();
    CHECK(doc.find("Shortest path from cell 0 to cell 42") != std::string::npos);
}
