// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphbench/value.hpp"

namespace graphbench {

using NodeId = std::uint32_t;
using RelId = std::uint32_t;

using PropertyMap = std::map<std::string, PropertyValue>;

// Raised by graph queries whose failure is meaningful to a caller (unknown
// node, unknown class). The message is suitable for handing to an agent.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Node {
    NodeId id{};
    std::string label;
    PropertyMap properties;

    // Every node carries a graph-unique `key` property.
    const std::string& key() const { return properties.at("key").text(); }
};

struct Relationship {
    RelId id{};
    std::string rel_type;
    NodeId source{};
    NodeId target{};
    PropertyMap properties;
};

enum class Direction { outgoing, incoming };

struct NeighborEntry {
    RelId rel{};
    NodeId other{};
    Direction direction{};

    friend bool operator==(const NeighborEntry&, const NeighborEntry&) = default;
};

enum class EntityKind { node, relationship };

// One row of the schema table handed to agents.
struct SchemaRow {
    int index{};
    EntityKind kind{};
    std::string entity_name;
    std::string cypher_pattern;
    std::string property_name;

    friend bool operator==(const SchemaRow&, const SchemaRow&) = default;
};

struct SchemaTable {
    std::vector<SchemaRow> rows;

    // Five-column text rendering; byte-stable for a fixed input.
    std::string to_text() const;

    friend bool operator==(const SchemaTable&, const SchemaTable&) = default;
};

// Class structure independent of any concrete graph, used to render the
// schema table. Property names are listed sorted.
struct SchemaDescription {
    struct NodeClass {
        std::string label;
        std::vector<std::string> property_names;
    };
    struct RelClass {
        std::string name;
        std::string source_label;
        std::string target_label;
        std::vector<std::string> property_names;
    };
    std::vector<NodeClass> node_classes;
    std::vector<RelClass> rel_classes;
};

SchemaTable render_schema(const SchemaDescription& description);

// In-memory directed property multigraph. Immutable once populated; all
// query results use deterministic orderings so transcripts replay
// bit-identically.
class PropertyGraph {
public:
    // The properties must include a text `key` unique across the graph.
    NodeId add_node(std::string label, PropertyMap properties);
    RelId add_relationship(std::string rel_type, NodeId source, NodeId target,
                           PropertyMap properties = {});

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t relationship_count() const { return relationships_.size(); }
    std::span<const Node> nodes() const { return nodes_; }
    std::span<const Relationship> relationships() const { return relationships_; }

    const Node& node(NodeId id) const;
    const Relationship& relationship(RelId id) const;
    bool has_node(NodeId id) const { return id < nodes_.size(); }

    const Node* find_by_key(std::string_view key) const;

    // Exact-match property lookup, results ordered by node key. Unknown
    // label or property simply yields an empty list.
    std::vector<NodeId> nodes_by_property(std::string_view label,
                                          std::string_view property_name,
                                          const PropertyValue& value) const;

    // Every incident relationship, outgoing first then incoming, each group
    // ordered by relationship id. Parallel edges appear once each.
    std::vector<NeighborEntry> neighbors(NodeId id) const;

    // Sorted, de-duplicated values of `property_name` over all entities of
    // the named class; entities lacking the property are skipped. Unknown
    // class names raise GraphError listing the valid options.
    std::vector<PropertyValue> unique_property_values(std::string_view property_name,
                                                      std::string_view entity_name,
                                                      EntityKind kind) const;

    // Nodes carrying `target_label` reachable from `start` by a directed
    // walk whose length falls in [min_hops, max_hops]. Breadth-first by
    // level; a node may appear at several depths.
    std::set<NodeId> reachable_within(NodeId start, int min_hops, int max_hops,
                                      std::string_view target_label) const;

    std::vector<NodeId> out_neighbors(NodeId id) const;

    std::vector<std::string> node_labels() const;
    std::vector<std::string> relationship_types() const;

    SchemaDescription schema_description() const;

    // Line-oriented text dump: one NODE line per node then one REL line per
    // relationship, keys sorted.
    std::string to_text() const;

    nlohmann::json to_json() const;
    static PropertyGraph from_json(const nlohmann::json& j);

private:
    std::vector<Node> nodes_;
    std::vector<Relationship> relationships_;
    std::vector<std::vector<RelId>> out_edges_;
    std::vector<std::vector<RelId>> in_edges_;
    std::map<std::string, NodeId, std::less<>> key_index_;
    std::map<std::tuple<std::string, std::string, PropertyValue>, std::vector<NodeId>>
        property_index_;
};

// Renders a property map as `{name: value, ...}` with text values quoted.
std::string format_properties(const PropertyMap& properties);

}  // namespace graphbench
