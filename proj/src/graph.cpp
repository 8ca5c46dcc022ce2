// SPDX-License-Identifier: Apache-2.0
#include "graphbench/graph.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace graphbench {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

NodeId PropertyGraph::add_node(std::string label, PropertyMap properties) {
    auto key_it = properties.find("key");
    if (key_it == properties.end() || !key_it->second.is_text())
        throw std::invalid_argument("add_node: node requires a text `key` property");
    const std::string& key = key_it->second.text();
    if (key_index_.contains(key))
        throw std::invalid_argument("add_node: duplicate key '" + key + "'");

    auto id = static_cast<NodeId>(nodes_.size());
    key_index_.emplace(key, id);
    for (const auto& [name, value] : properties)
        property_index_[{label, name, value}].push_back(id);
    nodes_.push_back(Node{id, std::move(label), std::move(properties)});
    out_edges_.emplace_back();
    in_edges_.emplace_back();
    return id;
}

RelId PropertyGraph::add_relationship(std::string rel_type, NodeId source,
                                      NodeId target, PropertyMap properties) {
    if (!has_node(source) || !has_node(target))
        throw std::invalid_argument("add_relationship: endpoint does not exist");
    auto id = static_cast<RelId>(relationships_.size());
    relationships_.push_back(
        Relationship{id, std::move(rel_type), source, target, std::move(properties)});
    out_edges_[source].push_back(id);
    in_edges_[target].push_back(id);
    return id;
}

const Node& PropertyGraph::node(NodeId id) const {
    if (!has_node(id))
        throw GraphError("node not found");
    return nodes_[id];
}

const Relationship& PropertyGraph::relationship(RelId id) const {
    if (id >= relationships_.size())
        throw GraphError("relationship not found");
    return relationships_[id];
}

const Node* PropertyGraph::find_by_key(std::string_view key) const {
    auto it = key_index_.find(key);
    return it == key_index_.end() ? nullptr : &nodes_[it->second];
}

std::vector<NodeId> PropertyGraph::nodes_by_property(std::string_view label,
                                                     std::string_view property_name,
                                                     const PropertyValue& value) const {
    auto it = property_index_.find(
        {std::string(label), std::string(property_name), value});
    if (it == property_index_.end())
        return {};
    std::vector<NodeId> result = it->second;
    std::sort(result.begin(), result.end(), [&](NodeId a, NodeId b) {
        return nodes_[a].key() < nodes_[b].key();
    });
    return result;
}

std::vector<NeighborEntry> PropertyGraph::neighbors(NodeId id) const {
    if (!has_node(id))
        throw GraphError("node not found");
    std::vector<NeighborEntry> result;
    result.reserve(out_edges_[id].size() + in_edges_[id].size());
    for (RelId r : out_edges_[id])
        result.push_back({r, relationships_[r].target, Direction::outgoing});
    for (RelId r : in_edges_[id])
        result.push_back({r, relationships_[r].source, Direction::incoming});
    return result;
}

std::vector<PropertyValue> PropertyGraph::unique_property_values(
    std::string_view property_name, std::string_view entity_name,
    EntityKind kind) const {
    std::set<PropertyValue> values;
    if (kind == EntityKind::node) {
        auto labels = node_labels();
        if (std::find(labels.begin(), labels.end(), entity_name) == labels.end())
            throw GraphError("unknown node label '" + std::string(entity_name) +
                             "'; valid labels: " + join(labels, ", "));
        for (const Node& n : nodes_) {
            if (n.label != entity_name)
                continue;
            auto it = n.properties.find(std::string(property_name));
            if (it != n.properties.end())
                values.insert(it->second);
        }
    } else {
        auto types = relationship_types();
        if (std::find(types.begin(), types.end(), entity_name) == types.end())
            throw GraphError("unknown relationship type '" + std::string(entity_name) +
                             "'; valid types: " + join(types, ", "));
        for (const Relationship& r : relationships_) {
            if (r.rel_type != entity_name)
                continue;
            auto it = r.properties.find(std::string(property_name));
            if (it != r.properties.end())
                values.insert(it->second);
        }
    }
    return {values.begin(), values.end()};
}

std::set<NodeId> PropertyGraph::reachable_within(NodeId start, int min_hops,
                                                 int max_hops,
                                                 std::string_view target_label) const {
    if (min_hops < 1 || min_hops > max_hops)
        throw std::invalid_argument("reachable_within: need 1 <= min_hops <= max_hops");
    if (!has_node(start))
        throw GraphError("node not found");

    std::set<NodeId> result;
    std::set<NodeId> frontier{start};
    for (int depth = 1; depth <= max_hops; ++depth) {
        std::set<NodeId> next;
        for (NodeId n : frontier)
            for (RelId r : out_edges_[n])
                next.insert(relationships_[r].target);
        if (depth >= min_hops)
            for (NodeId n : next)
                if (nodes_[n].label == target_label)
                    result.insert(n);
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }
    return result;
}

std::vector<NodeId> PropertyGraph::out_neighbors(NodeId id) const {
    if (!has_node(id))
        throw GraphError("node not found");
    std::set<NodeId> seen;
    for (RelId r : out_edges_[id])
        seen.insert(relationships_[r].target);
    return {seen.begin(), seen.end()};
}

std::vector<std::string> PropertyGraph::node_labels() const {
    std::set<std::string> labels;
    for (const Node& n : nodes_)
        labels.insert(n.label);
    return {labels.begin(), labels.end()};
}

std::vector<std::string> PropertyGraph::relationship_types() const {
    std::set<std::string> types;
    for (const Relationship& r : relationships_)
        types.insert(r.rel_type);
    return {types.begin(), types.end()};
}

SchemaDescription PropertyGraph::schema_description() const {
    SchemaDescription desc;
    std::map<std::string, std::set<std::string>> node_props;
    for (const Node& n : nodes_)
        for (const auto& [name, value] : n.properties)
            node_props[n.label].insert(name);
    for (auto& [label, props] : node_props)
        desc.node_classes.push_back({label, {props.begin(), props.end()}});

    // Relationship classes are identified by (type, source label, target label).
    std::map<std::tuple<std::string, std::string, std::string>, std::set<std::string>>
        rel_props;
    for (const Relationship& r : relationships_) {
        auto key = std::make_tuple(r.rel_type, nodes_[r.source].label,
                                   nodes_[r.target].label);
        auto& props = rel_props[key];
        for (const auto& [name, value] : r.properties)
            props.insert(name);
    }
    for (auto& [key, props] : rel_props)
        desc.rel_classes.push_back({std::get<0>(key), std::get<1>(key),
                                    std::get<2>(key), {props.begin(), props.end()}});
    return desc;
}

SchemaTable render_schema(const SchemaDescription& description) {
    SchemaTable table;
    int index = 0;
    for (const auto& nc : description.node_classes) {
        std::string pattern = "(:" + nc.label + ")";
        if (nc.property_names.empty())
            table.rows.push_back({index++, EntityKind::node, nc.label, pattern, "-"});
        for (const auto& prop : nc.property_names)
            table.rows.push_back({index++, EntityKind::node, nc.label, pattern, prop});
    }
    for (const auto& rc : description.rel_classes) {
        std::string pattern =
            "(:" + rc.source_label + ")-[:" + rc.name + "]->(:" + rc.target_label + ")";
        if (rc.property_names.empty())
            table.rows.push_back({index++, EntityKind::relationship, rc.name, pattern, "-"});
        for (const auto& prop : rc.property_names)
            table.rows.push_back({index++, EntityKind::relationship, rc.name, pattern, prop});
    }
    return table;
}

std::string SchemaTable::to_text() const {
    static const char* headers[] = {"#", "Entity Type", "Entity Name",
                                    "Cypher Pattern", "Property"};
    std::vector<std::array<std::string, 5>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows)
        cells.push_back({std::to_string(row.index),
                         row.kind == EntityKind::node ? "Node" : "Relationship",
                         row.entity_name, row.cypher_pattern, row.property_name});

    std::array<std::size_t, 5> widths;
    for (int c = 0; c < 5; ++c) {
        widths[c] = std::string(headers[c]).size();
        for (const auto& row : cells)
            widths[c] = std::max(widths[c], row[c].size());
    }

    std::ostringstream out;
    auto emit = [&](const std::array<std::string, 5>& row) {
        for (int c = 0; c < 5; ++c) {
            out << row[c];
            if (c < 4)
                out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    };
    emit({headers[0], headers[1], headers[2], headers[3], headers[4]});
    for (const auto& row : cells)
        emit(row);
    return out.str();
}

std::string format_properties(const PropertyMap& properties) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, value] : properties) {
        if (!first)
            out += ", ";
        first = false;
        out += name + ": ";
        if (value.is_text())
            out += "\"" + value.text() + "\"";
        else
            out += value.canonical();
    }
    out += "}";
    return out;
}

std::string PropertyGraph::to_text() const {
    std::vector<NodeId> node_order(nodes_.size());
    for (NodeId i = 0; i < nodes_.size(); ++i)
        node_order[i] = i;
    std::sort(node_order.begin(), node_order.end(), [&](NodeId a, NodeId b) {
        return nodes_[a].key() < nodes_[b].key();
    });

    std::vector<RelId> rel_order(relationships_.size());
    for (RelId i = 0; i < relationships_.size(); ++i)
        rel_order[i] = i;
    std::sort(rel_order.begin(), rel_order.end(), [&](RelId a, RelId b) {
        const auto& ra = relationships_[a];
        const auto& rb = relationships_[b];
        auto ka = std::make_tuple(nodes_[ra.source].key(), nodes_[ra.target].key(),
                                  ra.rel_type, a);
        auto kb = std::make_tuple(nodes_[rb.source].key(), nodes_[rb.target].key(),
                                  rb.rel_type, b);
        return ka < kb;
    });

    std::string out;
    for (NodeId id : node_order) {
        const Node& n = nodes_[id];
        PropertyMap props = n.properties;
        props.erase("key");
        out += "NODE " + n.key() + " :" + n.label + " " + format_properties(props) + "\n";
    }
    for (RelId id : rel_order) {
        const Relationship& r = relationships_[id];
        out += "REL :" + r.rel_type + " (" + nodes_[r.source].key() + ")->(" +
               nodes_[r.target].key() + ") " + format_properties(r.properties) + "\n";
    }
    return out;
}

nlohmann::json PropertyGraph::to_json() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Node& n : nodes_) {
        nlohmann::json props = nlohmann::json::object();
        for (const auto& [name, value] : n.properties)
            props[name] = value.to_json();
        nodes.push_back({{"id", n.id}, {"label", n.label}, {"properties", props}});
    }
    nlohmann::json rels = nlohmann::json::array();
    for (const Relationship& r : relationships_) {
        nlohmann::json props = nlohmann::json::object();
        for (const auto& [name, value] : r.properties)
            props[name] = value.to_json();
        rels.push_back({{"id", r.id},
                        {"type", r.rel_type},
                        {"source", nodes_[r.source].key()},
                        {"target", nodes_[r.target].key()},
                        {"properties", props}});
    }
    return {{"nodes", nodes}, {"relationships", rels}};
}

PropertyGraph PropertyGraph::from_json(const nlohmann::json& j) {
    PropertyGraph graph;
    for (const auto& n : j.at("nodes")) {
        PropertyMap props;
        for (const auto& [name, value] : n.at("properties").items())
            props.emplace(name, PropertyValue::from_json(value));
        graph.add_node(n.at("label").get<std::string>(), std::move(props));
    }
    for (const auto& r : j.at("relationships")) {
        PropertyMap props;
        for (const auto& [name, value] : r.at("properties").items())
            props.emplace(name, PropertyValue::from_json(value));
        const Node* src = graph.find_by_key(r.at("source").get<std::string>());
        const Node* dst = graph.find_by_key(r.at("target").get<std::string>());
        if (!src || !dst)
            throw std::invalid_argument("from_json: relationship endpoint missing");
        graph.add_relationship(r.at("type").get<std::string>(), src->id, dst->id,
                               std::move(props));
    }
    return graph;
}

}  // namespace graphbench
