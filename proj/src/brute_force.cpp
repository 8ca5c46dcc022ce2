// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "graphbench/benchmark.hpp"

namespace graphbench {

namespace {

// Everything here re-derives adjacency from the raw node and relationship
// lists, so this oracle shares no traversal code with gold_answer.
struct Raw {
    const PropertyGraph& g;

    const Node* by_key(const std::string& key) const {
        for (const auto& n : g.nodes())
            if (n.key() == key)
                return &n;
        return nullptr;
    }

    bool edge_to_label(NodeId id, const std::string& label) const {
        for (const auto& r : g.relationships())
            if (r.source == id && g.node(r.target).label == label)
                return true;
        return false;
    }

    long long out_degree(NodeId id) const {
        long long count = 0;
        for (const auto& r : g.relationships())
            if (r.source == id)
                ++count;
        return count;
    }

    // Endpoints of relationship-nonrepeating directed paths whose length
    // lies in [min_len, max_len], by exhaustive DFS.
    std::set<NodeId> trail_endpoints(NodeId start, int min_len, int max_len) const {
        std::set<NodeId> endpoints;
        std::set<RelId> used;
        std::function<void(NodeId, int)> visit = [&](NodeId at, int depth) {
            if (depth >= min_len)
                endpoints.insert(at);
            if (depth == max_len)
                return;
            for (const auto& r : g.relationships()) {
                if (r.source != at || used.count(r.id))
                    continue;
                used.insert(r.id);
                visit(r.target, depth + 1);
                used.erase(r.id);
            }
        };
        visit(start, 0);
        return endpoints;
    }
};

GoldAnswer as_count(long long count) {
    GoldAnswer gold;
    gold.mode = ComparisonMode::single_count;
    gold.count = count;
    gold.records.push_back({{"count", PropertyValue(static_cast<double>(count))}});
    return gold;
}

GoldAnswer as_records(ComparisonMode mode, std::vector<AnswerRecord> records) {
    GoldAnswer gold;
    gold.mode = mode;
    sort_records(records);
    records.erase(std::unique(records.begin(), records.end()), records.end());
    gold.count = static_cast<long long>(records.size());
    gold.records = std::move(records);
    return gold;
}

}  // namespace

GoldAnswer brute_force_gold(const QueryInstance& q, const PropertyGraph& graph) {
    if (graph.relationship_count() > 2000)
        throw std::runtime_error(
            "brute-force oracle refused: graph exceeds 2,000 relationships");
    Raw raw{graph};
    const auto& p = q.params;

    switch (q.templ) {
        case QueryTemplate::node_count: {
            long long count = 0;
            for (const auto& n : graph.nodes())
                if (n.label == p.at("source_label") &&
                    raw.edge_to_label(n.id, p.at("target_label")))
                    ++count;
            return as_count(count);
        }
        case QueryTemplate::relationship_count: {
            long long count = 0;
            for (const auto& r : graph.relationships())
                if (r.rel_type == p.at("rel_type_name"))
                    ++count;
            return as_count(count);
        }
        case QueryTemplate::node_with_most_relationships: {
            long long best = 0;
            std::vector<std::pair<std::string, long long>> tallies;
            for (const auto& n : graph.nodes()) {
                if (n.label != p.at("source_node_label"))
                    continue;
                long long count = 0;
                for (const auto& r : graph.relationships())
                    if (r.source == n.id && r.rel_type == p.at("rel_type_name"))
                        ++count;
                tallies.emplace_back(n.key(), count);
                best = std::max(best, count);
            }
            GoldAnswer gold;
            gold.mode = ComparisonMode::argmax_membership;
            gold.count = best;
            if (best >= 1) {
                std::vector<AnswerRecord> records;
                for (const auto& [key, count] : tallies)
                    if (count == best)
                        records.push_back(
                            {{"node_key", PropertyValue(key)},
                             {"rel_count", PropertyValue(static_cast<double>(count))}});
                sort_records(records);
                gold.records = std::move(records);
            }
            return gold;
        }
        case QueryTemplate::node_by_property: {
            std::vector<AnswerRecord> records;
            for (const auto& n : graph.nodes()) {
                if (n.label != p.at("node_label"))
                    continue;
                auto it = n.properties.find(p.at("prop_name"));
                if (it != n.properties.end() &&
                    it->second == q.value_params.at("prop_value"))
                    records.push_back({{"node_key", PropertyValue(n.key())}});
            }
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::relationship_by_property: {
            std::vector<AnswerRecord> records;
            for (const auto& r : graph.relationships()) {
                if (r.rel_type != p.at("rel_type_name"))
                    continue;
                auto it = r.properties.find(p.at("prop_name"));
                if (it != r.properties.end() &&
                    it->second == q.value_params.at("prop_value"))
                    records.push_back(
                        {{"source_key", PropertyValue(graph.node(r.source).key())},
                         {"target_key", PropertyValue(graph.node(r.target).key())}});
            }
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::path_finding: {
            std::vector<AnswerRecord> records;
            for (const auto& r1 : graph.relationships())
                for (const auto& r2 : graph.relationships()) {
                    if (r1.id == r2.id || r1.target != r2.source)
                        continue;
                    if (graph.node(r1.source).label != p.at("source_label") ||
                        graph.node(r1.target).label != p.at("middle_label") ||
                        graph.node(r2.target).label != p.at("target_label"))
                        continue;
                    records.push_back(
                        {{"source_node_key", PropertyValue(graph.node(r1.source).key())},
                         {"target_node_key",
                          PropertyValue(graph.node(r2.target).key())}});
                }
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::variable_hop_path: {
            std::vector<AnswerRecord> records;
            for (const auto& a : graph.nodes()) {
                if (a.label != p.at("source_label"))
                    continue;
                for (NodeId b : raw.trail_endpoints(a.id, 1, q.hop_bound))
                    if (graph.node(b).label == p.at("target_label") &&
                        raw.out_degree(b) >= 1)
                        records.push_back(
                            {{"source_node_key", PropertyValue(a.key())},
                             {"target_node_key", PropertyValue(graph.node(b).key())}});
            }
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::path_from_specific_node: {
            std::vector<AnswerRecord> records;
            if (const Node* source = raw.by_key(p.at("source_key")))
                for (NodeId b : raw.trail_endpoints(source->id, 1, q.hop_bound))
                    if (graph.node(b).label == p.at("target_label"))
                        records.push_back(
                            {{"target_node_key", PropertyValue(graph.node(b).key())}});
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::remote_node_property: {
            std::set<PropertyValue> values;
            if (const Node* source = raw.by_key(p.at("source_key"))) {
                std::set<NodeId> direct;
                for (const auto& r : graph.relationships())
                    if (r.source == source->id)
                        direct.insert(r.target);
                for (NodeId b : raw.trail_endpoints(source->id, 2, q.hop_bound)) {
                    if (graph.node(b).label != p.at("target_label") || direct.count(b))
                        continue;
                    auto it = graph.node(b).properties.find(p.at("prop_name"));
                    if (it != graph.node(b).properties.end())
                        values.insert(it->second);
                }
            }
            std::vector<AnswerRecord> records;
            for (const auto& v : values)
                records.push_back({{"value", v}});
            return as_records(ComparisonMode::value_membership, std::move(records));
        }
        case QueryTemplate::compositional_intersection: {
            std::vector<AnswerRecord> records;
            for (const auto& n : graph.nodes())
                if (n.label == p.at("source_label") &&
                    raw.edge_to_label(n.id, p.at("target1_label")) &&
                    raw.edge_to_label(n.id, p.at("target2_label")))
                    records.push_back({{"node_key", PropertyValue(n.key())}});
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::negation_with_connection: {
            std::vector<AnswerRecord> records;
            for (const auto& n : graph.nodes())
                if (n.label == p.at("source_label") &&
                    raw.edge_to_label(n.id, p.at("positive_target_label")) &&
                    !raw.edge_to_label(n.id, p.at("negative_target_label")))
                    records.push_back({{"node_key", PropertyValue(n.key())}});
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
        case QueryTemplate::negation_on_rel_property: {
            std::vector<AnswerRecord> records;
            for (const auto& n : graph.nodes()) {
                if (n.label != p.at("source_label"))
                    continue;
                auto sit = n.properties.find(p.at("source_prop_name"));
                if (sit == n.properties.end() ||
                    !(sit->second == q.value_params.at("source_prop_value")))
                    continue;
                bool hit = false;
                for (const auto& r : graph.relationships()) {
                    if (r.source != n.id || r.rel_type != p.at("rel_type_name") ||
                        graph.node(r.target).label != p.at("target_label"))
                        continue;
                    auto rit = r.properties.find(p.at("prop_name"));
                    if (rit != r.properties.end() &&
                        !(rit->second == q.value_params.at("val2"))) {
                        hit = true;
                        break;
                    }
                }
                if (hit)
                    records.push_back({{"node_key", PropertyValue(n.key())}});
            }
            return as_records(ComparisonMode::exact_set, std::move(records));
        }
    }
    throw std::logic_error("unknown query template");
}

}  // namespace graphbench
