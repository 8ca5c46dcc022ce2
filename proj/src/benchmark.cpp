// SPDX-License-Identifier: Apache-2.0
#include "graphbench/benchmark.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace graphbench {

namespace {

std::vector<NodeId> label_members(const PropertyGraph& g, std::string_view label) {
    std::vector<NodeId> out;
    for (const auto& n : g.nodes())
        if (n.label == label)
            out.push_back(n.id);
    return out;
}

std::vector<long long> out_degree_by_node(const PropertyGraph& g) {
    std::vector<long long> deg(g.node_count(), 0);
    for (const auto& r : g.relationships())
        ++deg[r.source];
    return deg;
}

bool has_out_to(const PropertyGraph& g, NodeId id, std::string_view label) {
    for (NodeId other : g.out_neighbors(id))
        if (g.node(other).label == label)
            return true;
    return false;
}

// Distinct values of a node property over one label, sorted.
std::vector<PropertyValue> observed_node_values(const PropertyGraph& g,
                                                std::string_view label,
                                                std::string_view prop) {
    std::set<PropertyValue> seen;
    for (const auto& n : g.nodes()) {
        if (n.label != label)
            continue;
        auto it = n.properties.find(std::string(prop));
        if (it != n.properties.end())
            seen.insert(it->second);
    }
    return {seen.begin(), seen.end()};
}

std::vector<PropertyValue> observed_rel_values(const PropertyGraph& g,
                                               std::string_view rel_type,
                                               std::string_view prop) {
    std::set<PropertyValue> seen;
    for (const auto& r : g.relationships()) {
        if (r.rel_type != rel_type)
            continue;
        auto it = r.properties.find(std::string(prop));
        if (it != r.properties.end())
            seen.insert(it->second);
    }
    return {seen.begin(), seen.end()};
}

const SchemaDescription::NodeClass* find_node_class(const SchemaDescription& schema,
                                                    std::string_view label) {
    for (const auto& nc : schema.node_classes)
        if (nc.label == label)
            return &nc;
    return nullptr;
}

std::vector<std::string> node_labels_of(const SchemaDescription& schema) {
    std::vector<std::string> out;
    for (const auto& nc : schema.node_classes)
        out.push_back(nc.label);
    return out;
}

// Edges only exist along relationship-class wirings, so connection
// questions are sampled over the wired (source, target) label pairs
// rather than all label combinations.
std::vector<std::pair<std::string, std::string>> wired_label_pairs(
    const SchemaDescription& schema) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& rc : schema.rel_classes)
        seen.insert({rc.source_label, rc.target_label});
    return {seen.begin(), seen.end()};
}

// Labels reachable from `from` in min_hops..max_hops steps of the
// class-level digraph induced by the relationship classes.
std::set<std::string> labels_within(const SchemaDescription& schema,
                                    const std::string& from, int min_hops,
                                    int max_hops) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& rc : schema.rel_classes)
        out[rc.source_label].push_back(rc.target_label);
    std::set<std::string> result;
    std::set<std::string> frontier{from};
    for (int hop = 1; hop <= max_hops && !frontier.empty(); ++hop) {
        std::set<std::string> next;
        for (const auto& label : frontier)
            if (auto it = out.find(label); it != out.end())
                next.insert(it->second.begin(), it->second.end());
        if (hop >= min_hops)
            result.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return result;
}

std::vector<std::string> without(const std::vector<std::string>& items,
                                 std::string_view drop) {
    std::vector<std::string> out;
    for (const auto& s : items)
        if (s != drop)
            out.push_back(s);
    return out;
}

GoldAnswer count_answer(long long count) {
    GoldAnswer gold;
    gold.mode = ComparisonMode::single_count;
    gold.count = count;
    gold.records.push_back({{"count", PropertyValue(static_cast<double>(count))}});
    return gold;
}

GoldAnswer finish_records(ComparisonMode mode, std::vector<AnswerRecord> records) {
    GoldAnswer gold;
    gold.mode = mode;
    sort_records(records);
    records.erase(std::unique(records.begin(), records.end()), records.end());
    gold.count = static_cast<long long>(records.size());
    gold.records = std::move(records);
    return gold;
}

AnswerRecord key_record(const std::string& field, const std::string& key) {
    return {{field, PropertyValue(key)}};
}

AnswerRecord pair_record(const std::string& f1, const std::string& k1,
                         const std::string& f2, const std::string& k2) {
    return {{f1, PropertyValue(k1)}, {f2, PropertyValue(k2)}};
}

// --- gold implementations, one per template -------------------------------

GoldAnswer gold_node_count(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_label");
    const auto& target = q.params.at("target_label");
    long long count = 0;
    for (NodeId id : label_members(g, source))
        if (has_out_to(g, id, target))
            ++count;
    return count_answer(count);
}

GoldAnswer gold_relationship_count(const QueryInstance& q, const PropertyGraph& g) {
    const auto& rel_type = q.params.at("rel_type_name");
    long long count = 0;
    for (const auto& r : g.relationships())
        if (r.rel_type == rel_type)
            ++count;
    return count_answer(count);
}

GoldAnswer gold_node_with_most(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_node_label");
    const auto& rel_type = q.params.at("rel_type_name");
    std::map<NodeId, long long> counts;
    for (NodeId id : label_members(g, source))
        counts[id] = 0;
    for (const auto& r : g.relationships())
        if (r.rel_type == rel_type) {
            auto it = counts.find(r.source);
            if (it != counts.end())
                ++it->second;
        }
    long long best = 0;
    for (const auto& [id, c] : counts)
        best = std::max(best, c);
    GoldAnswer gold;
    gold.mode = ComparisonMode::argmax_membership;
    gold.count = best;
    if (best >= 1) {
        std::vector<AnswerRecord> records;
        for (const auto& [id, c] : counts)
            if (c == best)
                records.push_back({{"node_key", PropertyValue(g.node(id).key())},
                                   {"rel_count", PropertyValue(static_cast<double>(c))}});
        sort_records(records);
        gold.records = std::move(records);
    }
    return gold;
}

GoldAnswer gold_node_by_property(const QueryInstance& q, const PropertyGraph& g) {
    const auto& label = q.params.at("node_label");
    const auto& prop = q.params.at("prop_name");
    const auto& value = q.value_params.at("prop_value");
    std::vector<AnswerRecord> records;
    for (NodeId id : g.nodes_by_property(label, prop, value))
        records.push_back(key_record("node_key", g.node(id).key()));
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_relationship_by_property(const QueryInstance& q,
                                         const PropertyGraph& g) {
    const auto& rel_type = q.params.at("rel_type_name");
    const auto& prop = q.params.at("prop_name");
    const auto& value = q.value_params.at("prop_value");
    std::vector<AnswerRecord> records;
    for (const auto& r : g.relationships()) {
        if (r.rel_type != rel_type)
            continue;
        auto it = r.properties.find(prop);
        if (it == r.properties.end() || !(it->second == value))
            continue;
        records.push_back(pair_record("source_key", g.node(r.source).key(),
                                      "target_key", g.node(r.target).key()));
    }
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_path_finding(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_label");
    const auto& middle = q.params.at("middle_label");
    const auto& target = q.params.at("target_label");
    std::vector<AnswerRecord> records;
    for (NodeId a : label_members(g, source))
        for (const auto& e1 : g.neighbors(a)) {
            if (e1.direction != Direction::outgoing ||
                g.node(e1.other).label != middle)
                continue;
            for (const auto& e2 : g.neighbors(e1.other)) {
                if (e2.direction != Direction::outgoing || e2.rel == e1.rel ||
                    g.node(e2.other).label != target)
                    continue;
                records.push_back(pair_record("source_node_key", g.node(a).key(),
                                              "target_node_key",
                                              g.node(e2.other).key()));
            }
        }
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_variable_hop(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_label");
    const auto& target = q.params.at("target_label");
    auto degrees = out_degree_by_node(g);
    std::vector<AnswerRecord> records;
    for (NodeId a : label_members(g, source))
        for (NodeId b : g.reachable_within(a, 1, q.hop_bound, target))
            if (degrees[b] >= 1)
                records.push_back(pair_record("source_node_key", g.node(a).key(),
                                              "target_node_key", g.node(b).key()));
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_path_from_specific(const QueryInstance& q, const PropertyGraph& g) {
    const auto& target = q.params.at("target_label");
    const Node* source = g.find_by_key(q.params.at("source_key"));
    std::vector<AnswerRecord> records;
    if (source != nullptr)
        for (NodeId b : g.reachable_within(source->id, 1, q.hop_bound, target))
            records.push_back(key_record("target_node_key", g.node(b).key()));
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_remote_node_property(const QueryInstance& q, const PropertyGraph& g) {
    const auto& target = q.params.at("target_label");
    const auto& prop = q.params.at("prop_name");
    const Node* source = g.find_by_key(q.params.at("source_key"));
    std::set<PropertyValue> values;
    if (source != nullptr) {
        auto reach = g.reachable_within(source->id, 2, q.hop_bound, target);
        for (NodeId direct : g.out_neighbors(source->id))
            reach.erase(direct);
        for (NodeId b : reach) {
            auto it = g.node(b).properties.find(prop);
            if (it != g.node(b).properties.end())
                values.insert(it->second);
        }
    }
    std::vector<AnswerRecord> records;
    for (const auto& v : values)
        records.push_back({{"value", v}});
    return finish_records(ComparisonMode::value_membership, std::move(records));
}

GoldAnswer gold_compositional(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_label");
    const auto& t1 = q.params.at("target1_label");
    const auto& t2 = q.params.at("target2_label");
    std::vector<AnswerRecord> records;
    for (NodeId a : label_members(g, source))
        if (has_out_to(g, a, t1) && has_out_to(g, a, t2))
            records.push_back(key_record("node_key", g.node(a).key()));
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_negation_connection(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_label");
    const auto& positive = q.params.at("positive_target_label");
    const auto& negative = q.params.at("negative_target_label");
    std::vector<AnswerRecord> records;
    for (NodeId a : label_members(g, source))
        if (has_out_to(g, a, positive) && !has_out_to(g, a, negative))
            records.push_back(key_record("node_key", g.node(a).key()));
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

GoldAnswer gold_negation_rel_property(const QueryInstance& q, const PropertyGraph& g) {
    const auto& source = q.params.at("source_label");
    const auto& source_prop = q.params.at("source_prop_name");
    const auto& source_value = q.value_params.at("source_prop_value");
    const auto& target = q.params.at("target_label");
    const auto& rel_type = q.params.at("rel_type_name");
    const auto& prop = q.params.at("prop_name");
    const auto& val2 = q.value_params.at("val2");
    std::vector<AnswerRecord> records;
    for (NodeId a : g.nodes_by_property(source, source_prop, source_value)) {
        bool hit = false;
        for (const auto& e : g.neighbors(a)) {
            if (e.direction != Direction::outgoing)
                continue;
            const auto& r = g.relationship(e.rel);
            if (r.rel_type != rel_type || g.node(e.other).label != target)
                continue;
            auto it = r.properties.find(prop);
            if (it != r.properties.end() && !(it->second == val2)) {
                hit = true;
                break;
            }
        }
        if (hit)
            records.push_back(key_record("node_key", g.node(a).key()));
    }
    return finish_records(ComparisonMode::exact_set, std::move(records));
}

// --- parameter samplers ---------------------------------------------------

struct Sampler {
    const PropertyGraph& graph;
    const SchemaDescription& schema;
    Rng& rng;
    int hop_bound;

    std::optional<QueryInstance> sample(QueryTemplate t);

private:
    std::optional<QueryInstance> with_params(
        QueryTemplate t, std::map<std::string, std::string> params,
        std::map<std::string, PropertyValue> value_params = {});
    std::optional<PropertyValue> pick_value(std::vector<PropertyValue> values);
    const Node* pick_node();
};

std::optional<PropertyValue> Sampler::pick_value(std::vector<PropertyValue> values) {
    if (values.empty())
        return std::nullopt;
    return values[rng.below(values.size())];
}

const Node* Sampler::pick_node() {
    if (graph.node_count() == 0)
        return nullptr;
    return &graph.nodes()[rng.below(graph.node_count())];
}

std::optional<QueryInstance> Sampler::with_params(
    QueryTemplate t, std::map<std::string, std::string> params,
    std::map<std::string, PropertyValue> value_params) {
    QueryInstance q;
    q.templ = t;
    q.params = std::move(params);
    q.value_params = std::move(value_params);
    q.hop_bound = hop_bound;

    std::vector<std::pair<std::string, std::string>> slots;
    for (const auto& [k, v] : q.params)
        slots.emplace_back(k, v);
    for (const auto& [k, v] : q.value_params)
        slots.emplace_back(k, v.canonical());
    slots.emplace_back("n", std::to_string(q.hop_bound));

    std::string schema_text(output_schema_template(t));
    auto type_it = q.params.find("prop_type");
    if (type_it != q.params.end())
        schema_text = fill_placeholders(schema_text, {{"prop_type", type_it->second}});
    q.output_schema = schema_text;
    slots.emplace_back("output_schema", q.output_schema);

    q.question_text = fill_placeholders(instruction_template(t), slots);
    return q;
}

std::optional<QueryInstance> Sampler::sample(QueryTemplate t) {
    const auto labels = node_labels_of(schema);
    switch (t) {
        case QueryTemplate::node_count: {
            auto pairs = wired_label_pairs(schema);
            if (pairs.empty())
                return std::nullopt;
            const auto& [source, target] = pairs[rng.below(pairs.size())];
            return with_params(t, {{"source_label", source},
                                   {"target_label", target}});
        }
        case QueryTemplate::relationship_count: {
            if (schema.rel_classes.empty())
                return std::nullopt;
            const auto& rc = schema.rel_classes[rng.below(schema.rel_classes.size())];
            return with_params(t, {{"rel_type_name", rc.name}});
        }
        case QueryTemplate::node_with_most_relationships: {
            if (schema.rel_classes.empty())
                return std::nullopt;
            const auto& rc = schema.rel_classes[rng.below(schema.rel_classes.size())];
            return with_params(t, {{"source_node_label", rc.source_label},
                                   {"rel_type_name", rc.name}});
        }
        case QueryTemplate::node_by_property: {
            if (schema.node_classes.empty())
                return std::nullopt;
            const auto& nc =
                schema.node_classes[rng.below(schema.node_classes.size())];
            auto props = without(nc.property_names, "key");
            if (props.empty())
                return std::nullopt;
            auto prop = rng.pick(props);
            auto value = pick_value(observed_node_values(graph, nc.label, prop));
            if (!value)
                return std::nullopt;
            return with_params(t, {{"node_label", nc.label}, {"prop_name", prop}},
                               {{"prop_value", *value}});
        }
        case QueryTemplate::relationship_by_property: {
            if (schema.rel_classes.empty())
                return std::nullopt;
            const auto& rc = schema.rel_classes[rng.below(schema.rel_classes.size())];
            if (rc.property_names.empty())
                return std::nullopt;
            auto prop = rng.pick(rc.property_names);
            auto value = pick_value(observed_rel_values(graph, rc.name, prop));
            if (!value)
                return std::nullopt;
            return with_params(t, {{"rel_type_name", rc.name}, {"prop_name", prop}},
                               {{"prop_value", *value}});
        }
        case QueryTemplate::path_finding: {
            std::set<std::array<std::string, 3>> triples;
            for (const auto& r1 : schema.rel_classes)
                for (const auto& r2 : schema.rel_classes)
                    if (r1.target_label == r2.source_label)
                        triples.insert(
                            {r1.source_label, r1.target_label, r2.target_label});
            if (triples.empty())
                return std::nullopt;
            std::vector<std::array<std::string, 3>> pool(triples.begin(),
                                                         triples.end());
            const auto& tr = rng.pick(pool);
            return with_params(t, {{"source_label", tr[0]},
                                   {"middle_label", tr[1]},
                                   {"target_label", tr[2]}});
        }
        case QueryTemplate::variable_hop_path: {
            // The answer keeps only reached nodes with an outgoing
            // relationship, so the target class must itself source one.
            std::set<std::string> sources;
            for (const auto& rc : schema.rel_classes)
                sources.insert(rc.source_label);
            std::vector<std::pair<std::string, std::string>> viable;
            for (const auto& source : labels)
                for (const auto& target :
                     labels_within(schema, source, 1, hop_bound))
                    if (sources.count(target))
                        viable.emplace_back(source, target);
            if (viable.empty())
                return std::nullopt;
            const auto& [source, target] = viable[rng.below(viable.size())];
            return with_params(t, {{"source_label", source},
                                   {"target_label", target}});
        }
        case QueryTemplate::path_from_specific_node: {
            const Node* node = pick_node();
            if (node == nullptr || labels.empty())
                return std::nullopt;
            return with_params(t, {{"source_key", node->key()},
                                   {"target_label", rng.pick(labels)}});
        }
        case QueryTemplate::remote_node_property: {
            const Node* node = pick_node();
            if (node == nullptr)
                return std::nullopt;
            auto remote = labels_within(schema, node->label, 2, hop_bound);
            std::vector<std::string> viable(remote.begin(), remote.end());
            if (viable.empty())
                return std::nullopt;
            auto target = rng.pick(viable);
            const auto* nc = find_node_class(schema, target);
            if (nc == nullptr || nc->property_names.empty())
                return std::nullopt;
            auto prop = rng.pick(nc->property_names);
            std::string prop_type = "string";
            for (NodeId id : label_members(graph, target)) {
                auto it = graph.node(id).properties.find(prop);
                if (it != graph.node(id).properties.end()) {
                    prop_type = it->second.is_number() ? "number" : "string";
                    break;
                }
            }
            return with_params(t, {{"source_label", node->label},
                                   {"source_key", node->key()},
                                   {"target_label", target},
                                   {"prop_name", prop},
                                   {"prop_type", prop_type}});
        }
        case QueryTemplate::compositional_intersection: {
            std::set<std::array<std::string, 3>> forks;
            for (const auto& r1 : schema.rel_classes)
                for (const auto& r2 : schema.rel_classes)
                    if (r1.source_label == r2.source_label &&
                        r1.target_label != r2.target_label)
                        forks.insert(
                            {r1.source_label, r1.target_label, r2.target_label});
            if (forks.empty())
                return std::nullopt;
            std::vector<std::array<std::string, 3>> pool(forks.begin(), forks.end());
            const auto& tr = rng.pick(pool);
            return with_params(t, {{"source_label", tr[0]},
                                   {"target1_label", tr[1]},
                                   {"target2_label", tr[2]}});
        }
        case QueryTemplate::negation_with_connection: {
            std::set<std::array<std::string, 2>> pairs;
            for (const auto& rc : schema.rel_classes)
                pairs.insert({rc.source_label, rc.target_label});
            if (pairs.empty())
                return std::nullopt;
            std::vector<std::array<std::string, 2>> pool(pairs.begin(), pairs.end());
            const auto& pr = rng.pick(pool);
            auto negatives = without(labels, pr[1]);
            if (negatives.empty())
                return std::nullopt;
            return with_params(t, {{"source_label", pr[0]},
                                   {"positive_target_label", pr[1]},
                                   {"negative_target_label", rng.pick(negatives)}});
        }
        case QueryTemplate::negation_on_rel_property: {
            if (schema.rel_classes.empty())
                return std::nullopt;
            const auto& rc = schema.rel_classes[rng.below(schema.rel_classes.size())];
            const auto* snc = find_node_class(schema, rc.source_label);
            if (snc == nullptr)
                return std::nullopt;
            auto source_props = without(snc->property_names, "key");
            if (source_props.empty() || rc.property_names.empty())
                return std::nullopt;
            auto sprop = rng.pick(source_props);
            auto svalue =
                pick_value(observed_node_values(graph, rc.source_label, sprop));
            auto rprop = rng.pick(rc.property_names);
            auto rvalue = pick_value(observed_rel_values(graph, rc.name, rprop));
            if (!svalue || !rvalue)
                return std::nullopt;
            return with_params(t,
                               {{"source_label", rc.source_label},
                                {"source_prop_name", sprop},
                                {"target_label", rc.target_label},
                                {"rel_type_name", rc.name},
                                {"prop_name", rprop}},
                               {{"source_prop_value", *svalue}, {"val2", *rvalue}});
        }
    }
    return std::nullopt;
}

}  // namespace

bool GoldAnswer::empty() const {
    if (mode == ComparisonMode::single_count)
        return count < 1;
    return records.empty();
}

nlohmann::json GoldAnswer::to_json() const {
    nlohmann::json records_json = nlohmann::json::array();
    for (const auto& r : records)
        records_json.push_back(record_to_json(r));
    return {{"mode", comparison_mode_name(mode)},
            {"count", count},
            {"records", std::move(records_json)}};
}

GoldAnswer GoldAnswer::from_json(const nlohmann::json& j) {
    GoldAnswer gold;
    auto mode = comparison_mode_from_name(j.at("mode").get<std::string>());
    if (!mode)
        throw std::invalid_argument("GoldAnswer: unknown comparison mode");
    gold.mode = *mode;
    gold.count = j.at("count").get<long long>();
    for (const auto& rec : j.at("records")) {
        AnswerRecord record;
        for (const auto& [k, v] : rec.items())
            record.insert_or_assign(k, PropertyValue::from_json(v));
        gold.records.push_back(std::move(record));
    }
    return gold;
}

nlohmann::json QueryInstance::to_json() const {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [k, v] : value_params)
        values[k] = v.to_json();
    return {{"template", std::string(template_name(templ))},
            {"params", params},
            {"value_params", std::move(values)},
            {"hop_bound", hop_bound},
            {"question_text", question_text},
            {"output_schema", output_schema}};
}

QueryInstance QueryInstance::from_json(const nlohmann::json& j) {
    QueryInstance q;
    auto t = template_from_name(j.at("template").get<std::string>());
    if (!t)
        throw std::invalid_argument("QueryInstance: unknown template name");
    q.templ = *t;
    q.params = j.at("params").get<std::map<std::string, std::string>>();
    for (const auto& [k, v] : j.at("value_params").items())
        q.value_params.insert_or_assign(k, PropertyValue::from_json(v));
    q.hop_bound = j.at("hop_bound").get<int>();
    q.question_text = j.at("question_text").get<std::string>();
    q.output_schema = j.at("output_schema").get<std::string>();
    return q;
}

nlohmann::json record_to_json(const AnswerRecord& record) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, v] : record)
        out[k] = v.to_json();
    return out;
}

void sort_records(std::vector<AnswerRecord>& records) {
    std::sort(records.begin(), records.end());
}

GoldAnswer gold_answer(const QueryInstance& instance, const PropertyGraph& graph) {
    switch (instance.templ) {
        case QueryTemplate::node_count: return gold_node_count(instance, graph);
        case QueryTemplate::relationship_count:
            return gold_relationship_count(instance, graph);
        case QueryTemplate::node_with_most_relationships:
            return gold_node_with_most(instance, graph);
        case QueryTemplate::node_by_property:
            return gold_node_by_property(instance, graph);
        case QueryTemplate::relationship_by_property:
            return gold_relationship_by_property(instance, graph);
        case QueryTemplate::path_finding: return gold_path_finding(instance, graph);
        case QueryTemplate::variable_hop_path:
            return gold_variable_hop(instance, graph);
        case QueryTemplate::path_from_specific_node:
            return gold_path_from_specific(instance, graph);
        case QueryTemplate::remote_node_property:
            return gold_remote_node_property(instance, graph);
        case QueryTemplate::compositional_intersection:
            return gold_compositional(instance, graph);
        case QueryTemplate::negation_with_connection:
            return gold_negation_connection(instance, graph);
        case QueryTemplate::negation_on_rel_property:
            return gold_negation_rel_property(instance, graph);
    }
    throw std::logic_error("unknown query template");
}

QueryInstance instantiate(QueryTemplate t, const PropertyGraph& graph,
                          const SchemaDescription& schema, Rng& rng, int hop_bound) {
    Sampler sampler{graph, schema, rng, hop_bound};
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto candidate = sampler.sample(t);
        if (!candidate)
            continue;
        if (!gold_answer(*candidate, graph).empty())
            return *candidate;
    }
    throw std::runtime_error("template not instantiable on this graph: " +
                             std::string(template_name(t)));
}

}  // namespace graphbench
