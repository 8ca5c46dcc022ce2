// SPDX-License-Identifier: Apache-2.0
#include "graphbench/generator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace graphbench {

namespace {

constexpr int kMaxRejections = 10000;

std::string capitalized(std::string s) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

std::string upcased(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

// Draws labels until one avoids both the dictionary and the taken set.
std::string fresh_name(Rng& rng, const GeneratorConfig& cfg, const Dictionary& dict,
                       std::set<std::string>& taken) {
    for (int i = 0; i < kMaxRejections; ++i) {
        auto s = random_label(rng, cfg.label_min_length, cfg.label_max_length, dict);
        if (taken.insert(s).second)
            return s;
    }
    throw std::runtime_error("exhausted unique label candidates after 10000 draws");
}

std::size_t props_for_entity(const GeneratorConfig& cfg, Rng& rng) {
    auto n = static_cast<long long>(cfg.avg_props_per_entity) +
             static_cast<long long>(rng.range(0, 2)) - 1;
    return static_cast<std::size_t>(std::max<long long>(1, n));
}

std::vector<PropertyValue> make_pool(Rng& rng, const GeneratorConfig& cfg,
                                     const Dictionary& dict) {
    std::vector<PropertyValue> pool;
    bool numeric = rng.chance(cfg.numeric_property_fraction);
    std::set<std::string> seen;
    int rejections = 0;
    while (pool.size() < cfg.values_per_property) {
        PropertyValue v = numeric
            ? PropertyValue(std::floor(rng.real() * 100000.0) / 100.0)
            : PropertyValue(random_label(rng, cfg.label_min_length,
                                         cfg.label_max_length, dict));
        if (seen.insert(v.canonical()).second) {
            pool.push_back(std::move(v));
        } else if (++rejections >= kMaxRejections) {
            throw std::runtime_error("exhausted distinct pool values after 10000 draws");
        }
    }
    return pool;
}

std::vector<PropertySpec> make_property_specs(Rng& rng, const GeneratorConfig& cfg,
                                              const Dictionary& dict,
                                              std::set<std::string>& taken) {
    std::vector<PropertySpec> specs;
    std::size_t count = props_for_entity(cfg, rng);
    for (std::size_t i = 0; i < count; ++i) {
        auto name = fresh_name(rng, cfg, dict, taken);
        specs.push_back({std::move(name), make_pool(rng, cfg, dict)});
    }
    std::sort(specs.begin(), specs.end(),
              [](const PropertySpec& a, const PropertySpec& b) { return a.name < b.name; });
    return specs;
}

bool has_composable_pair(const std::vector<RelClassSpec>& rels) {
    for (const auto& a : rels)
        for (const auto& b : rels)
            if (a.target_label == b.source_label)
                return true;
    return false;
}

// Some label must source two classes with distinct targets, or
// intersection-style questions can never be posed.
bool has_fork(const std::vector<RelClassSpec>& rels) {
    for (const auto& a : rels)
        for (const auto& b : rels)
            if (a.source_label == b.source_label && a.target_label != b.target_label)
                return true;
    return false;
}

PropertyMap draw_properties(Rng& rng, const std::vector<PropertySpec>& specs) {
    PropertyMap props;
    for (const auto& spec : specs)
        props.insert_or_assign(spec.name, spec.pool[rng.below(spec.pool.size())]);
    return props;
}

nlohmann::json specs_to_json(const std::vector<PropertySpec>& specs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& spec : specs) {
        nlohmann::json pool = nlohmann::json::array();
        for (const auto& v : spec.pool)
            pool.push_back(v.to_json());
        arr.push_back({{"name", spec.name}, {"pool", std::move(pool)}});
    }
    return arr;
}

std::vector<PropertySpec> specs_from_json(const nlohmann::json& arr) {
    std::vector<PropertySpec> specs;
    for (const auto& item : arr) {
        PropertySpec spec;
        spec.name = item.at("name").get<std::string>();
        for (const auto& v : item.at("pool"))
            spec.pool.push_back(PropertyValue::from_json(v));
        specs.push_back(std::move(spec));
    }
    return specs;
}

}  // namespace

void GeneratorConfig::validate() const {
    if (num_nodes == 0)
        throw std::invalid_argument("num_nodes must be positive");
    if (node_classes == 0 || rel_classes == 0)
        throw std::invalid_argument("class counts must be positive");
    if (node_classes > num_nodes)
        throw std::invalid_argument("node_classes cannot exceed num_nodes");
    if (avg_props_per_entity == 0 || values_per_property == 0)
        throw std::invalid_argument("property counts must be positive");
    if (edge_density < 0.0 || edge_density > 1.0)
        throw std::invalid_argument("edge_density must lie in [0,1]");
    if (label_min_length < 1 || label_max_length < label_min_length)
        throw std::invalid_argument("label length range is invalid");
    if (numeric_property_fraction < 0.0 || numeric_property_fraction > 1.0)
        throw std::invalid_argument("numeric_property_fraction must lie in [0,1]");
}

std::string random_label(Rng& rng, int min_length, int max_length,
                         const Dictionary& dictionary) {
    for (int i = 0; i < kMaxRejections; ++i) {
        auto len = rng.range(static_cast<std::uint64_t>(min_length),
                             static_cast<std::uint64_t>(max_length));
        std::string s(len, 'a');
        for (char& c : s)
            c = static_cast<char>('a' + rng.below(26));
        if (!dictionary.contains(s))
            return s;
    }
    throw std::runtime_error("exhausted label candidates after 10000 draws; "
                             "dictionary rejects the whole space");
}

SchemaBlueprint generate_blueprint(const GeneratorConfig& config, Rng& rng,
                                   const Dictionary& dictionary) {
    config.validate();
    SchemaBlueprint bp;
    std::set<std::string> taken{"key"};

    for (std::size_t i = 0; i < config.node_classes; ++i)
        bp.node_classes.push_back({capitalized(fresh_name(rng, config, dictionary, taken)), {}});
    for (std::size_t i = 0; i < config.rel_classes; ++i)
        bp.rel_classes.push_back({upcased(fresh_name(rng, config, dictionary, taken)), "", "", {}});

    // Endpoint pairs are uniform, conditioned on the structures every
    // query family needs: a composable class sequence for multi-hop
    // questions, and (where class counts permit) a fork for
    // intersection questions.
    bool want_fork = config.node_classes >= 2 && config.rel_classes >= 2;
    for (int attempt = 0;; ++attempt) {
        for (auto& rc : bp.rel_classes) {
            rc.source_label = bp.node_classes[rng.below(config.node_classes)].label;
            rc.target_label = bp.node_classes[rng.below(config.node_classes)].label;
        }
        if (has_composable_pair(bp.rel_classes) && (!want_fork || has_fork(bp.rel_classes)))
            break;
        if (attempt >= kMaxRejections)
            throw std::runtime_error("no admissible relationship class layout after 10000 draws");
    }

    for (auto& nc : bp.node_classes)
        nc.properties = make_property_specs(rng, config, dictionary, taken);
    for (auto& rc : bp.rel_classes)
        rc.properties = make_property_specs(rng, config, dictionary, taken);
    return bp;
}

GeneratedGraph generate_graph(const GeneratorConfig& config, const Dictionary& dictionary) {
    config.validate();
    Rng root(config.seed);

    auto blueprint_rng = root.child("blueprint");
    auto bp = generate_blueprint(config, blueprint_rng, dictionary);

    auto class_rng = root.child("classes");
    auto key_rng = root.child("keys");
    auto prop_rng = root.child("properties");
    auto edge_rng = root.child("edges");

    PropertyGraph g;
    std::set<std::string> used_keys;
    std::unordered_map<std::string, std::vector<NodeId>> nodes_of_label;
    for (std::size_t i = 0; i < config.num_nodes; ++i) {
        const auto& nc = bp.node_classes[class_rng.below(config.node_classes)];
        auto props = draw_properties(prop_rng, nc.properties);
        std::string key;
        for (int attempt = 0;; ++attempt) {
            key = random_label(key_rng, config.label_min_length, config.label_max_length,
                               dictionary);
            if (used_keys.insert(key).second)
                break;
            if (attempt >= kMaxRejections)
                throw std::runtime_error("exhausted unique node keys after 10000 draws");
        }
        props.insert_or_assign("key", PropertyValue(key));
        nodes_of_label[nc.label].push_back(g.add_node(nc.label, props));
    }

    for (const auto& rc : bp.rel_classes) {
        for (NodeId u : nodes_of_label[rc.source_label]) {
            for (NodeId v : nodes_of_label[rc.target_label]) {
                if (u == v || !edge_rng.chance(config.edge_density))
                    continue;
                g.add_relationship(rc.name, u, v, draw_properties(edge_rng, rc.properties));
            }
        }
    }
    return {std::move(g), std::move(bp)};
}

SchemaDescription SchemaBlueprint::to_description() const {
    SchemaDescription d;
    for (const auto& nc : node_classes) {
        std::vector<std::string> names{"key"};
        for (const auto& spec : nc.properties)
            names.push_back(spec.name);
        std::sort(names.begin(), names.end());
        d.node_classes.push_back({nc.label, std::move(names)});
    }
    for (const auto& rc : rel_classes) {
        std::vector<std::string> names;
        for (const auto& spec : rc.properties)
            names.push_back(spec.name);
        d.rel_classes.push_back({rc.name, rc.source_label, rc.target_label, std::move(names)});
    }
    return d;
}

nlohmann::json SchemaBlueprint::to_json() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& nc : node_classes)
        nodes.push_back({{"label", nc.label}, {"properties", specs_to_json(nc.properties)}});
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& rc : rel_classes)
        rels.push_back({{"name", rc.name},
                        {"source", rc.source_label},
                        {"target", rc.target_label},
                        {"properties", specs_to_json(rc.properties)}});
    return {{"node_classes", std::move(nodes)}, {"rel_classes", std::move(rels)}};
}

SchemaBlueprint SchemaBlueprint::from_json(const nlohmann::json& j) {
    SchemaBlueprint bp;
    for (const auto& item : j.at("node_classes"))
        bp.node_classes.push_back({item.at("label").get<std::string>(),
                                   specs_from_json(item.at("properties"))});
    for (const auto& item : j.at("rel_classes"))
        bp.rel_classes.push_back({item.at("name").get<std::string>(),
                                  item.at("source").get<std::string>(),
                                  item.at("target").get<std::string>(),
                                  specs_from_json(item.at("properties"))});
    return bp;
}

}  // namespace graphbench
