// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "graphbench/generator.hpp"

using namespace graphbench;

namespace {

GeneratorConfig small_config(std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.num_nodes = 30;
    cfg.node_classes = 3;
    cfg.rel_classes = 2;
    cfg.avg_props_per_entity = 3;
    cfg.values_per_property = 5;
    cfg.edge_density = 0.1;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("random_label is deterministic and avoids dictionary words") {
    const auto& dict = Dictionary::standard();
    Rng a(7), b(7);
    CHECK(random_label(a, 4, 8, dict) == random_label(b, 4, 8, dict));

    Rng rng(123);
    for (int i = 0; i < 500; ++i) {
        auto label = random_label(rng, 4, 8, dict);
        CHECK(label.size() >= 4);
        CHECK(label.size() <= 8);
        CHECK(!dict.contains(label));
        for (char c : label)
            CHECK((c >= 'a' && c <= 'z'));
    }
    CHECK(!dict.contains("cevaz"));
}

TEST_CASE("random_label fails once the dictionary covers the space") {
    std::vector<std::string> all;
    std::string s(4, 'a');
    for (char a = 'a'; a <= 'z'; ++a)
        for (char b = 'a'; b <= 'z'; ++b)
            for (char c = 'a'; c <= 'z'; ++c)
                for (char d = 'a'; d <= 'z'; ++d) {
                    s[0] = a; s[1] = b; s[2] = c; s[3] = d;
                    all.push_back(s);
                }
    Dictionary full(all);
    Rng rng(1);
    CHECK_THROWS_WITH_AS(random_label(rng, 4, 4, full),
                         doctest::Contains("10000"), std::runtime_error);
}

TEST_CASE("blueprint honors class counts and styling") {
    auto cfg = small_config(42);
    cfg.node_classes = 4;
    cfg.rel_classes = 2;
    Rng rng(42);
    auto bp = generate_blueprint(cfg, rng);
    REQUIRE(bp.node_classes.size() == 4);
    REQUIRE(bp.rel_classes.size() == 2);
    for (const auto& nc : bp.node_classes) {
        CHECK(std::isupper(static_cast<unsigned char>(nc.label[0])));
        for (std::size_t i = 1; i < nc.label.size(); ++i)
            CHECK(std::islower(static_cast<unsigned char>(nc.label[i])));
    }
    for (const auto& rc : bp.rel_classes)
        for (char c : rc.name)
            CHECK(std::isupper(static_cast<unsigned char>(c)));
}

TEST_CASE("single-class blueprint is self-referential") {
    auto cfg = small_config(9);
    cfg.node_classes = 1;
    cfg.rel_classes = 1;
    Rng rng(9);
    auto bp = generate_blueprint(cfg, rng);
    REQUIRE(bp.rel_classes.size() == 1);
    CHECK(bp.rel_classes[0].source_label == bp.rel_classes[0].target_label);
    CHECK(bp.rel_classes[0].source_label == bp.node_classes[0].label);
}

TEST_CASE("blueprints and graphs are reproducible from the seed") {
    auto cfg = small_config(77);
    Rng r1(77), r2(77);
    CHECK(generate_blueprint(cfg, r1).to_json() == generate_blueprint(cfg, r2).to_json());

    cfg.num_nodes = 100;
    auto g1 = generate_graph(cfg);
    auto g2 = generate_graph(cfg);
    CHECK(g1.graph.to_json().dump() == g2.graph.to_json().dump());
    CHECK(g1.blueprint.to_json().dump() == g2.blueprint.to_json().dump());
}

TEST_CASE("zero edge density produces zero relationships") {
    auto cfg = small_config(5);
    cfg.edge_density = 0.0;
    CHECK(generate_graph(cfg).graph.relationship_count() == 0);
}

TEST_CASE("full density saturates all ordered pairs without self-loops") {
    GeneratorConfig cfg;
    cfg.num_nodes = 10;
    cfg.node_classes = 1;
    cfg.rel_classes = 1;
    cfg.avg_props_per_entity = 1;
    cfg.values_per_property = 2;
    cfg.edge_density = 1.0;
    cfg.seed = 3;
    auto out = generate_graph(cfg);
    CHECK(out.graph.relationship_count() == 90);
    for (const auto& r : out.graph.relationships())
        CHECK(r.source != r.target);
}

TEST_CASE("every relationship instance conforms to its class") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        auto out = generate_graph(small_config(seed));
        std::map<std::string, const RelClassSpec*> classes;
        for (const auto& rc : out.blueprint.rel_classes)
            classes[rc.name] = &rc;
        for (const auto& r : out.graph.relationships()) {
            REQUIRE(classes.count(r.rel_type) == 1);
            const auto* rc = classes[r.rel_type];
            CHECK(out.graph.node(r.source).label == rc->source_label);
            CHECK(out.graph.node(r.target).label == rc->target_label);
        }
    }
}

TEST_CASE("schema names avoid dictionary words and collisions") {
    const auto& dict = Dictionary::standard();
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        Rng rng(seed);
        auto bp = generate_blueprint(small_config(seed), rng);
        std::set<std::string> seen;
        auto check_name = [&](const std::string& name) {
            CHECK(!dict.contains(name));
            std::string folded;
            for (char c : name)
                folded += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            CHECK(seen.insert(folded).second);
        };
        for (const auto& nc : bp.node_classes) {
            check_name(nc.label);
            for (const auto& spec : nc.properties)
                check_name(spec.name);
        }
        for (const auto& rc : bp.rel_classes) {
            check_name(rc.name);
            for (const auto& spec : rc.properties)
                check_name(spec.name);
        }
        CHECK(!seen.contains("key"));
    }
}

TEST_CASE("property values come from the declared pools") {
    auto out = generate_graph(small_config(21));
    std::map<std::string, std::set<std::string>> pools;
    auto record = [&](const std::vector<PropertySpec>& specs) {
        for (const auto& spec : specs)
            for (const auto& v : spec.pool)
                pools[spec.name].insert(v.canonical());
    };
    for (const auto& nc : out.blueprint.node_classes)
        record(nc.properties);
    for (const auto& rc : out.blueprint.rel_classes)
        record(rc.properties);

    for (const auto& n : out.graph.nodes())
        for (const auto& [name, value] : n.properties)
            if (name != "key")
                CHECK(pools[name].contains(value.canonical()));
    for (const auto& r : out.graph.relationships())
        for (const auto& [name, value] : r.properties)
            CHECK(pools[name].contains(value.canonical()));
}

TEST_CASE("pool sizes and property counts follow the config") {
    auto cfg = small_config(31);
    cfg.avg_props_per_entity = 3;
    cfg.values_per_property = 5;
    Rng rng(31);
    auto bp = generate_blueprint(cfg, rng);
    auto check_specs = [&](const std::vector<PropertySpec>& specs) {
        CHECK(specs.size() >= 2);
        CHECK(specs.size() <= 4);
        for (const auto& spec : specs) {
            CHECK(spec.pool.size() == 5);
            std::set<std::string> distinct;
            for (const auto& v : spec.pool)
                distinct.insert(v.canonical());
            CHECK(distinct.size() == 5);
        }
    };
    for (const auto& nc : bp.node_classes)
        check_specs(nc.properties);
    for (const auto& rc : bp.rel_classes)
        check_specs(rc.properties);

    cfg.avg_props_per_entity = 1;
    Rng rng2(32);
    auto bp2 = generate_blueprint(cfg, rng2);
    for (const auto& nc : bp2.node_classes) {
        CHECK(nc.properties.size() >= 1);
        CHECK(nc.properties.size() <= 2);
    }
}

TEST_CASE("node classes are assigned uniformly") {
    GeneratorConfig cfg;
    cfg.num_nodes = 10000;
    cfg.node_classes = 4;
    cfg.rel_classes = 1;
    cfg.avg_props_per_entity = 1;
    cfg.values_per_property = 2;
    cfg.edge_density = 0.0;
    cfg.seed = 404;
    auto out = generate_graph(cfg);
    std::map<std::string, int> counts;
    for (const auto& n : out.graph.nodes())
        counts[n.label]++;
    REQUIRE(counts.size() == 4);
    double expected = 10000.0 / 4.0;
    double chi2 = 0.0;
    for (const auto& [label, count] : counts)
        chi2 += (count - expected) * (count - expected) / expected;
    CHECK(chi2 < 16.27);  // p = 0.001 cutoff at 3 degrees of freedom
}

TEST_CASE("every blueprint admits a two-hop chain and a fork") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        auto bp = generate_blueprint(small_config(seed), rng);
        bool composable = false;
        bool fork = false;
        for (const auto& a : bp.rel_classes)
            for (const auto& b : bp.rel_classes) {
                if (a.target_label == b.source_label)
                    composable = true;
                if (a.source_label == b.source_label && a.target_label != b.target_label)
                    fork = true;
            }
        CHECK(composable);
        CHECK(fork);
    }
}

TEST_CASE("blueprint json round trips") {
    Rng rng(55);
    auto bp = generate_blueprint(small_config(55), rng);
    CHECK(SchemaBlueprint::from_json(bp.to_json()).to_json() == bp.to_json());

    auto desc = bp.to_description();
    REQUIRE(desc.node_classes.size() == bp.node_classes.size());
    for (const auto& nc : desc.node_classes) {
        CHECK(std::find(nc.property_names.begin(), nc.property_names.end(), "key") !=
              nc.property_names.end());
        CHECK(std::is_sorted(nc.property_names.begin(), nc.property_names.end()));
    }
}

TEST_CASE("config validation rejects bad fields") {
    GeneratorConfig cfg;
    cfg.num_nodes = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.node_classes = 200;
    cfg.num_nodes = 100;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.edge_density = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.label_min_length = 6;
    cfg.label_max_length = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.numeric_property_fraction = -0.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("node keys are unique non-words") {
    const auto& dict = Dictionary::standard();
    auto out = generate_graph(small_config(61));
    std::set<std::string> keys;
    for (const auto& n : out.graph.nodes()) {
        auto key = n.key();
        CHECK(keys.insert(key).second);
        CHECK(!dict.contains(key));
    }
    CHECK(keys.size() == 30);
}
