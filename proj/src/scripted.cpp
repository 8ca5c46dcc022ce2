// SPDX-License-Identifier: Apache-2.0
#include "graphbench/scripted.hpp"

#include <algorithm>
#include <utility>

namespace graphbench {

namespace {

using nlohmann::json;

BackendTurn final_text(std::string text) {
    BackendTurn turn;
    turn.message = std::move(text);
    return turn;
}

BackendTurn final_records(const json& records) { return final_text(records.dump()); }

json key_records(const std::set<std::string>& keys, const char* field) {
    json out = json::array();
    for (const auto& k : keys)
        out.push_back({{field, k}});
    return out;
}

json pair_records(const std::set<std::pair<std::string, std::string>>& pairs,
                  const char* f1, const char* f2) {
    json out = json::array();
    for (const auto& [a, b] : pairs)
        out.push_back({{f1, a}, {f2, b}});
    return out;
}

bool value_equals(const json& j, const PropertyValue& v) {
    if (v.is_number())
        return j.is_number() && j.get<double>() == v.number();
    return j.is_string() && j.get<std::string>() == v.text();
}

json result_payload(const ToolResult& result) {
    if (!result.data.is_null())
        return result.data;
    if (result.is_error)
        return nullptr;
    try {
        return json::parse(result.content);
    } catch (const json::parse_error&) {
        return nullptr;
    }
}

}  // namespace

ScriptedSolver::ScriptedSolver(QueryInstance instance, SchemaDescription schema)
    : q_(std::move(instance)), schema_(std::move(schema)) {}

ToolCall ScriptedSolver::make(const std::string& name, json args) {
    return {"s" + std::to_string(id_++), name, std::move(args)};
}

BackendTurn ScriptedSolver::act(std::vector<ToolCall> calls) {
    pending_ = calls;
    BackendTurn turn;
    turn.tool_calls = std::move(calls);
    return turn;
}

BackendTurn ScriptedSolver::think_first() {
    std::string thought =
        "Answering a " + std::string(template_name(q_.templ)) +
        " question with parameters " + json(q_.params).dump() +
        ". Plan: enumerate the relevant nodes, expand neighbors with the graph "
        "tools, and aggregate locally.";
    return act({make("think", {{"thought", thought}})});
}

void ScriptedSolver::ingest(const Conversation& conversation) {
    for (const auto& result : conversation.last_results) {
        const ToolCall* call = nullptr;
        for (const auto& c : pending_)
            if (c.call_id == result.call_id) {
                call = &c;
                break;
            }
        if (call == nullptr)
            continue;
        json payload = result.is_error ? json() : result_payload(result);
        if (call->name == "get_unique_property_values") {
            listed_keys_.clear();
            if (payload.is_array())
                for (const auto& row : payload)
                    listed_keys_.push_back(row.at("values").get<std::string>());
        } else if (call->name == "get_node_by_property") {
            auto label = call->arguments.at("label").get<std::string>();
            lookups_[label] = payload.is_array() ? payload : json::array();
            if (payload.is_array())
                for (const auto& node : payload) {
                    auto key = node.at("key").get<std::string>();
                    label_of_[key] = label;
                    props_of_[key] = node;
                }
        } else if (call->name == "get_all_nearest_neighbors") {
            auto key = call->arguments.at("property_value").get<std::string>();
            neighbors_[key] = payload.is_array() ? payload : json::array();
            if (payload.is_array())
                for (const auto& entry : payload) {
                    auto nb = entry.at("neighbor").at("key").get<std::string>();
                    label_of_[nb] = entry.at("neighbor_label").get<std::string>();
                    props_of_[nb] = entry.at("neighbor");
                }
        }
    }
    pending_.clear();
}

std::vector<ToolCall> ScriptedSolver::missing_neighbor_fetches(
    const std::set<std::string>& keys) {
    std::vector<ToolCall> calls;
    for (const auto& key : keys) {
        if (neighbors_.count(key))
            continue;
        auto it = label_of_.find(key);
        std::string label = it != label_of_.end() ? it->second : source_label_;
        calls.push_back(make("get_all_nearest_neighbors", {{"label", label},
                                                           {"property_name", "key"},
                                                           {"property_value", key}}));
    }
    return calls;
}

bool ScriptedSolver::bfs_advance(int target_levels, std::vector<ToolCall>& calls) {
    while (level_ < target_levels) {
        std::set<std::string> current;
        for (const auto& [src, cells] : frontier_)
            current.insert(cells.begin(), cells.end());
        auto missing = missing_neighbor_fetches(current);
        if (!missing.empty()) {
            calls = std::move(missing);
            return false;
        }
        for (auto& [src, cells] : frontier_) {
            std::set<std::string> next;
            for (const auto& cell : cells)
                for (const auto& nb : outgoing_keys(cell))
                    next.insert(nb);
            reached_[src].insert(next.begin(), next.end());
            cells = std::move(next);
        }
        ++level_;
    }
    return true;
}

long long ScriptedSolver::outgoing_count(const std::string& key,
                                         const std::string& rel_type) const {
    auto it = neighbors_.find(key);
    if (it == neighbors_.end())
        return 0;
    long long count = 0;
    for (const auto& entry : it->second)
        if (entry.at("direction") == "outgoing" &&
            (rel_type.empty() || entry.at("relationship_type") == rel_type))
            ++count;
    return count;
}

bool ScriptedSolver::has_outgoing_label(const std::string& key,
                                        const std::string& label) const {
    auto it = neighbors_.find(key);
    if (it == neighbors_.end())
        return false;
    for (const auto& entry : it->second)
        if (entry.at("direction") == "outgoing" && entry.at("neighbor_label") == label)
            return true;
    return false;
}

std::set<std::string> ScriptedSolver::outgoing_keys(const std::string& key) const {
    std::set<std::string> out;
    auto it = neighbors_.find(key);
    if (it == neighbors_.end())
        return out;
    for (const auto& entry : it->second)
        if (entry.at("direction") == "outgoing")
            out.insert(entry.at("neighbor").at("key").get<std::string>());
    return out;
}

BackendTurn ScriptedSolver::next_turn(const Conversation& conversation) {
    ingest(conversation);
    if (stage_ == 0) {
        stage_ = 1;
        return think_first();
    }
    const auto& p = q_.params;

    auto keys_call = [&](const std::string& label) {
        source_label_ = label;
        return make("get_unique_property_values", {{"entity_type", "node"},
                                                   {"entity_name", label},
                                                   {"property_name", "key"}});
    };
    auto seed_sources = [&](const std::string& label) {
        source_keys_ = listed_keys_;
        for (const auto& k : source_keys_)
            label_of_[k] = label;
    };
    auto fetch_sources = [&]() {
        return missing_neighbor_fetches(
            {source_keys_.begin(), source_keys_.end()});
    };
    auto rel_source = [&](const std::string& rel_type) -> std::string {
        for (const auto& rc : schema_.rel_classes)
            if (rc.name == rel_type)
                return rc.source_label;
        return {};
    };

    switch (q_.templ) {
        case QueryTemplate::node_count: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(p.at("source_label"))});
            }
            if (stage_ == 2) {
                seed_sources(p.at("source_label"));
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            long long count = 0;
            for (const auto& k : source_keys_)
                if (has_outgoing_label(k, p.at("target_label")))
                    ++count;
            return final_records(json::array({{{"count", count}}}));
        }

        case QueryTemplate::relationship_count: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(rel_source(p.at("rel_type_name")))});
            }
            if (stage_ == 2) {
                seed_sources(source_label_);
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            long long total = 0;
            for (const auto& k : source_keys_)
                total += outgoing_count(k, p.at("rel_type_name"));
            return final_records(json::array({{{"count", total}}}));
        }

        case QueryTemplate::node_with_most_relationships: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(p.at("source_node_label"))});
            }
            if (stage_ == 2) {
                seed_sources(p.at("source_node_label"));
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            long long best = 0;
            std::string best_key;
            for (const auto& k : source_keys_) {
                long long count = outgoing_count(k, p.at("rel_type_name"));
                if (count > best || (count == best && (best_key.empty() || k < best_key))) {
                    best = count;
                    best_key = k;
                }
            }
            return final_records(
                json::array({{{"node_key", best_key}, {"rel_count", best}}}));
        }

        case QueryTemplate::node_by_property: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({make("get_node_by_property",
                                 {{"label", p.at("node_label")},
                                  {"property_name", p.at("prop_name")},
                                  {"property_value",
                                   q_.value_params.at("prop_value").to_json()}})});
            }
            std::set<std::string> keys;
            for (const auto& node : lookups_[p.at("node_label")])
                keys.insert(node.at("key").get<std::string>());
            return final_records(key_records(keys, "node_key"));
        }

        case QueryTemplate::relationship_by_property: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(rel_source(p.at("rel_type_name")))});
            }
            if (stage_ == 2) {
                seed_sources(source_label_);
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            std::set<std::pair<std::string, std::string>> pairs;
            const auto& want = q_.value_params.at("prop_value");
            for (const auto& k : source_keys_) {
                for (const auto& entry : neighbors_[k]) {
                    if (entry.at("direction") != "outgoing" ||
                        entry.at("relationship_type") != p.at("rel_type_name"))
                        continue;
                    const auto& rel_props = entry.at("relationship_properties");
                    auto it = rel_props.find(p.at("prop_name"));
                    if (it != rel_props.end() && value_equals(*it, want))
                        pairs.insert({k, entry.at("neighbor").at("key").get<std::string>()});
                }
            }
            return final_records(pair_records(pairs, "source_key", "target_key"));
        }

        case QueryTemplate::path_finding: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(p.at("source_label"))});
            }
            if (stage_ == 2) {
                seed_sources(p.at("source_label"));
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            if (stage_ == 3) {
                std::set<std::string> all_mids;
                for (const auto& k : source_keys_) {
                    std::set<std::string> mids;
                    for (const auto& entry : neighbors_[k])
                        if (entry.at("direction") == "outgoing" &&
                            entry.at("neighbor_label") == p.at("middle_label"))
                            mids.insert(entry.at("neighbor").at("key").get<std::string>());
                    mids_of_[k] = {mids.begin(), mids.end()};
                    all_mids.insert(mids.begin(), mids.end());
                }
                stage_ = 4;
                auto calls = missing_neighbor_fetches(all_mids);
                if (!calls.empty())
                    return act(calls);
            }
            std::set<std::pair<std::string, std::string>> pairs;
            for (const auto& [src, mids] : mids_of_)
                for (const auto& mid : mids)
                    for (const auto& entry : neighbors_[mid])
                        if (entry.at("direction") == "outgoing" &&
                            entry.at("neighbor_label") == p.at("target_label"))
                            pairs.insert(
                                {src, entry.at("neighbor").at("key").get<std::string>()});
            return final_records(
                pair_records(pairs, "source_node_key", "target_node_key"));
        }

        case QueryTemplate::variable_hop_path: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(p.at("source_label"))});
            }
            if (stage_ == 2) {
                seed_sources(p.at("source_label"));
                for (const auto& k : source_keys_) {
                    frontier_[k] = {k};
                    reached_[k] = {};
                }
                stage_ = 3;
            }
            if (stage_ == 3) {
                std::vector<ToolCall> calls;
                if (!bfs_advance(q_.hop_bound, calls))
                    return act(calls);
                std::set<std::string> candidates;
                for (const auto& [src, set] : reached_)
                    for (const auto& b : set)
                        if (label_of_[b] == p.at("target_label"))
                            candidates.insert(b);
                stage_ = 4;
                auto fetch = missing_neighbor_fetches(candidates);
                if (!fetch.empty())
                    return act(fetch);
            }
            std::set<std::pair<std::string, std::string>> pairs;
            for (const auto& [src, set] : reached_)
                for (const auto& b : set)
                    if (label_of_[b] == p.at("target_label") &&
                        outgoing_count(b, "") >= 1)
                        pairs.insert({src, b});
            return final_records(
                pair_records(pairs, "source_node_key", "target_node_key"));
        }

        case QueryTemplate::path_from_specific_node: {
            if (stage_ == 1) {
                stage_ = 2;
                std::vector<ToolCall> probes;
                for (const auto& nc : schema_.node_classes)
                    probes.push_back(
                        make("get_node_by_property", {{"label", nc.label},
                                                      {"property_name", "key"},
                                                      {"property_value",
                                                       p.at("source_key")}}));
                return act(probes);
            }
            if (stage_ == 2) {
                for (const auto& [label, nodes] : lookups_)
                    if (!nodes.empty())
                        source_label_ = label;
                const auto& src = p.at("source_key");
                label_of_[src] = source_label_;
                frontier_[src] = {src};
                reached_[src] = {};
                stage_ = 3;
            }
            std::vector<ToolCall> calls;
            if (!bfs_advance(q_.hop_bound, calls))
                return act(calls);
            std::set<std::string> targets;
            for (const auto& b : reached_[p.at("source_key")])
                if (label_of_[b] == p.at("target_label"))
                    targets.insert(b);
            return final_records(key_records(targets, "target_node_key"));
        }

        case QueryTemplate::remote_node_property: {
            if (stage_ == 1) {
                const auto& src = p.at("source_key");
                source_label_ = p.at("source_label");
                label_of_[src] = source_label_;
                frontier_[src] = {src};
                reached_[src] = {};
                stage_ = 2;
            }
            std::vector<ToolCall> calls;
            if (!bfs_advance(q_.hop_bound, calls))
                return act(calls);
            const auto& src = p.at("source_key");
            auto direct = outgoing_keys(src);
            std::string chosen;
            for (const auto& b : reached_[src]) {
                if (direct.count(b) || label_of_[b] != p.at("target_label"))
                    continue;
                if (!props_of_.count(b) || !props_of_[b].contains(p.at("prop_name")))
                    continue;
                if (chosen.empty() || b < chosen)
                    chosen = b;
            }
            json value = chosen.empty() ? json() : props_of_[chosen].at(p.at("prop_name"));
            return final_records(json::array({{{"value", value}}}));
        }

        case QueryTemplate::compositional_intersection: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(p.at("source_label"))});
            }
            if (stage_ == 2) {
                seed_sources(p.at("source_label"));
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            std::set<std::string> hits;
            for (const auto& k : source_keys_)
                if (has_outgoing_label(k, p.at("target1_label")) &&
                    has_outgoing_label(k, p.at("target2_label")))
                    hits.insert(k);
            return final_records(key_records(hits, "node_key"));
        }

        case QueryTemplate::negation_with_connection: {
            if (stage_ == 1) {
                stage_ = 2;
                return act({keys_call(p.at("source_label"))});
            }
            if (stage_ == 2) {
                seed_sources(p.at("source_label"));
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            std::set<std::string> hits;
            for (const auto& k : source_keys_)
                if (has_outgoing_label(k, p.at("positive_target_label")) &&
                    !has_outgoing_label(k, p.at("negative_target_label")))
                    hits.insert(k);
            return final_records(key_records(hits, "node_key"));
        }

        case QueryTemplate::negation_on_rel_property: {
            if (stage_ == 1) {
                stage_ = 2;
                source_label_ = p.at("source_label");
                return act({make("get_node_by_property",
                                 {{"label", p.at("source_label")},
                                  {"property_name", p.at("source_prop_name")},
                                  {"property_value",
                                   q_.value_params.at("source_prop_value").to_json()}})});
            }
            if (stage_ == 2) {
                source_keys_.clear();
                for (const auto& node : lookups_[p.at("source_label")])
                    source_keys_.push_back(node.at("key").get<std::string>());
                stage_ = 3;
                auto calls = fetch_sources();
                if (!calls.empty())
                    return act(calls);
            }
            std::set<std::string> hits;
            const auto& excluded = q_.value_params.at("val2");
            for (const auto& k : source_keys_) {
                for (const auto& entry : neighbors_[k]) {
                    if (entry.at("direction") != "outgoing" ||
                        entry.at("relationship_type") != p.at("rel_type_name") ||
                        entry.at("neighbor_label") != p.at("target_label"))
                        continue;
                    const auto& rel_props = entry.at("relationship_properties");
                    auto it = rel_props.find(p.at("prop_name"));
                    if (it != rel_props.end() && !value_equals(*it, excluded)) {
                        hits.insert(k);
                        break;
                    }
                }
            }
            return final_records(key_records(hits, "node_key"));
        }
    }
    return final_text("[]");
}

MazeScriptedAgent::MazeScriptedAgent(std::string start_key, std::string goal_key)
    : start_(std::move(start_key)), goal_(std::move(goal_key)) {}

ToolCall MazeScriptedAgent::make(const std::string& name, nlohmann::json args) {
    return {"m" + std::to_string(id_++), name, std::move(args)};
}

BackendTurn MazeScriptedAgent::next_turn(const Conversation& conversation) {
    if (awaiting_path_ && !conversation.last_results.empty()) {
        const auto& result = conversation.last_results.front();
        auto payload = result_payload(result);
        std::vector<std::string> path = stack_;
        if (!result.is_error && payload.is_object() && payload.contains("path")) {
            path.clear();
            for (const auto& cell : payload.at("path"))
                path.push_back(cell.get<std::string>());
        }
        return final_text(json{{"path", path}}.dump());
    }
    if (!pending_cell_.empty() && !conversation.last_results.empty()) {
        const auto& result = conversation.last_results.front();
        auto payload = result_payload(result);
        std::vector<std::pair<double, std::string>> options;
        if (!result.is_error && payload.is_object())
            for (const auto& nb : payload.at("neighbors"))
                options.emplace_back(nb.at("euclidean_distance").get<double>(),
                                     nb.at("key").get<std::string>());
        std::sort(options.begin(), options.end());
        options_[pending_cell_] = std::move(options);
        pending_cell_.clear();
    }

    if (stage_ == 0) {
        stage_ = 1;
        stack_ = {start_};
        visited_ = {start_};
        return {"", {make("think",
                          {{"thought",
                            "Exploring the maze from cell " + start_ + " toward cell " +
                                goal_ +
                                ": repeatedly take the unvisited traversable "
                                "neighbor closest to the goal and backtrack at "
                                "dead ends, then read the cleaned path from "
                                "get_connected_path."}})},
                json()};
    }

    while (!stack_.empty()) {
        const std::string current = stack_.back();
        if (current == goal_) {
            if (!options_.count(goal_)) {
                pending_cell_ = goal_;
                return {"", {make("get_possible_next_cells", {{"node_id", goal_}})},
                        json()};
            }
            awaiting_path_ = true;
            return {"", {make("get_connected_path", json::object())}, json()};
        }
        if (!options_.count(current)) {
            pending_cell_ = current;
            return {"", {make("get_possible_next_cells", {{"node_id", current}})},
                    json()};
        }
        std::string next;
        for (const auto& [dist, key] : options_[current])
            if (!visited_.count(key)) {
                next = key;
                break;
            }
        if (next.empty()) {
            stack_.pop_back();
            continue;
        }
        stack_.push_back(next);
        visited_.insert(next);
    }
    return final_text(json{{"path", json::array()}}.dump());
}

}  // namespace graphbench
