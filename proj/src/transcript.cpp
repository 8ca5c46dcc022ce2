// SPDX-License-Identifier: Apache-2.0
#include "graphbench/transcript.hpp"

#include <fstream>
#include <stdexcept>

namespace graphbench {

nlohmann::json TranscriptEvent::to_json() const {
    return {{"kind", kind}, {"data", data}};
}

TranscriptEvent TranscriptEvent::from_json(const nlohmann::json& j) {
    return {j.at("kind").get<std::string>(), j.at("data")};
}

int Transcript::tool_call_count() const {
    int count = 0;
    for (const auto& e : events)
        if (e.kind == "tool_call")
            ++count;
    return count;
}

int Transcript::model_turn_count() const {
    int count = 0;
    for (const auto& e : events)
        if (e.kind == "assistant")
            ++count;
    return count;
}

double Transcript::model_seconds() const {
    double total = 0.0;
    for (const auto& e : events)
        if (e.kind == "assistant" && e.data.contains("seconds"))
            total += e.data.at("seconds").get<double>();
    return total;
}

std::vector<TranscriptEvent> Transcript::events_of(const std::string& kind) const {
    std::vector<TranscriptEvent> out;
    for (const auto& e : events)
        if (e.kind == kind)
            out.push_back(e);
    return out;
}

nlohmann::json Transcript::to_json() const {
    nlohmann::json events_json = nlohmann::json::array();
    for (const auto& e : events)
        events_json.push_back(e.to_json());
    return {{"status", status},
            {"final_answer", final_answer},
            {"wall_seconds", wall_seconds},
            {"events", std::move(events_json)}};
}

Transcript Transcript::from_json(const nlohmann::json& j) {
    Transcript t;
    t.status = j.at("status").get<std::string>();
    t.final_answer = j.at("final_answer").get<std::string>();
    t.wall_seconds = j.at("wall_seconds").get<double>();
    for (const auto& e : j.at("events"))
        t.events.push_back(TranscriptEvent::from_json(e));
    return t;
}

void Transcript::save_jsonl(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write transcript: " + path.string());
    nlohmann::json meta = {{"kind", "meta"},
                           {"status", status},
                           {"final_answer", final_answer},
                           {"wall_seconds", wall_seconds}};
    out << meta.dump() << '\n';
    for (const auto& e : events)
        out << e.to_json().dump() << '\n';
}

Transcript Transcript::load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read transcript: " + path.string());
    Transcript t;
    std::string line;
    bool have_meta = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto j = nlohmann::json::parse(line);
        if (!have_meta) {
            if (j.at("kind") != "meta")
                throw std::runtime_error("transcript must start with a meta line");
            t.status = j.at("status").get<std::string>();
            t.final_answer = j.at("final_answer").get<std::string>();
            t.wall_seconds = j.at("wall_seconds").get<double>();
            have_meta = true;
            continue;
        }
        t.events.push_back(TranscriptEvent::from_json(j));
    }
    if (!have_meta)
        throw std::runtime_error("empty transcript file: " + path.string());
    return t;
}

}  // namespace graphbench
