// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace graphbench {

// Event kinds: "prompt", "question", "assistant", "tool_call", "tool_result",
// "final_answer", "error".
struct TranscriptEvent {
    std::string kind;
    nlohmann::json data;

    nlohmann::json to_json() const;
    static TranscriptEvent from_json(const nlohmann::json& j);
    friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

// Ordered record of one episode. Derived figures (tool calls, model time)
// are recomputed from events, never trusted from backends.
struct Transcript {
    std::vector<TranscriptEvent> events;
    std::string status = "completed";  // completed | iteration-cap | backend-error
    std::string final_answer;          // set only when status == completed
    double wall_seconds = 0.0;

    int tool_call_count() const;
    int model_turn_count() const;
    double model_seconds() const;
    std::vector<TranscriptEvent> events_of(const std::string& kind) const;

    nlohmann::json to_json() const;
    static Transcript from_json(const nlohmann::json& j);

    // One JSON object per line: a meta line followed by the events.
    void save_jsonl(const std::filesystem::path& path) const;
    static Transcript load_jsonl(const std::filesystem::path& path);
};

}  // namespace graphbench
