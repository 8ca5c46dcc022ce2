// SPDX-License-Identifier: Apache-2.0
#include "graphbench/agent.hpp"

#include <chrono>
#include <utility>

namespace graphbench {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

nlohmann::json calls_to_json(const std::vector<ToolCall>& calls) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : calls)
        out.push_back(
            {{"id", c.call_id}, {"name", c.name}, {"arguments", c.arguments}});
    return out;
}

// Assistant message carrying tool calls, in chat-completions wire shape.
nlohmann::json assistant_wire_message(const BackendTurn& turn) {
    nlohmann::json wire_calls = nlohmann::json::array();
    for (const auto& c : turn.tool_calls)
        wire_calls.push_back({{"id", c.call_id},
                              {"type", "function"},
                              {"function",
                               {{"name", c.name},
                                {"arguments", c.arguments.dump()}}}});
    return {{"role", "assistant"},
            {"content", turn.message},
            {"tool_calls", std::move(wire_calls)}};
}

}  // namespace

Transcript run_episode(AgentBackend& backend, ToolRegistry* registry,
                       const EpisodeInput& input, const RunConfig& config) {
    config.validate();
    if (config.with_tools != (registry != nullptr))
        throw std::invalid_argument(
            "run_episode: registry must be present exactly when with_tools is set");

    Transcript transcript;
    auto episode_start = std::chrono::steady_clock::now();

    Conversation convo;
    if (registry != nullptr)
        convo.tools = &registry->descriptors();
    convo.messages.push_back({{"role", "system"}, {"content", input.system_prompt}});
    transcript.events.push_back({"prompt", {{"text", input.system_prompt}}});
    if (!input.question.empty()) {
        convo.messages.push_back({{"role", "user"}, {"content", input.question}});
        transcript.events.push_back({"question", {{"text", input.question}}});
    }

    transcript.status = "iteration-cap";
    for (int turn_index = 0; turn_index < config.max_iterations; ++turn_index) {
        BackendTurn turn;
        auto turn_start = std::chrono::steady_clock::now();
        try {
            turn = backend.next_turn(convo);
        } catch (const std::exception& e) {
            transcript.status = "backend-error";
            transcript.events.push_back({"error", {{"message", e.what()}}});
            break;
        }

        nlohmann::json assistant_event = {{"content", turn.message},
                                          {"tool_calls", calls_to_json(turn.tool_calls)},
                                          {"seconds", seconds_since(turn_start)}};
        if (!turn.usage.is_null())
            assistant_event["usage"] = turn.usage;
        transcript.events.push_back({"assistant", std::move(assistant_event)});

        if (turn.tool_calls.empty()) {
            transcript.final_answer = turn.message;
            transcript.status = "completed";
            transcript.events.push_back({"final_answer", {{"text", turn.message}}});
            break;
        }
        if (registry == nullptr) {
            transcript.status = "backend-error";
            transcript.events.push_back(
                {"error", {{"message", "tool call emitted in a no-tools run"}}});
            break;
        }

        convo.messages.push_back(assistant_wire_message(turn));
        convo.last_results.clear();
        for (const auto& call : turn.tool_calls) {
            auto result = registry->dispatch(call);
            transcript.events.push_back({"tool_call",
                                         {{"id", call.call_id},
                                          {"name", call.name},
                                          {"arguments", call.arguments}}});
            transcript.events.push_back({"tool_result",
                                         {{"id", result.call_id},
                                          {"content", result.content},
                                          {"is_error", result.is_error}}});
            convo.messages.push_back({{"role", "tool"},
                                      {"tool_call_id", call.call_id},
                                      {"content", result.content}});
            convo.last_results.push_back(std::move(result));
        }
    }

    transcript.wall_seconds = seconds_since(episode_start);
    return transcript;
}

ReplayBackend::ReplayBackend(const Transcript& transcript) {
    for (const auto& event : transcript.events) {
        if (event.kind != "assistant")
            continue;
        BackendTurn turn;
        turn.message = event.data.at("content").get<std::string>();
        for (const auto& c : event.data.at("tool_calls"))
            turn.tool_calls.push_back({c.at("id").get<std::string>(),
                                       c.at("name").get<std::string>(),
                                       c.at("arguments")});
        turns_.push_back(std::move(turn));
    }
}

BackendTurn ReplayBackend::next_turn(const Conversation&) {
    if (next_ >= turns_.size())
        throw BackendError("replay exhausted: no further recorded turns");
    return turns_[next_++];
}

}  // namespace graphbench
