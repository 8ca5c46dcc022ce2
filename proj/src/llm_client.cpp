// SPDX-License-Identifier: Apache-2.0
#include "graphbench/llm_client.hpp"

#include <chrono>
#include <thread>
#include <utility>

#include "httplib.h"

namespace graphbench {

namespace {

using nlohmann::json;

std::string snippet(const std::string& body) {
    constexpr std::size_t kMax = 200;
    if (body.size() <= kMax)
        return body;
    return body.substr(0, kMax) + "...";
}

bool transient_status(int status) { return status >= 500 || status == 429; }

}  // namespace

LlmBackend::LlmBackend(LlmConfig config) : config_(std::move(config)) {}

json LlmBackend::post_chat(const json& body) {
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.timeout_seconds);
    client.set_read_timeout(config_.timeout_seconds);
    client.set_write_timeout(config_.timeout_seconds);

    httplib::Headers headers;
    if (!config_.api_key.empty())
        headers.emplace("Authorization", "Bearer " + config_.api_key);

    const std::string payload = body.dump();
    std::string last_failure;
    int delay_ms = config_.backoff_ms;
    for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
        auto res = client.Post(config_.chat_path, headers, payload, "application/json");
        if (!res) {
            last_failure = "transport error: " + httplib::to_string(res.error());
        } else if (res->status >= 200 && res->status < 300) {
            try {
                return json::parse(res->body);
            } catch (const json::parse_error& e) {
                throw BackendError(std::string("malformed response body: ") + e.what());
            }
        } else if (transient_status(res->status)) {
            last_failure = "HTTP " + std::to_string(res->status) + ": " + snippet(res->body);
        } else {
            throw BackendError("endpoint rejected request: HTTP " +
                               std::to_string(res->status) + ": " + snippet(res->body));
        }
        if (attempt < config_.max_attempts) {
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
    }
    throw BackendError("request failed after " + std::to_string(config_.max_attempts) +
                       " attempts; last failure: " + last_failure);
}

BackendTurn LlmBackend::next_turn(const Conversation& conversation) {
    json body = {{"model", config_.model},
                 {"messages", conversation.messages},
                 {"temperature", config_.temperature}};
    if (conversation.tools != nullptr) {
        body["tools"] = tools_wire_json(*conversation.tools);
        body["tool_choice"] = "auto";
    }

    json response = post_chat(body);

    const json* message = nullptr;
    if (response.contains("choices") && response["choices"].is_array() &&
        !response["choices"].empty())
        message = &response["choices"][0]["message"];
    if (message == nullptr || !message->is_object())
        throw BackendError("response has no choices[0].message: " +
                           snippet(response.dump()));

    BackendTurn turn;
    if (message->contains("content") && (*message)["content"].is_string())
        turn.message = (*message)["content"].get<std::string>();
    if (response.contains("usage") && response["usage"].is_object())
        turn.usage = response["usage"];

    if (message->contains("tool_calls") && (*message)["tool_calls"].is_array()) {
        int index = 0;
        for (const auto& wire : (*message)["tool_calls"]) {
            ToolCall call;
            call.call_id = wire.value("id", "call_" + std::to_string(index));
            ++index;
            const json function = wire.value("function", json::object());
            call.name = function.value("name", "");
            const json args = function.value("arguments", json());
            if (args.is_object()) {
                call.arguments = args;
            } else if (args.is_string()) {
                try {
                    call.arguments = json::parse(args.get<std::string>());
                } catch (const json::parse_error&) {
                    // Keep the unparseable text; dispatch reports a
                    // recoverable error the model can react to.
                    call.arguments = args;
                }
            } else {
                call.arguments = args;
            }
            turn.tool_calls.push_back(std::move(call));
        }
    }
    return turn;
}

}  // namespace graphbench
