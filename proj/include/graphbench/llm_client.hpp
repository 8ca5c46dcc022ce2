// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "graphbench/agent.hpp"

namespace graphbench {

struct LlmConfig {
    std::string base_url = "http://127.0.0.1:8000";  // scheme://host[:port]
    std::string chat_path = "/v1/chat/completions";
    std::string api_key;       // sent as a Bearer token when non-empty
    std::string model = "gpt-4o";
    double temperature = 0.0;
    int timeout_seconds = 300;
    int max_attempts = 3;      // tries for transient transport/5xx failures
    int backoff_ms = 250;      // doubled after each failed attempt
};

// Chat-completions backend. Transient transport errors, 5xx, and 429 are
// retried with exponential backoff; other HTTP errors and malformed
// response bodies raise BackendError. Tool calls whose arguments fail to
// parse as JSON are passed through as-is so the registry can answer with a
// recoverable error result.
class LlmBackend : public AgentBackend {
public:
    explicit LlmBackend(LlmConfig config);
    BackendTurn next_turn(const Conversation& conversation) override;

    const LlmConfig& config() const { return config_; }

private:
    LlmConfig config_;

    nlohmann::json post_chat(const nlohmann::json& body);
};

}  // namespace graphbench
