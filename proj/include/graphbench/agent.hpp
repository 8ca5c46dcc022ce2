// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphbench/tools.hpp"
#include "graphbench/transcript.hpp"

namespace graphbench {

// Raised by backends for unrecoverable transport or protocol failures;
// run_episode converts it into a "backend-error" transcript status.
class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    bool with_tools = true;
    int max_iterations = 30;
    std::string system_time = "2025-01-01T00:00:00Z";

    void validate() const {
        if (max_iterations < 1)
            throw std::invalid_argument("RunConfig: max_iterations must be >= 1");
    }
};

// What a backend sees each turn: the chat-completions message array built so
// far, the results of its previous turn's calls, and the available tools
// (null when running without tools).
struct Conversation {
    nlohmann::json messages = nlohmann::json::array();
    std::vector<ToolResult> last_results;
    const std::vector<ToolDescriptor>* tools = nullptr;
};

// One model response: either tool calls (continue acting) or a final text.
struct BackendTurn {
    std::string message;
    std::vector<ToolCall> tool_calls;
    nlohmann::json usage;  // token usage when the endpoint reports it
};

class AgentBackend {
public:
    virtual ~AgentBackend() = default;
    virtual BackendTurn next_turn(const Conversation& conversation) = 0;
};

struct EpisodeInput {
    std::string system_prompt;
    std::string question;  // empty -> no user message
};

// Act-observe loop: backend turn, dispatch any tool calls, feed results
// back, until a plain text turn (completed), the iteration cap, or a
// backend failure. The registry must be present exactly when with_tools.
Transcript run_episode(AgentBackend& backend, ToolRegistry* registry,
                       const EpisodeInput& input, const RunConfig& config);

// Feeds back the assistant turns of a recorded transcript, so an episode
// can be re-driven against a live registry.
class ReplayBackend : public AgentBackend {
public:
    explicit ReplayBackend(const Transcript& transcript);
    BackendTurn next_turn(const Conversation& conversation) override;

private:
    std::vector<BackendTurn> turns_;
    std::size_t next_ = 0;
};

}  // namespace graphbench
