// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphbench/benchmark.hpp"

namespace graphbench {

// Answer records recovered from a final message, filtered to the output
// schema's field names. method: direct-json | fenced-json | embedded-json |
// llm-fallback | failed.
struct ExtractedAnswer {
    std::vector<nlohmann::json> records;
    std::string method = "failed";
    bool extras_dropped = false;
};

// Optional last-resort extractor (e.g. an LLM endpoint); returns the answer
// records as a JSON array, or nullopt when it too fails.
using FallbackExtractor = std::function<std::optional<nlohmann::json>(
    const std::string& final_text, const std::vector<std::string>& fields)>;

// Three-stage extraction: whole-text JSON, then fenced blocks and
// bracket-balanced substrings, then the optional fallback. Never throws;
// failure is the "failed" method with no records.
ExtractedAnswer extract_answer(const std::string& final_text,
                               const std::vector<std::string>& schema_fields,
                               const FallbackExtractor* fallback = nullptr);

struct QuestionScore {
    bool correct = false;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    int false_positives = 0;
    int tool_calls = 0;          // copied from the transcript by the caller
    double inference_time = 0.0; // seconds, copied by the caller
};

// Canonical comparison form: trimmed, numeric strings normalized so that
// "3", 3 and 3.0 coincide; case preserved.
std::string canonical_value_text(const nlohmann::json& value);

QuestionScore score(const ExtractedAnswer& extracted, const GoldAnswer& gold);

// One scored question, tagged for grouping and the category matrix.
struct ScoredQuestion {
    std::string model;
    std::string setting;  // e.g. "tools" or "full-context"
    std::string template_name;
    std::string category;
    QuestionScore score;
};

struct ReportRow {
    std::string model;
    std::string setting;
    int total = 0;
    int correct = 0;
    double accuracy = 0.0;  // percent
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    long long false_positives = 0;  // summed
    long long tool_calls = 0;       // summed
    double tool_calls_mean = 0.0;
    double inference_time_mean = 0.0;
    // category -> (correct, total)
    std::map<std::string, std::pair<int, int>> categories;
};

struct Report {
    std::vector<ReportRow> rows;  // one per (model, setting), insertion order

    nlohmann::json to_json() const;
    std::string to_csv() const;       // one line per model/setting
    std::string category_csv() const; // categories x model/setting correct counts
};

// Groups by (model, setting); macro-averages P/R/F1, sums FP and tool
// calls. Throws std::invalid_argument on empty input.
Report aggregate(const std::vector<ScoredQuestion>& scores);

// Two-decimal percent text, e.g. 15.00.
std::string format_percent(double percent);

}  // namespace graphbench
