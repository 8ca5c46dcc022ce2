// SPDX-License-Identifier: Apache-2.0
#include "graphbench/evaluation.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

namespace graphbench {

namespace {

using nlohmann::json;
using CanonicalRecord = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return s.substr(begin, end - begin);
}

// A candidate counts as an answer when it is an object or an array of
// objects (an empty array is a deliberate empty prediction).
std::optional<std::vector<json>> as_records(const json& j) {
    if (j.is_object())
        return std::vector<json>{j};
    if (!j.is_array())
        return std::nullopt;
    std::vector<json> out;
    for (const auto& item : j) {
        if (!item.is_object())
            return std::nullopt;
        out.push_back(item);
    }
    return out;
}

std::optional<std::vector<json>> try_parse(const std::string& text) {
    try {
        return as_records(json::parse(text));
    } catch (const json::parse_error&) {
        return std::nullopt;
    }
}

std::vector<std::string> fenced_blocks(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while ((pos = text.find("```", pos)) != std::string::npos) {
        std::size_t body = pos + 3;
        while (body < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[body])))
            ++body;  // language tag
        auto close = text.find("```", body);
        if (close == std::string::npos)
            break;
        out.push_back(text.substr(body, close - body));
        pos = close + 3;
    }
    return out;
}

// Balanced bracket substring starting at `start`, honoring JSON strings.
std::optional<std::string> balanced_from(const std::string& text, std::size_t start) {
    const char open = text[start];
    const char close = open == '[' ? ']' : '}';
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (escaped)
                escaped = false;
            else if (c == '\\')
                escaped = true;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == open) {
            ++depth;
        } else if (c == close) {
            if (--depth == 0)
                return text.substr(start, i - start + 1);
        }
    }
    return std::nullopt;
}

ExtractedAnswer finish(const std::vector<json>& raw, std::string method,
                       const std::vector<std::string>& fields) {
    ExtractedAnswer out;
    out.method = std::move(method);
    for (const auto& rec : raw) {
        json kept = json::object();
        for (const auto& f : fields)
            if (rec.contains(f))
                kept[f] = rec.at(f);
        if (kept.size() != rec.size())
            out.extras_dropped = true;
        if (!kept.empty())
            out.records.push_back(std::move(kept));
    }
    return out;
}

CanonicalRecord canonical_record(const json& rec) {
    CanonicalRecord out;
    for (const auto& [key, value] : rec.items())
        out[key] = canonical_value_text(value);
    return out;
}

CanonicalRecord canonical_gold(const AnswerRecord& rec) {
    CanonicalRecord out;
    for (const auto& [key, value] : rec)
        out[key] = value.canonical();
    return out;
}

int intersection_size(const std::set<CanonicalRecord>& a,
                      const std::set<CanonicalRecord>& b) {
    int n = 0;
    for (const auto& r : a)
        n += b.count(r);
    return n;
}

int difference_size(const std::set<CanonicalRecord>& a,
                    const std::set<CanonicalRecord>& b) {
    int n = 0;
    for (const auto& r : a)
        n += !b.count(r);
    return n;
}

}  // namespace

ExtractedAnswer extract_answer(const std::string& final_text,
                               const std::vector<std::string>& schema_fields,
                               const FallbackExtractor* fallback) {
    if (auto records = try_parse(trim(final_text)))
        return finish(*records, "direct-json", schema_fields);
    for (const auto& block : fenced_blocks(final_text))
        if (auto records = try_parse(trim(block)))
            return finish(*records, "fenced-json", schema_fields);
    for (std::size_t i = 0; i < final_text.size(); ++i) {
        if (final_text[i] != '[' && final_text[i] != '{')
            continue;
        auto sub = balanced_from(final_text, i);
        if (!sub)
            continue;
        if (auto records = try_parse(*sub))
            return finish(*records, "embedded-json", schema_fields);
    }
    if (fallback != nullptr && *fallback)
        if (auto answer = (*fallback)(final_text, schema_fields))
            if (auto records = as_records(*answer))
                return finish(*records, "llm-fallback", schema_fields);
    return {};
}

std::string canonical_value_text(const json& value) {
    if (value.is_number())
        return PropertyValue(value.get<double>()).canonical();
    if (value.is_string()) {
        auto text = trim(value.get<std::string>());
        if (auto number = parse_number(text))
            return PropertyValue(*number).canonical();
        return text;
    }
    if (value.is_boolean())
        return value.get<bool>() ? "true" : "false";
    return value.dump();
}

QuestionScore score(const ExtractedAnswer& extracted, const GoldAnswer& gold) {
    std::set<CanonicalRecord> pred;
    for (const auto& rec : extracted.records)
        pred.insert(canonical_record(rec));
    std::set<CanonicalRecord> want;
    for (const auto& rec : gold.records)
        want.insert(canonical_gold(rec));

    QuestionScore result;
    if (gold.mode == ComparisonMode::exact_set) {
        const int inter = intersection_size(pred, want);
        result.precision = pred.empty() ? 0.0 : inter / double(pred.size());
        result.recall = want.empty() ? 0.0 : inter / double(want.size());
        result.f1 = result.precision + result.recall == 0.0
                        ? 0.0
                        : 2.0 * result.precision * result.recall /
                              (result.precision + result.recall);
        result.correct = pred == want;
        result.false_positives = difference_size(pred, want);
        return result;
    }

    // Membership modes expect one distinct record that matches an
    // admissible gold record; all-or-nothing metrics.
    result.correct = pred.size() == 1 && want.count(*pred.begin()) == 1;
    if (result.correct) {
        result.precision = result.recall = result.f1 = 1.0;
    } else {
        result.false_positives = difference_size(pred, want);
    }
    return result;
}

Report aggregate(const std::vector<ScoredQuestion>& scores) {
    if (scores.empty())
        throw std::invalid_argument("aggregate: no scores to aggregate");

    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, std::vector<const ScoredQuestion*>>
        groups;
    for (const auto& s : scores) {
        auto key = std::make_pair(s.model, s.setting);
        if (!groups.count(key))
            order.push_back(key);
        groups[key].push_back(&s);
    }

    Report report;
    for (const auto& key : order) {
        const auto& members = groups.at(key);
        ReportRow row;
        row.model = key.first;
        row.setting = key.second;
        row.total = static_cast<int>(members.size());
        for (const auto* s : members) {
            row.correct += s->score.correct;
            row.precision += s->score.precision;
            row.recall += s->score.recall;
            row.f1 += s->score.f1;
            row.false_positives += s->score.false_positives;
            row.tool_calls += s->score.tool_calls;
            row.inference_time_mean += s->score.inference_time;
            auto& cell = row.categories[s->category];
            cell.first += s->score.correct;
            cell.second += 1;
        }
        row.accuracy = 100.0 * row.correct / row.total;
        row.precision /= row.total;
        row.recall /= row.total;
        row.f1 /= row.total;
        row.tool_calls_mean = double(row.tool_calls) / row.total;
        row.inference_time_mean /= row.total;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_percent(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", percent);
    return buf;
}

nlohmann::json Report::to_json() const {
    json out = json::array();
    for (const auto& row : rows) {
        json categories = json::object();
        for (const auto& [name, cell] : row.categories)
            categories[name] = {{"correct", cell.first}, {"total", cell.second}};
        out.push_back({{"model", row.model},
                       {"setting", row.setting},
                       {"total", row.total},
                       {"correct", row.correct},
                       {"accuracy", row.accuracy},
                       {"precision", row.precision},
                       {"recall", row.recall},
                       {"f1", row.f1},
                       {"false_positives", row.false_positives},
                       {"tool_calls", row.tool_calls},
                       {"tool_calls_mean", row.tool_calls_mean},
                       {"inference_time_mean", row.inference_time_mean},
                       {"categories", std::move(categories)}});
    }
    return out;
}

std::string Report::to_csv() const {
    std::string out =
        "model,setting,total,correct,accuracy,precision,recall,f1,"
        "false_positives,tool_calls,tool_calls_mean,inference_time_mean\n";
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%s,%.4f,%.4f,%.4f,%lld,%lld,%.2f,%.2f\n",
                      row.total, row.correct, format_percent(row.accuracy).c_str(),
                      row.precision, row.recall, row.f1, row.false_positives,
                      row.tool_calls, row.tool_calls_mean, row.inference_time_mean);
        out += row.model + "," + row.setting + "," + buf;
    }
    return out;
}

std::string Report::category_csv() const {
    std::set<std::string> categories;
    for (const auto& row : rows)
        for (const auto& [name, cell] : row.categories)
            categories.insert(name);

    std::string out = "category";
    for (const auto& row : rows)
        out += "," + row.model + "/" + row.setting;
    out += "\n";
    for (const auto& category : categories) {
        out += category;
        for (const auto& row : rows) {
            auto it = row.categories.find(category);
            out += "," + std::to_string(it == row.categories.end() ? 0 : it->second.first);
        }
        out += "\n";
    }
    out += "total";
    for (const auto& row : rows)
        out += "," + std::to_string(row.correct);
    out += "\n";
    return out;
}

}  // namespace graphbench
