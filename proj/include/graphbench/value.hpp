// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

namespace graphbench {

// A property value is either text or a finite 64-bit float. Numbers order
// before text so that mixed collections sort deterministically.
class PropertyValue {
public:
    PropertyValue(const char* text) : PropertyValue(std::string(text)) {}
    PropertyValue(std::string text) : value_(std::move(text)) {
        if (std::get<1>(value_).empty())
            throw std::invalid_argument("PropertyValue: text must be non-empty");
    }
    PropertyValue(double number) : value_(number) {
        if (!std::isfinite(number))
            throw std::invalid_argument("PropertyValue: number must be finite");
    }

    bool is_text() const { return value_.index() == 1; }
    bool is_number() const { return value_.index() == 0; }
    const std::string& text() const { return std::get<1>(value_); }
    double number() const { return std::get<0>(value_); }

    friend bool operator==(const PropertyValue&, const PropertyValue&) = default;
    friend auto operator<=>(const PropertyValue& a, const PropertyValue& b) {
        return a.value_ <=> b.value_;
    }

    // Shortest round-trip text form; "3.0" and 3 both canonicalize to "3".
    std::string canonical() const {
        if (is_text())
            return text();
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), number());
        return std::string(buf, end);
    }

    nlohmann::json to_json() const {
        if (is_text())
            return text();
        return number();
    }

    static PropertyValue from_json(const nlohmann::json& j) {
        if (j.is_string())
            return PropertyValue(j.get<std::string>());
        if (j.is_number())
            return PropertyValue(j.get<double>());
        throw std::invalid_argument("PropertyValue: expected string or number");
    }

private:
    std::variant<double, std::string> value_;
};

// Full-string numeric parse; "12.5" -> 12.5, "12x" -> nullopt.
inline std::optional<double> parse_number(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(out))
        return std::nullopt;
    return out;
}

}  // namespace graphbench
