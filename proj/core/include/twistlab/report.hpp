#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<int> order;  // hbar order the check refers to, if any
};

// Pass/fail per check, plus named values a suite wants to record
// (derived signs, constants, first failing orders).
struct VerificationReport {
    std::string subject;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> values;

    VerificationReport() = default;
    explicit VerificationReport(std::string s) : subject(std::move(s)) {}

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    CheckResult& add(std::string name, bool ok, std::string detail = {}, std::optional<int> order = {}) {
        checks.push_back({std::move(name), ok, std::move(detail), order});
        return checks.back();
    }
    void record(std::string key, std::string value) { values.emplace_back(std::move(key), std::move(value)); }
    std::optional<std::string> value(const std::string& key) const {
        for (const auto& [k, v] : values)
            if (k == key) return v;
        return std::nullopt;
    }
    // Appends another report's checks under a prefix.
    void merge(const VerificationReport& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail, c.order});
        for (const auto& [k, v] : other.values) values.emplace_back(prefix + k, v);
    }
    std::optional<int> first_failing_order() const {
        std::optional<int> best;
        for (const auto& c : checks)
            if (!c.passed && c.order && (!best || *c.order < *best)) best = c.order;
        return best;
    }
};

}  // namespace twistlab
