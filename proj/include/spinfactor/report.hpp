#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfactor/algebra.hpp"

namespace spinfactor {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Hypothesis {
    std::string name;
    Status status;
};

struct CheckResult {
    std::string id;
    std::vector<Hypothesis> hypotheses;
    Status status = Status::skipped;
    std::string residual;  // empty when the residual is exactly zero
    std::size_t n = 0;
    nlohmann::json parameters = nlohmann::json::object();
    std::string note;
    double elapsed_ms = 0;

    nlohmann::json to_json() const;
};

/// Residual text for a scalar or element; "" when zero.
std::string residual_text(const Scalar& s);
std::string residual_text(const Element& e);

/// Builds a check from a residual: passes iff the residual is zero.
CheckResult zero_check(std::string id, const Scalar& residual);
CheckResult zero_check(std::string id, const Element& residual);

/// Runs `fn` and records its wall-clock time into the result.
CheckResult timed(const std::function<CheckResult()>& fn);

struct Report {
    std::string command;
    std::vector<CheckResult> checks;
    nlohmann::json data = nlohmann::json::object();

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void append(const std::vector<CheckResult>& rs) { checks.insert(checks.end(), rs.begin(), rs.end()); }
    bool all_passed() const;
    /// Results sorted by id; timings live in a separate metadata block.
    nlohmann::json to_json(bool with_metadata = true) const;
    /// Failures first, then the full list.
    std::string to_text() const;
};

}  // namespace spinfactor
