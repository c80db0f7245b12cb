#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spinfactor/report.hpp"

namespace spinfactor {

/// Invalid command parameters.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One CLI invocation. `algebra` follows the SplitSpinConfig schema
/// {alpha, t | "S-alpha", n, gram?} with "symbolic" allowed for alpha and t.
struct RunConfig {
    std::string command;
    nlohmann::json algebra = {{"alpha", "symbolic"}, {"t", "symbolic"}, {"n", 2}};
    /// split-spin, dual-numbers or zero-delta (verify-lemmas only).
    std::string instance = "split-spin";
    std::size_t degree = 5;
    std::string basis = "B";
    bool symbolic = false;
    bool with_vectors = true;
    unsigned jobs = 1;
    std::string format = "json";
    std::string output;

    nlohmann::json to_json() const;
    /// Missing keys keep their defaults.
    static RunConfig from_json(const nlohmann::json& j);
};

const std::vector<std::string>& command_names();

/// Checks the parameters against the command. Throws UsageError.
void validate(const RunConfig& config);

/// Validates, then runs the command. Throws UsageError for bad parameters.
Report run(const RunConfig& config);

/// Report as text or JSON (timings in the metadata block).
std::string render(const Report& report, const std::string& format);

}  // namespace spinfactor
