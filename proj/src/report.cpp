#include "spinfactor/report.hpp"

#include <algorithm>
#include <sstream>

namespace spinfactor {

namespace {

constexpr std::size_t kMaxResidual = 4000;

std::string clip(std::string s) {
    if (s.size() > kMaxResidual) {
        s.resize(kMaxResidual);
        s += " ...";
    }
    return s;
}

std::vector<const CheckResult*> sorted(const std::vector<CheckResult>& checks) {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks) out.push_back(&c);
    std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    return out;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::skipped:
            return "skipped";
    }
    return "?";
}

nlohmann::json CheckResult::to_json() const {
    nlohmann::json hyp = nlohmann::json::array();
    for (const auto& h : hypotheses) hyp.push_back({{"name", h.name}, {"status", spinfactor::to_string(h.status)}});
    nlohmann::json j{{"check_id", id}, {"hypotheses", hyp}, {"status", spinfactor::to_string(status)},
                     {"n", n}, {"parameters", parameters}};
    if (!residual.empty()) j["residual"] = residual;
    if (!note.empty()) j["note"] = note;
    return j;
}

std::string residual_text(const Scalar& s) {
    return s.is_zero() ? std::string() : clip(s.to_string());
}

std::string residual_text(const Element& e) {
    return e.is_zero() ? std::string() : clip(e.to_string());
}

CheckResult zero_check(std::string id, const Scalar& residual) {
    CheckResult r;
    r.id = std::move(id);
    r.residual = residual_text(residual);
    r.status = residual.is_zero() ? Status::pass : Status::fail;
    return r;
}

CheckResult zero_check(std::string id, const Element& residual) {
    CheckResult r;
    r.id = std::move(id);
    r.residual = residual_text(residual);
    r.status = residual.is_zero() ? Status::pass : Status::fail;
    return r;
}

CheckResult timed(const std::function<CheckResult()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = fn();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool Report::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

nlohmann::json Report::to_json(bool with_metadata) const {
    nlohmann::json results = nlohmann::json::array();
    nlohmann::json timings = nlohmann::json::object();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto* c : sorted(checks)) {
        results.push_back(c->to_json());
        timings[c->id] = c->elapsed_ms;
        passed += c->status == Status::pass;
        failed += c->status == Status::fail;
        skipped += c->status == Status::skipped;
    }
    nlohmann::json j{{"command", command},
                     {"status", all_passed() ? "pass" : "fail"},
                     {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
                     {"results", results}};
    if (!data.empty()) j["data"] = data;
    if (with_metadata) j["metadata"] = {{"elapsed_ms", timings}};
    return j;
}

std::string Report::to_text() const {
    std::ostringstream out;
    const auto order = sorted(checks);
    std::size_t failed = 0;
    for (const auto* c : order) failed += c->status == Status::fail;
    out << command << ": " << (failed == 0 ? "PASS" : "FAIL") << " (" << order.size() << " checks, " << failed
        << " failed)\n";
    auto line = [&](const CheckResult& c) {
        out << "  [" << to_string(c.status) << "] " << c.id;
        if (c.n != 0) out << " (n=" << c.n << ")";
        for (const auto& h : c.hypotheses) out << " {" << h.name << ": " << to_string(h.status) << "}";
        if (!c.note.empty()) out << " -- " << c.note;
        out << '\n';
        if (!c.residual.empty()) out << "      residual: " << c.residual << '\n';
    };
    if (failed > 0) {
        out << "failures:\n";
        for (const auto* c : order) {
            if (c->status == Status::fail) line(*c);
        }
        out << "all checks:\n";
    }
    for (const auto* c : order) line(*c);
    if (!data.empty()) out << data.dump(2) << '\n';
    return out.str();
}

}  // namespace spinfactor
