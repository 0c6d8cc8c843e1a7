// Verification reports: a named campaign with a deterministic list of
// checks, each carrying an id, a pass/fail status, an optional witness
// expression (printed form) on failure, and a wall-clock duration.  JSON and
// plain-text renderers share the same data.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wva {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // printed nonzero witness on failure, else empty
    std::int64_t millis = 0;
};

struct VerificationReport {
    std::string campaign;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
    void append(const VerificationReport& other);  // merges checks in order
};

using ReportConfig = std::map<std::string, std::string>;

// {"campaign", "config", "checks": [{"id", "status", "witness"?, "millis"}],
//  "summary": {"total", "passed", "failed"}}, pretty-printed, deterministic.
std::string report_json(const VerificationReport& r, const ReportConfig& config);
std::string report_text(const VerificationReport& r, const ReportConfig& config);

}  // namespace wva
