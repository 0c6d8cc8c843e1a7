#include "wva/report.hpp"

#include <json.hpp>

#include <sstream>

namespace wva {

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    std::size_t n = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++n;
    return n;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string report_json(const VerificationReport& r, const ReportConfig& config) {
    nlohmann::json j;
    j["campaign"] = r.campaign;
    j["config"] = nlohmann::json::object();
    for (const auto& [key, value] : config) j["config"][key] = value;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.pass && !c.witness.empty()) jc["witness"] = c.witness;
        jc["millis"] = c.millis;
        j["checks"].push_back(jc);
    }
    j["summary"] = {{"total", r.checks.size()},
                    {"passed", r.checks.size() - r.failures()},
                    {"failed", r.failures()}};
    return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r, const ReportConfig& config) {
    std::ostringstream os;
    os << "campaign: " << r.campaign << "\n";
    for (const auto& [key, value] : config) os << "config: " << key << " = " << value << "\n";
    for (const CheckResult& c : r.checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  (" << c.millis << " ms)\n";
        if (!c.pass && !c.witness.empty()) os << "      witness: " << c.witness << "\n";
    }
    os << "summary: " << (r.checks.size() - r.failures()) << "/" << r.checks.size()
       << " checks passed\n";
    return os.str();
}

}  // namespace wva
