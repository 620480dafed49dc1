#include "lcsk/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace lcsk {

bool RunReport::overall_pass() const {
    for (const CheckEntry& c : checks)
        if (c.applicable && !c.passed) return false;
    return true;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string render_report(const RunReport& r, ReportFormat format) {
    if (format == ReportFormat::Text) {
        std::ostringstream o;
        o << "lcsk " << r.tool_version << "\n";
        o << "input: " << r.input_name << " (" << r.input_digest << ")\n";
        o << "command: " << r.command << "\n";
        o << "bounds: deg-d " << r.deg_d << ", deg-l " << r.deg_l << "\n";
        o << "convention: " << r.convention << "\n";
        for (const CheckEntry& c : r.checks) {
            o << (c.applicable ? (c.passed ? "[PASS] " : "[FAIL] ") : "[SKIP] ") << c.name;
            if (!c.applicable) o << " (not applicable)";
            o << "\n";
            for (const std::string& line : c.lines) o << "    " << line << "\n";
        }
        o << "overall: " << (r.overall_pass() ? "PASS" : "FAIL") << "\n";
        return o.str();
    }
    nlohmann::ordered_json j;
    j["schema"] = "lcsk-report/1";
    j["tool_version"] = r.tool_version;
    j["input"] = {{"name", r.input_name}, {"digest", r.input_digest}};
    j["command"] = r.command;
    j["bounds"] = {{"deg_d", r.deg_d}, {"deg_l", r.deg_l}};
    j["convention"] = r.convention;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckEntry& c : r.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["applicable"] = c.applicable;
        e["passed"] = c.passed;
        e["notes"] = c.lines;
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.details) d[k] = v;
        e["details"] = d;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["overall_pass"] = r.overall_pass();
    return j.dump(2) + "\n";
}

int exit_status(const RunReport& r) { return r.overall_pass() ? 0 : 1; }

} // namespace lcsk
