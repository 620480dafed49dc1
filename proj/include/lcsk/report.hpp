#pragma once

#include <map>
#include <string>
#include <vector>

namespace lcsk {

// One named check inside a run: an axiom, a solver summary, or a verifier.
// Solver summaries always pass; their value is in the lines. A check whose
// preconditions fail is marked not applicable and does not fail the run.
struct CheckEntry {
    std::string name;
    bool applicable = true;
    bool passed = false;
    std::vector<std::string> lines;            // residuals, bases, notes
    std::map<std::string, std::string> details; // key figures for machine output
};

struct RunReport {
    std::string tool_version;
    std::string input_name;
    std::string input_digest; // "fnv1a64:<16 hex>" over the raw spec text
    std::string command;
    int deg_d = 3, deg_l = 3;
    std::string convention; // "partial" | "shifted"
    std::vector<CheckEntry> checks;

    bool overall_pass() const;
};

enum class ReportFormat { Text, Machine };

// FNV-1a (64-bit) of the raw bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& data);

// Deterministic rendering; Text is line-oriented, Machine is one JSON
// document (schema documented in docs/report-schema.json).
std::string render_report(const RunReport& r, ReportFormat format);

// 0 when the report passes overall, 1 otherwise.
int exit_status(const RunReport& r);

} // namespace lcsk
