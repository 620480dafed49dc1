#pragma once

#include "lcsk/conformal_maps.hpp"
#include "lcsk/report.hpp"

#include <optional>
#include <string>

namespace lcsk {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
    std::optional<int> deg_d, deg_l; // flags; fall back to spec bounds, then 3
    std::optional<int> tensor;       // quotient coefficient algebra Q[t]/(t^N)
    Convention conv = Convention::PartialCommuting;
    ReportFormat format = ReportFormat::Text;
};

// Parse the spec text and dispatch one command: check, center, centroid,
// bider, commuting, current, verify-all. When a coefficient algebra is in
// play (file section or tensor flag), check/center/centroid/bider/commuting
// operate on the current algebra L (x) A; verify-all runs the full pipeline
// on L and then the current-algebra checks on L (x) A.
//
// Throws ParseError / UsageError / ConstructionError on defective input;
// axiom failures are not exceptions, they are failing report entries.
RunReport run_command(const std::string& command, const std::string& spec_text,
                      const RunOptions& opts);

} // namespace lcsk
