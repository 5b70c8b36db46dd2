#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pinchgeo/frame_search.hpp"
#include "pinchgeo/inequality_oracle.hpp"
#include "pinchgeo/pinching.hpp"

namespace pinchgeo::app {

inline constexpr const char* kReportSchema = "pinchgeo.report/1";
inline constexpr const char* kVerifySchema = "pinchgeo.verify/1";

/// Violation reports list at most this many witnesses; violation_count is exact.
inline constexpr std::size_t kMaxListedViolations = 100;

/// Worst Lawson-Simons entry for one q over all sampled points.
struct StableCurrentSummary {
    StableCurrentEntry entry;
    std::size_t point = 0;
};

/// Smallest four-frame value over all sampled points.
struct FourFrameSummary {
    BrendleCheck check;
    std::size_t point = 0;
};

/// Everything `analyze` reports for one manifold entry.
struct EntryAnalysis {
    PinchingReport report;
    std::vector<SamplePoint> points;
    std::vector<StableCurrentSummary> stable_currents;
    std::optional<FourFrameSummary> four_frame;
};

nlohmann::json to_json(const EntryAnalysis& analysis);
nlohmann::json to_json(const ViolationReport& report);

}  // namespace pinchgeo::app
