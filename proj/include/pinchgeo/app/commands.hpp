#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pinchgeo/app/manifold_file.hpp"
#include "pinchgeo/app/report_json.hpp"

namespace pinchgeo::app {

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Command-line values that replace the file's global options when set.
struct AnalyzeOverrides {
    std::optional<double> step;
    std::optional<std::uint64_t> seed;
    std::optional<int> budget;
};

EntryAnalysis analyze_entry(const ManifoldEntry& entry, const FileOptions& options);

/// Entries run concurrently; reports keep the input order.
nlohmann::json analyze(const ManifoldFile& file, const AnalyzeOverrides& overrides = {});

struct SweepOptions {
    std::string family;  ///< "clifford" or "cylinder"
    int n = 3;
    std::vector<double> values;
};

/// Evenly spaced grid from min to max inclusive; steps == 1 gives {min}.
std::vector<double> param_grid(double min, double max, int steps);

/// Columns, in order:
///   family,n,param,S,H,lambda_M,mu_M,space_form_margin,alpha_margin,scalar_pinching
/// Reals are printed with 12 significant digits.
std::string sweep_csv(const SweepOptions& options);

inline constexpr const char* kSweepHeader =
    "family,n,param,S,H,lambda_M,mu_M,space_form_margin,alpha_margin,scalar_pinching";

struct VerifyOptions {
    /// Empty runs every suite.
    std::vector<std::string> suites;
    /// Unset uses each suite's default trial count.
    std::optional<int> trials;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    double scale = 1.0;
};

struct VerifyOutcome {
    nlohmann::json document;
    bool passed = false;
};

VerifyOutcome verify(const VerifyOptions& options);

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 input or numeric failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pinchgeo::app
