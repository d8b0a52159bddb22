#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace invforge::cli {

inline const std::vector<std::string> kAllChecks = {"invariance", "p-relation", "sl2-relation", "phi",
                                                    "sagbi",      "parity",     "hilbert"};

enum class Format { Text, Json };

struct RunConfig {
    std::uint32_t p = 3;
    std::uint32_t n = 1;
    std::optional<std::uint32_t> max_degree;
    Format format = Format::Text;
    std::optional<std::string> output_path;
    std::vector<std::string> checks = kAllChecks;
    std::uint64_t max_q = 81;
};

struct CheckResult {
    std::string name;
    std::string paper_anchor;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool pass() const;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

/// Runs the selected checks in a fixed order. Throws invforge::Error for
/// configuration problems (bad field, unknown check, oracle budget).
Report run_verification(const RunConfig& config);

std::string report_text(const RunConfig& config, const Report& report);
nlohmann::json report_json(const RunConfig& config, const Report& report, double elapsed_ms);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invforge::cli
