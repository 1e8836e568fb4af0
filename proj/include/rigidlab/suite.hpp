#pragma once

#include <iosfwd>

#include "rigidlab/verify.hpp"

namespace rigidlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "rigidlab/1";

namespace verify {

struct SuiteOptions {
    std::uint64_t seed = 42;
    int exhaustive_limit = 16;  // max ground size for exhaustive subset compares
    long bound = kDefaultBound;
};

/// Runs a manifest: one check per line, `check_name key=value ...`, '#'
/// comments. Per-check randomness is derived from the root seed by line
/// counter unless a line carries its own seed=. Throws ParseError on
/// malformed manifests; check preconditions become failed reports.
std::vector<CheckReport> run_suite(std::istream& manifest, const SuiteOptions& opts);

/// Graph mini-language: K5, K3,3, paper, path6, star5, cone(K6,7;2),
/// file:PATH.
Graph parse_graph_spec(const std::string& spec);

/// n distinct rationals with numerators in [-num_bound, num_bound] and
/// denominators in [1, den_bound].
Params random_rational_params(int n, std::uint64_t seed, long num_bound, long den_bound);

nlohmann::ordered_json report_envelope(const std::vector<CheckReport>& checks,
                                       const std::string& command, std::uint64_t seed);

} // namespace verify
} // namespace rigidlab
