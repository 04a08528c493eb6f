#pragma once

// Verification sweeps: each suite checks a family of instances against the exact solvers and
// sorts disagreements into documented findings and unexpected ones.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdtpc/config.hpp"

namespace zdtpc {

struct KnownFinding {
    std::string id;
    std::string kind;
    std::string suite;
    std::string claim;
    std::string evidence;
};

/// Parses the shipped manifest.
std::vector<KnownFinding> known_findings();
std::vector<KnownFinding> parse_known_findings(std::string_view text);

struct Discrepancy {
    std::string instance;
    /// Finding ids raised by the instance, first occurrence order.
    std::vector<std::string> findings;
    std::string detail;
    /// True when every finding is listed in the manifest for this suite.
    bool known = false;
};

struct SuiteReport {
    std::string suite;
    std::size_t instances = 0;
    std::size_t agreements = 0;
    std::vector<Discrepancy> discrepancies;
    /// Codes produced during the run that were checked for the matching and parity properties.
    std::size_t codes_checked = 0;
    double seconds = 0;

    std::size_t unexpected() const;
};

struct SuiteOptions {
    Config config;
    /// Suite-specific size limit: path/cycle length, Z_n modulus, random tree order, product order.
    std::optional<std::size_t> max_n;
    std::optional<std::uint64_t> seed;
    /// Random instances to draw where a suite samples.
    std::optional<std::size_t> count;
    /// Tree order for the exhaustive family probe in the trees suite; 0 skips it.
    std::size_t probe_vertices = 9;
};

const std::vector<std::string>& suite_names();
/// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

std::string report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

}  // namespace zdtpc
