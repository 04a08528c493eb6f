#pragma once

// Resource caps shared by the CLI and the verification suites.

#include <filesystem>
#include <optional>
#include <string>

#include "zdtpc/ring.hpp"
#include "zdtpc/zdg.hpp"

namespace zdtpc {

struct Config {
    /// Largest ring that is built element by element.
    std::size_t ring_cap = 4096;
    /// Largest graph the exact search is run on.
    std::size_t search_bound = 1024;
    /// Largest graph whose codes are enumerated one by one.
    std::size_t enum_bound = 256;
    /// Worker threads for suites; 0 means one per processor.
    unsigned jobs = 0;

    RingLimits limits() const;
    ZdgOptions zdg_options() const;
    SearchOptions search_options() const;
};

/// Reads {"ring_cap": n, "search_bound": n, "enum_bound": n, "jobs": n}; absent keys keep the
/// defaults. Throws ParseError on malformed input.
Config config_from_json(std::string_view text, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});

/// Applies ZDTPC_RING_CAP, ZDTPC_SEARCH_BOUND and ZDTPC_ENUM_BOUND when set.
Config apply_environment(Config config);

}  // namespace zdtpc
