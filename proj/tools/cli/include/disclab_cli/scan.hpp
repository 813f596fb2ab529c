#pragma once

// Coefficient-box scans: every cell gets a predicted verdict from the
// classifiers and an observed one from the discriminator engine, and the two
// are compared.

#include "disclab_cli/report.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace disclab::cli {

enum class Family {
    integer,     // x n^2 + y n
    half,        // (x/2) n^2 + (y/2) n, x and y odd
    p3bc,        // 3y n^2 + xy n, cells (b, c) = (x, y)
    conjecture,  // (3y/2) n^2 + (xy/2) n, cells (b, c) = (x, y), p = 3
};

const char* to_string(Family f) noexcept;
Family parse_family(const std::string& name);

struct ScanConfig {
    std::int64_t p = 2;
    Family family = Family::integer;
    std::int64_t x_min = 0, x_max = 0;  // alpha, a, or b
    std::int64_t y_min = 0, y_max = 0;  // beta, b, or c
    std::int64_t horizon = 64;

    /// Bounds within the coefficient limits, horizon >= 1, p prime.
    void validate() const;
    Json to_json() const;
};

struct ScanOptions {
    int jobs = 1;
    std::optional<std::filesystem::path> cache;
};

/// Runs the box; identical configs give identical reports for any jobs.
Report run_scan(const ScanConfig& config, const ScanOptions& options);

/// The per-cell work, exposed for tests.
Json scan_cell(const ScanConfig& config, std::int64_t x, std::int64_t y);

} // namespace disclab::cli
