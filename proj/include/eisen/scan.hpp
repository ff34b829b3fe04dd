#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eisen/rational.hpp"
#include "eisen/report.hpp"

namespace eisen {

/// Region cell (a, b) with a > b >= 0.
struct Cell {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const Cell &, const Cell &) = default;
};

/// Successor of `after` in row-major region order (a ascending, then b) among
/// cells with norm <= max_norm; the first cell when `after` is empty.
std::optional<Cell> next_region_cell(std::optional<Cell> after, std::uint64_t max_norm);

/// Every region cell with norm <= max_norm, row-major.
std::vector<Cell> region_cells(std::uint64_t max_norm);

enum class ScanMode { mersenne, norm_perfect };

/// Resumable state of a search. `found` holds ReportRecord JSON for
/// norm_perfect scans and MersenneRecord JSON for mersenne scans.
struct ScanCheckpoint {
    static constexpr int kFormatVersion = 1;

    ScanMode mode = ScanMode::norm_perfect;
    std::uint64_t bound = 0;
    std::optional<Cell> last_cell;        // norm_perfect cursor
    std::optional<unsigned long> last_p;  // mersenne cursor
    std::uint64_t examined = 0;
    bool complete = false;
    std::vector<Json> found;
    int format_version = kFormatVersion;
};

Json to_json(const ScanCheckpoint &c);
ScanCheckpoint checkpoint_from_json(const Json &j);

/// Writes to a sibling temporary file and renames it over `path`.
void save_checkpoint(const ScanCheckpoint &c, const std::filesystem::path &path);
ScanCheckpoint load_checkpoint(const std::filesystem::path &path);

struct ScanConfig {
    std::uint64_t bound = 0;
    unsigned workers = 1;
    std::uint64_t checkpoint_every = 10'000;
    std::optional<std::filesystem::path> checkpoint_path;
    FactorOptions factor_options;
    /// Stop after this many candidates in the current run, leaving an incomplete checkpoint.
    std::optional<std::uint64_t> halt_after;
};

/// Evaluates one region cell: a row when the candidate is norm-perfect or was
/// skipped, nothing otherwise.
std::optional<ReportRecord> evaluate_norm_perfect_candidate(const EisensteinInt &x,
                                                            const FactorOptions &opts);

/// Advances a norm_perfect scan from `state` (fresh when empty). The returned
/// checkpoint is complete unless halt_after interrupted the run.
ScanCheckpoint run_norm_perfect_scan(const ScanConfig &config, std::optional<ScanCheckpoint> state = {});

/// Same contract for the Mersenne exponent scan; bound is the maximum exponent.
ScanCheckpoint run_mersenne_scan(const ScanConfig &config, std::optional<ScanCheckpoint> state = {});

enum class OutputFormat { jsonl, csv };

/// Final output of a complete norm_perfect scan: rows in (norm, a, b) order,
/// then a summary line.
void write_norm_perfect_output(const ScanCheckpoint &c, OutputFormat format, std::ostream &os);

} // namespace eisen
