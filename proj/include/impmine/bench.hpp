#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "impmine/pipeline.hpp"

namespace impmine {

enum class RunOutcome { kOk, kStarred, kFailed };

/// One accounted pipeline execution for one target.
struct AccountedRun {
  std::uint64_t peak_retained_units = 0;
  std::uint64_t transversal_count = 0;
  std::uint64_t kept_count = 0;
  double wall_ms = 0.0;
};

/// Full vs small-space comparison for one target. Starred targets (reducible
/// or empty) are not executed; failed rows carry the error in `note`.
struct ComparisonRow {
  int target = 0;  // 1-based
  RunOutcome outcome = RunOutcome::kOk;
  std::string note;
  AccountedRun original;  // full pipeline
  AccountedRun small;     // small-space pipeline
};

/// Runs both pipelines per target. The two total-support arrays must be
/// equal or the row is marked failed. Targets may be processed concurrently
/// by up to `workers` threads; the table is shared read-only.
std::vector<ComparisonRow> sweep(const BinaryTable& table,
                                 std::span<const int> targets_1based,
                                 std::uint32_t minsup, Engine engine,
                                 int workers = 1);

/// target,status,orig_peak,small_peak,peak_diff,peak_savings_pct,orig_ms,
/// small_ms,ms_diff,transversals,kept — plus AVG and AVG (no *) footers.
/// Failed rows are excluded from both averages.
void write_comparison_csv(std::ostream& out,
                          std::span<const ComparisonRow> rows);

}  // namespace impmine
