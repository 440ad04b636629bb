#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "impmine/rational.hpp"
#include "impmine/table.hpp"

namespace impmine {

enum class Engine { kReverseSearch, kBruteForce };
enum class PipelineKind { kFull, kSmallSpace };

struct RunConfig {
  int target = 0;  // 1-based original column
  std::uint32_t minsup = 1;
  Engine engine = Engine::kReverseSearch;
  PipelineKind pipeline = PipelineKind::kSmallSpace;
  bool negate_target = false;
  std::optional<std::uint64_t> cap;  // stop after this many transversals
  // debug hook: every transversal as space-separated 1-based original
  // column numbers, one line each, written as the stream is enumerated
  std::ostream* dump_transversals = nullptr;
};

/// A mined rule antecedent -> consequent, with the rows that validate it.
/// Indices are 0-based positions in the original (unreduced) table;
/// antecedent and support_rows are ascending. Every kept implication holds on
/// every row of the table (full confidence) and no proper subset of the
/// antecedent does (left-minimality).
struct Implication {
  std::vector<int> antecedent;
  int consequent = 0;
  std::vector<int> support_rows;
  int support = 0;

  bool operator==(const Implication&) const = default;
};

/// Per-attribute running totals: each kept implication Y -> t adds
/// support/|Y| to every attribute of Y. Entries are exact rationals, indexed
/// by original column, so the full and streaming pipelines can be compared
/// for bit equality.
struct TotalSupportAccumulator {
  std::vector<Rational> tsup;
  std::uint64_t implications_seen = 0;
  std::uint64_t implications_kept = 0;

  void accumulate(std::span<const int> antecedent, std::int64_t support);

  bool operator==(const TotalSupportAccumulator&) const = default;
};

/// Target was rejected before dualization: reducible (all ones, duplicate,
/// or intersection of larger columns) or empty extent. The message names the
/// reduction in original 1-based column terms, e.g. "column 6 is reduced, a
/// column with all 1s".
class TargetNotUsable : public std::runtime_error {
 public:
  TargetNotUsable(TargetStatus status, int target_1based, std::string msg)
      : std::runtime_error(std::move(msg)),
        status_(std::move(status)),
        target_(target_1based) {}

  const TargetStatus& status() const { return status_; }
  int target() const { return target_; }

 private:
  TargetStatus status_;
  int target_;
};

struct RunReport {
  RunConfig config;  // echo; engine reflects what actually ran
  ReductionLog reduction;
  std::vector<Implication> implications;  // kept, in emission order; full only
  TotalSupportAccumulator totals;
  std::uint64_t transversal_count = 0;
  bool truncated = false;
  double wall_ms = 0.0;
  std::uint64_t peak_units = 0;  // accounted peak, in index words
  int n_rows = 0;
  int n_cols = 0;
};

/// Stores every transversal as an implication, then filters by minsup and
/// aggregates the survivors. The report carries the kept implication list.
RunReport run_full(const BinaryTable& table, const RunConfig& cfg);

/// Aggregates inside the dualization stream and stores no implication; the
/// report carries only the totals. The accumulator equals run_full's exactly.
/// The engine is always reverse search.
RunReport run_small_space(const BinaryTable& table, const RunConfig& cfg);

RunReport run_pipeline(const BinaryTable& table, const RunConfig& cfg);

/// Rows validating antecedent -> consequent: the objects having every listed
/// attribute and the consequent. Returns (count, ascending row list).
std::pair<std::int64_t, std::vector<int>> implication_support(
    const BinaryTable& table, std::span<const int> antecedent, int consequent);

/// Elementwise tsup_t / (tsup_not_t + 1).
std::vector<Rational> relevance(const std::vector<Rational>& tsup_t,
                                const std::vector<Rational>& tsup_not_t);

/// "column N is reduced, ..." / "column N has an empty extent"; related
/// columns must already be in original 1-based form.
std::string describe_target_status(int target_1based, const TargetStatus& st);

}  // namespace impmine
