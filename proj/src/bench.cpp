#include "impmine/bench.hpp"

#include <atomic>
#include <cstdio>
#include <thread>

namespace impmine {

namespace {

AccountedRun account(const RunReport& r) {
  return {r.peak_units, r.transversal_count, r.totals.implications_kept,
          r.wall_ms};
}

ComparisonRow run_one(const BinaryTable& table, int target,
                      std::uint32_t minsup, Engine engine) {
  ComparisonRow row;
  row.target = target;
  RunConfig cfg;
  cfg.target = target;
  cfg.minsup = minsup;
  cfg.engine = engine;
  try {
    cfg.pipeline = PipelineKind::kFull;
    RunReport full = run_full(table, cfg);
    cfg.pipeline = PipelineKind::kSmallSpace;
    RunReport small = run_small_space(table, cfg);
    if (full.totals != small.totals) {
      row.outcome = RunOutcome::kFailed;
      row.note = "total-support arrays differ between pipelines";
      return row;
    }
    row.original = account(full);
    row.small = account(small);
  } catch (const TargetNotUsable& e) {
    row.outcome = RunOutcome::kStarred;
    row.note = e.what();
  } catch (const std::exception& e) {
    row.outcome = RunOutcome::kFailed;
    row.note = e.what();
  }
  return row;
}

double savings_pct(double original, double small) {
  if (original == 0.0) return 0.0;
  return (original - small) / original * 100.0;
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<ComparisonRow> sweep(const BinaryTable& table,
                                 std::span<const int> targets_1based,
                                 std::uint32_t minsup, Engine engine,
                                 int workers) {
  std::vector<ComparisonRow> rows(targets_1based.size());
  if (workers <= 1 || targets_1based.size() <= 1) {
    for (std::size_t i = 0; i < targets_1based.size(); ++i)
      rows[i] = run_one(table, targets_1based[i], minsup, engine);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= targets_1based.size()) return;
      rows[i] = run_one(table, targets_1based[i], minsup, engine);
    }
  };
  const int n_threads =
      std::min<int>(workers, static_cast<int>(targets_1based.size()));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

void write_comparison_csv(std::ostream& out,
                          std::span<const ComparisonRow> rows) {
  out << "target,status,orig_peak,small_peak,peak_diff,peak_savings_pct,"
         "orig_ms,small_ms,ms_diff,transversals,kept\n";

  struct Sums {
    double orig_peak = 0, small_peak = 0, diff = 0, savings = 0;
    double orig_ms = 0, small_ms = 0, ms_diff = 0;
    double transversals = 0, kept = 0;
    std::size_t n = 0;
  };
  Sums all, ok_only;

  auto add = [](Sums& s, const ComparisonRow& r) {
    const auto op = static_cast<double>(r.original.peak_retained_units);
    const auto sp = static_cast<double>(r.small.peak_retained_units);
    s.orig_peak += op;
    s.small_peak += sp;
    s.diff += sp - op;
    s.savings += savings_pct(op, sp);
    s.orig_ms += r.original.wall_ms;
    s.small_ms += r.small.wall_ms;
    s.ms_diff += r.small.wall_ms - r.original.wall_ms;
    s.transversals += static_cast<double>(r.original.transversal_count);
    s.kept += static_cast<double>(r.original.kept_count);
    ++s.n;
  };

  for (const ComparisonRow& r : rows) {
    const char* status = r.outcome == RunOutcome::kOk       ? "ok"
                         : r.outcome == RunOutcome::kStarred ? "starred"
                                                             : "failed";
    const auto op = static_cast<double>(r.original.peak_retained_units);
    const auto sp = static_cast<double>(r.small.peak_retained_units);
    out << r.target << ',' << status << ',' << r.original.peak_retained_units
        << ',' << r.small.peak_retained_units << ','
        << static_cast<std::int64_t>(r.small.peak_retained_units) -
               static_cast<std::int64_t>(r.original.peak_retained_units)
        << ',' << fmt(savings_pct(op, sp), 2) << ','
        << fmt(r.original.wall_ms, 3) << ',' << fmt(r.small.wall_ms, 3) << ','
        << fmt(r.small.wall_ms - r.original.wall_ms, 3) << ','
        << r.original.transversal_count << ',' << r.original.kept_count
        << '\n';
    if (r.outcome == RunOutcome::kFailed) continue;
    add(all, r);
    if (r.outcome == RunOutcome::kOk) add(ok_only, r);
  }

  auto footer = [&](const char* label, const Sums& s) {
    if (s.n == 0) return;
    const double n = static_cast<double>(s.n);
    out << label << ",," << fmt(s.orig_peak / n, 2) << ','
        << fmt(s.small_peak / n, 2) << ',' << fmt(s.diff / n, 2) << ','
        << fmt(s.savings / n, 2) << ',' << fmt(s.orig_ms / n, 3) << ','
        << fmt(s.small_ms / n, 3) << ',' << fmt(s.ms_diff / n, 3) << ','
        << fmt(s.transversals / n, 2) << ',' << fmt(s.kept / n, 2) << '\n';
  };
  footer("AVG", all);
  footer("AVG (no *)", ok_only);
}

}  // namespace impmine
