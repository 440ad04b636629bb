#include "impmine/pipeline.hpp"

#include <cassert>
#include <chrono>

#include "impmine/accounting.hpp"
#include "impmine/dualize.hpp"
#include "impmine/relations.hpp"

namespace impmine {

void TotalSupportAccumulator::accumulate(std::span<const int> antecedent,
                                         std::int64_t support) {
  const auto k = static_cast<std::int64_t>(antecedent.size());
  for (int y : antecedent) tsup[y] += Rational(support, k);
  ++implications_kept;
}

std::pair<std::int64_t, std::vector<int>> implication_support(
    const BinaryTable& table, std::span<const int> antecedent,
    int consequent) {
  Bitset rows = table.support_of_attrs(antecedent);
  rows &= table.column(consequent);
  auto idx = rows.to_indices();
  return {static_cast<std::int64_t>(idx.size()), std::move(idx)};
}

std::vector<Rational> relevance(const std::vector<Rational>& tsup_t,
                                const std::vector<Rational>& tsup_not_t) {
  if (tsup_t.size() != tsup_not_t.size())
    throw std::invalid_argument("relevance input arrays differ in length");
  std::vector<Rational> out(tsup_t.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = Rational::ratio_plus_one(tsup_t[i], tsup_not_t[i]);
  return out;
}

std::string describe_target_status(int target_1based, const TargetStatus& st) {
  const std::string col = "column " + std::to_string(target_1based);
  switch (st.kind) {
    case TargetStatusKind::kUsable:
      return col + " is usable";
    case TargetStatusKind::kEmptyExtent:
      return col + " has an empty extent";
    case TargetStatusKind::kReducible:
      break;
  }
  std::string msg = col + " is reduced, ";
  switch (st.reason) {
    case ReducibleReason::kAllOnes:
      return msg + "a column with all 1s";
    case ReducibleReason::kDuplicate:
      return msg + "equal to column " +
             std::to_string(st.related_columns.at(0));
    case ReducibleReason::kIntersection: {
      msg += "equal to the intersection of columns";
      for (std::size_t i = 0; i < st.related_columns.size(); ++i)
        msg += (i == 0 ? " " : ", ") + std::to_string(st.related_columns[i]);
      return msg;
    }
    case ReducibleReason::kNone:
      break;
  }
  return msg + "(unspecified)";
}

namespace {

struct Prepared {
  BinaryTable work;
  BinaryTable red;
  ReductionLog log;
  int target_reduced = 0;
};

Prepared prepare(const BinaryTable& table, const RunConfig& cfg) {
  if (cfg.target < 1 || cfg.target > table.n_cols())
    throw std::out_of_range("target column " + std::to_string(cfg.target) +
                            " out of range [1, " +
                            std::to_string(table.n_cols()) + "]");
  const int t0 = cfg.target - 1;
  BinaryTable work = cfg.negate_target ? table.negate_column(t0) : table;
  auto [red, log] = work.reduced();

  const int fw = log.forward[t0];
  if (fw == ReductionLog::kRemovedAllOnes) {
    TargetStatus st{TargetStatusKind::kReducible, ReducibleReason::kAllOnes, {}};
    throw TargetNotUsable(st, cfg.target,
                          describe_target_status(cfg.target, st));
  }
  if (fw == ReductionLog::kMerged) {
    TargetStatus st{TargetStatusKind::kReducible,
                    ReducibleReason::kDuplicate,
                    {log.representative(t0) + 1}};
    throw TargetNotUsable(st, cfg.target,
                          describe_target_status(cfg.target, st));
  }
  TargetStatus st = red.target_status(fw);
  if (!st.usable()) {
    // related columns are in reduced space; report them as original 1-based
    for (int& c : st.related_columns) c = log.back[c] + 1;
    throw TargetNotUsable(st, cfg.target,
                          describe_target_status(cfg.target, st));
  }
  return {std::move(work), std::move(red), std::move(log), fw};
}

RunReport run_impl(const BinaryTable& table, const RunConfig& cfg,
                   bool small_space) {
  const auto t_start = std::chrono::steady_clock::now();
  Prepared p = prepare(table, cfg);
  const int t0 = cfg.target - 1;
  const int n_cols = table.n_cols();

  RunReport report;
  report.config = cfg;
  report.config.pipeline =
      small_space ? PipelineKind::kSmallSpace : PipelineKind::kFull;
  if (small_space) report.config.engine = Engine::kReverseSearch;
  report.n_rows = table.n_rows();
  report.n_cols = n_cols;
  report.totals.tsup.assign(n_cols, Rational(0));

  MemoryAccountant acc;
  acc.charge(static_cast<std::uint64_t>(n_cols));  // total-support array

  TargetContext ctx = compute_d_row(p.red, p.target_reduced);
  Hypergraph hg = build_hypergraph(ctx);

  // hypergraph vertices in original column ids (ascending, since both the
  // vertex list and the reduction back-map are ascending)
  std::vector<int> vert_orig(hg.vertices.size());
  for (std::size_t i = 0; i < hg.vertices.size(); ++i)
    vert_orig[i] = p.log.back[hg.vertices[i]];

  std::uint64_t seen = 0;
  DualizeResult dres;

  auto dump = [&](const Bitset& tv) {
    if (!cfg.dump_transversals) return;
    bool first = true;
    tv.for_each_set([&](std::size_t i) {
      if (!first) *cfg.dump_transversals << ' ';
      *cfg.dump_transversals << vert_orig[i] + 1;
      first = false;
    });
    *cfg.dump_transversals << '\n';
  };

  if (small_space) {
    Bitset rows_buf(p.work.n_rows());
    std::vector<int> ante;
    TransversalSink sink = [&](const Bitset& tv) {
      ++seen;
      dump(tv);
      ante.clear();
      tv.for_each_set([&](std::size_t i) { ante.push_back(vert_orig[i]); });
      rows_buf = p.work.column(t0);
      for (int y : ante) rows_buf &= p.work.column(y);
      const auto support = static_cast<std::int64_t>(rows_buf.count());
      if (support >= static_cast<std::int64_t>(cfg.minsup))
        report.totals.accumulate(ante, support);
      if (cfg.cap && seen >= *cfg.cap) return SinkAction::kStop;
      return SinkAction::kContinue;
    };
    dres = dualize_reverse_search(hg, sink, &acc);
  } else {
    std::vector<Implication> stored;
    std::vector<std::uint64_t> stored_units;
    TransversalSink sink = [&](const Bitset& tv) {
      ++seen;
      dump(tv);
      Implication imp;
      imp.consequent = t0;
      tv.for_each_set(
          [&](std::size_t i) { imp.antecedent.push_back(vert_orig[i]); });
      Bitset rows = p.work.column(t0);
      for (int y : imp.antecedent) rows &= p.work.column(y);
      imp.support_rows = rows.to_indices();
      imp.support = static_cast<int>(imp.support_rows.size());
      const std::uint64_t units = imp.antecedent.size() +
                                  imp.support_rows.size() + 2;
      acc.charge(units);
      stored_units.push_back(units);
      stored.push_back(std::move(imp));
      if (cfg.cap && seen >= *cfg.cap) return SinkAction::kStop;
      return SinkAction::kContinue;
    };
    dres = cfg.engine == Engine::kBruteForce
               ? dualize_bruteforce(hg, sink)
               : dualize_reverse_search(hg, sink, &acc);

    // minsup filter, then aggregation over the kept list in emission order
    report.implications.reserve(stored.size());
    for (std::size_t i = 0; i < stored.size(); ++i) {
      if (stored[i].support < static_cast<std::int64_t>(cfg.minsup)) {
        acc.release(stored_units[i]);
        continue;
      }
      report.implications.push_back(std::move(stored[i]));
    }
    for (const Implication& imp : report.implications)
      report.totals.accumulate(imp.antecedent, imp.support);
  }

  report.totals.implications_seen = seen;
  report.transversal_count = seen;
  report.truncated = dres.stopped;
  report.reduction = std::move(p.log);
  report.peak_units = acc.peak();
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t_start)
                       .count();
  return report;
}

}  // namespace

RunReport run_full(const BinaryTable& table, const RunConfig& cfg) {
  return run_impl(table, cfg, /*small_space=*/false);
}

RunReport run_small_space(const BinaryTable& table, const RunConfig& cfg) {
  return run_impl(table, cfg, /*small_space=*/true);
}

RunReport run_pipeline(const BinaryTable& table, const RunConfig& cfg) {
  return cfg.pipeline == PipelineKind::kFull ? run_full(table, cfg)
                                             : run_small_space(table, cfg);
}

}  // namespace impmine
