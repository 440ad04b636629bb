// impmine: mine full-confidence implications with a fixed consequent from a
// binary table, rank attributes by total support and relevance, and compare
// the storing pipeline against the streaming one.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "impmine/bench.hpp"
#include "impmine/pipeline.hpp"
#include "impmine/report.hpp"

namespace {

using namespace impmine;

BinaryTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_table(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

Engine parse_engine(const std::string& s) {
  if (s == "rs") return Engine::kReverseSearch;
  if (s == "bf") return Engine::kBruteForce;
  throw CLI::ValidationError("--engine must be rs or bf");
}

// "A-B" inclusive or a single "N"
std::vector<int> parse_targets(const std::string& spec, int n_cols) {
  int lo = 1, hi = n_cols;
  if (!spec.empty()) {
    const auto dash = spec.find('-');
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stoi(spec);
      } else {
        lo = std::stoi(spec.substr(0, dash));
        hi = std::stoi(spec.substr(dash + 1));
      }
    } catch (const std::exception&) {
      throw std::runtime_error("bad --targets '" + spec +
                               "': expected N or A-B");
    }
  }
  if (lo < 1 || hi > n_cols || lo > hi)
    throw std::runtime_error("targets " + std::to_string(lo) + "-" +
                             std::to_string(hi) + " outside table width " +
                             std::to_string(n_cols));
  std::vector<int> targets;
  for (int t = lo; t <= hi; ++t) targets.push_back(t);
  return targets;
}

struct RunArgs {
  std::string input;
  int target = 0;
  std::uint32_t minsup = 1;
  std::string pipeline = "small";
  std::string engine = "rs";
  bool negate = false;
  std::string emit_implications;
  std::string emit_tsup;
  std::string emit_transversals;
  std::uint64_t cap = 0;
};

int cmd_run(const RunArgs& a) {
  if (!a.emit_implications.empty() && a.pipeline != "full")
    throw std::runtime_error("--emit-implications requires --pipeline full");
  BinaryTable table = load_table(a.input);
  RunConfig cfg;
  cfg.target = a.target;
  cfg.minsup = a.minsup;
  cfg.engine = parse_engine(a.engine);
  cfg.pipeline =
      a.pipeline == "full" ? PipelineKind::kFull : PipelineKind::kSmallSpace;
  cfg.negate_target = a.negate;
  if (a.cap > 0) cfg.cap = a.cap;

  std::ofstream dump;
  if (!a.emit_transversals.empty()) {
    dump = open_output(a.emit_transversals);
    cfg.dump_transversals = &dump;
  }

  RunReport report = run_pipeline(table, cfg);

  if (cfg.pipeline == PipelineKind::kFull) {
    if (a.emit_implications.empty()) {
      write_implications(std::cout, report);
    } else {
      auto out = open_output(a.emit_implications);
      write_implications(out, report);
    }
  }
  if (a.emit_tsup.empty()) {
    write_tsup_csv(std::cout, report);
  } else {
    auto out = open_output(a.emit_tsup);
    write_tsup_csv(out, report);
  }

  std::cerr << "target " << cfg.target << ": " << report.transversal_count
            << " transversals, " << report.totals.implications_kept
            << " kept at minsup " << cfg.minsup << ", "
            << report.peak_units << " peak units, " << report.wall_ms
            << " ms" << (report.truncated ? " [truncated]" : "") << "\n";
  return 0;
}

struct RelevanceArgs {
  std::string input;
  int target = 0;
  std::uint32_t minsup = 1;
  std::uint64_t cap = 0;
  std::string out_path;
};

int cmd_relevance(const RelevanceArgs& a) {
  BinaryTable table = load_table(a.input);
  RunConfig cfg;
  cfg.target = a.target;
  cfg.minsup = a.minsup;
  if (a.cap > 0) cfg.cap = a.cap;

  RunReport plain, negated;
  try {
    plain = run_small_space(table, cfg);
  } catch (const TargetNotUsable& e) {
    std::cerr << "relevance: " << e.what() << "\n";
    return 2;
  }
  try {
    cfg.negate_target = true;
    negated = run_small_space(table, cfg);
  } catch (const TargetNotUsable& e) {
    std::cerr << "relevance: negated target: " << e.what() << "\n";
    return 2;
  }

  const auto rows = combine_relevance(plain, negated);
  if (a.out_path.empty()) {
    write_relevance_csv(std::cout, rows);
  } else {
    auto out = open_output(a.out_path);
    write_relevance_csv(out, rows);
  }
  return 0;
}

struct BenchArgs {
  std::string input;
  std::string targets;
  std::uint32_t minsup = 1;
  std::string engine = "rs";
  int workers = 1;
  std::string out_path;
};

int cmd_bench(const BenchArgs& a) {
  BinaryTable table = load_table(a.input);
  const auto targets = parse_targets(a.targets, table.n_cols());
  const auto rows =
      sweep(table, targets, a.minsup, parse_engine(a.engine), a.workers);
  for (const auto& r : rows)
    if (r.outcome == RunOutcome::kFailed)
      std::cerr << "target " << r.target << " failed: " << r.note << "\n";
  if (a.out_path.empty()) {
    write_comparison_csv(std::cout, rows);
  } else {
    auto out = open_output(a.out_path);
    write_comparison_csv(out, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"implication mining and attribute ranking over binary tables"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand(
      "run", "mine implications for one target and report total supports");
  run->add_option("--input", run_args.input, "binary table file")->required();
  run->add_option("--target", run_args.target, "target column, 1-based")
      ->required();
  run->add_option("--minsup", run_args.minsup, "minimum support (default 1)");
  run->add_option("--pipeline", run_args.pipeline, "full | small")
      ->check(CLI::IsMember({"full", "small"}));
  run->add_option("--engine", run_args.engine, "rs | bf")
      ->check(CLI::IsMember({"rs", "bf"}));
  run->add_flag("--negate", run_args.negate, "complement the target column");
  run->add_option("--emit-implications", run_args.emit_implications,
                  "write the implication list here (full pipeline)");
  run->add_option("--emit-tsup", run_args.emit_tsup,
                  "write the total-support CSV here");
  run->add_option("--emit-transversals", run_args.emit_transversals,
                  "debug dump: every transversal, one line of 1-based "
                  "column numbers");
  run->add_option("--cap", run_args.cap,
                  "stop after this many transversals (0 = no cap)");

  RelevanceArgs rel_args;
  auto* rel = app.add_subcommand(
      "relevance", "rank attributes against a target via two streaming runs");
  rel->add_option("--input", rel_args.input, "binary table file")->required();
  rel->add_option("--target", rel_args.target, "target column, 1-based")
      ->required();
  rel->add_option("--minsup", rel_args.minsup, "minimum support (default 1)");
  rel->add_option("--cap", rel_args.cap,
                  "stop after this many transversals (0 = no cap)");
  rel->add_option("--out", rel_args.out_path, "output CSV path");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "compare full and small-space pipelines per target");
  bench->add_option("--input", bench_args.input, "binary table file")
      ->required();
  bench->add_option("--targets", bench_args.targets,
                    "target range A-B or single N (default: all columns)");
  bench->add_option("--minsup", bench_args.minsup,
                    "minimum support (default 1)");
  bench->add_option("--engine", bench_args.engine,
                    "engine for the full pipeline: rs | bf");
  bench->add_option("--workers", bench_args.workers,
                    "concurrent per-target runs (default 1)");
  bench->add_option("--out", bench_args.out_path, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (rel->parsed()) return cmd_relevance(rel_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const TargetNotUsable& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
