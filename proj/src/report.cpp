#include "impmine/report.hpp"

#include <algorithm>

namespace impmine {

std::string format_quantity(const Rational& value) {
  if (value.is_integer()) return std::to_string(value.num());
  // exact round-half-away-from-zero to hundredths
  __int128 scaled = static_cast<__int128>(value.num()) * 200;
  const __int128 den2 = static_cast<__int128>(value.den()) * 2;
  scaled += scaled < 0 ? -static_cast<__int128>(value.den())
                       : static_cast<__int128>(value.den());
  __int128 q = scaled / den2;
  const bool neg = q < 0;
  if (neg) q = -q;
  const auto whole = static_cast<long long>(q / 100);
  const auto frac = static_cast<int>(q % 100);
  std::string out = neg ? "-" : "";
  out += std::to_string(whole);
  out += '.';
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

std::string format_implication_line(std::size_t number,
                                    const Implication& imp) {
  std::string line = std::to_string(number) + "; ";
  for (std::size_t i = 0; i < imp.antecedent.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(imp.antecedent[i] + 1);
  }
  line += " -> " + std::to_string(imp.consequent + 1);
  line += " ; Support = " + std::to_string(imp.support);
  line += "; rows = ";
  for (std::size_t i = 0; i < imp.support_rows.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(imp.support_rows[i] + 1) + ",";
  }
  return line;
}

std::vector<std::string> reduction_notes(const ReductionLog& log) {
  std::vector<std::string> notes;
  for (std::size_t c = 0; c < log.forward.size(); ++c) {
    if (log.forward[c] == ReductionLog::kRemovedAllOnes) {
      notes.push_back(std::to_string(c + 1) + " <=>");
    } else if (log.forward[c] == ReductionLog::kMerged) {
      notes.push_back(std::to_string(c + 1) + " <=> " +
                      std::to_string(log.representative(static_cast<int>(c)) + 1));
    }
  }
  return notes;
}

void write_implications(std::ostream& out, const RunReport& report) {
  for (const auto& note : reduction_notes(report.reduction)) out << note << '\n';
  std::size_t n = 0;
  for (const Implication& imp : report.implications)
    out << format_implication_line(++n, imp) << '\n';
}

void write_tsup_csv(std::ostream& out, const RunReport& report) {
  for (const auto& note : reduction_notes(report.reduction))
    out << "# " << note << '\n';
  out << "column,tsup\n";
  for (int c = 0; c < report.n_cols; ++c)
    out << (c + 1) << ',' << format_quantity(report.totals.tsup[c]) << '\n';
}

std::vector<RelevanceRow> combine_relevance(const RunReport& plain,
                                            const RunReport& negated) {
  const std::vector<Rational> rel =
      relevance(plain.totals.tsup, negated.totals.tsup);
  std::vector<RelevanceRow> rows;
  rows.reserve(rel.size());
  const int target0 = plain.config.target - 1;
  for (std::size_t c = 0; c < rel.size(); ++c) {
    if (static_cast<int>(c) == target0) continue;
    rows.push_back({static_cast<int>(c), plain.totals.tsup[c],
                    negated.totals.tsup[c], rel[c]});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RelevanceRow& a, const RelevanceRow& b) {
                     if (a.relevance != b.relevance)
                       return b.relevance < a.relevance;
                     return a.column < b.column;
                   });
  return rows;
}

void write_relevance_csv(std::ostream& out,
                         const std::vector<RelevanceRow>& rows) {
  out << "column,tsup_t,tsup_not_t,relevance\n";
  for (const RelevanceRow& r : rows) {
    out << (r.column + 1) << ',' << format_quantity(r.tsup_t) << ','
        << format_quantity(r.tsup_not_t) << ',' << format_quantity(r.relevance)
        << '\n';
  }
}

}  // namespace impmine
