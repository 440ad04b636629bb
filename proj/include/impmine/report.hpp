#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "impmine/pipeline.hpp"

namespace impmine {

/// Integers render bare, everything else with two decimals (half away from
/// zero): 16 -> "16", 32/3 -> "10.67".
std::string format_quantity(const Rational& value);

/// One implication line in the classic output style, 1-based indices:
/// `1; 1 4 -> 22 ; Support = 4; rows = 3, 4, 7, 8,`
std::string format_implication_line(std::size_t number,
                                    const Implication& imp);

/// Reduction notes in column order: `6 <=>` for an all-ones column,
/// `8 <=> 7` for a duplicate merged into its representative.
std::vector<std::string> reduction_notes(const ReductionLog& log);

/// Notes followed by the numbered implication list.
void write_implications(std::ostream& out, const RunReport& report);

/// `column,tsup` over all original columns; reduction notes lead as `#`
/// comments. Reduced and merged columns carry 0 under their original index.
void write_tsup_csv(std::ostream& out, const RunReport& report);

struct RelevanceRow {
  int column = 0;  // 0-based original
  Rational tsup_t;
  Rational tsup_not_t;
  Rational relevance;
};

/// Joins a plain run and its negated-target companion, sorted by relevance
/// descending with ties broken by ascending column. The target itself is
/// excluded.
std::vector<RelevanceRow> combine_relevance(const RunReport& plain,
                                            const RunReport& negated);

/// `column,tsup_t,tsup_not_t,relevance`.
void write_relevance_csv(std::ostream& out,
                         const std::vector<RelevanceRow>& rows);

}  // namespace impmine
