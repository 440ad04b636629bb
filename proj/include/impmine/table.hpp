#pragma once

#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "impmine/bitset.hpp"

namespace impmine {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int token, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", token " +
                           std::to_string(token) + ": " + what),
        line_(line),
        token_(token) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), line_(0), token_(0) {}

  int line() const { return line_; }
  int token() const { return token_; }

 private:
  int line_;
  int token_;
};

/// What the column-reduction pass did. Indices are 0-based positions in the
/// original table; external output renders them 1-based.
struct ReductionLog {
  static constexpr int kRemovedAllOnes = -1;
  static constexpr int kMerged = -2;

  std::vector<int> removed_full_columns;              // all-ones columns
  std::vector<std::pair<int, int>> merged_duplicates; // (column, representative)
  std::vector<int> forward;  // original -> reduced index, or a marker above
  std::vector<int> back;     // reduced index -> original

  bool empty() const {
    return removed_full_columns.empty() && merged_duplicates.empty();
  }
  /// Representative column of a merged duplicate; identity otherwise.
  int representative(int original) const;
};

enum class TargetStatusKind { kUsable, kReducible, kEmptyExtent };
enum class ReducibleReason { kNone, kAllOnes, kDuplicate, kIntersection };

struct TargetStatus {
  TargetStatusKind kind = TargetStatusKind::kUsable;
  ReducibleReason reason = ReducibleReason::kNone;
  // Duplicate: the representative column; intersection: the intersected
  // columns. Same index space as the table the query ran on.
  std::vector<int> related_columns;

  bool usable() const { return kind == TargetStatusKind::kUsable; }
};

/// Immutable binary relation between objects (rows) and attributes (columns),
/// stored both row-major and column-major as bitsets. Safe to share across
/// threads once constructed.
class BinaryTable {
 public:
  static BinaryTable from_rows(
      const std::vector<std::vector<std::uint8_t>>& bits,
      std::optional<std::vector<std::string>> names = std::nullopt);

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return static_cast<int>(cols_.size()); }
  bool bit(int r, int c) const { return rows_[r].test(c); }
  const Bitset& row(int r) const { return rows_[r]; }
  const Bitset& column(int c) const { return cols_[c]; }
  const std::optional<std::vector<std::string>>& attr_names() const {
    return names_;
  }

  /// Objects possessing every attribute in the set; all objects for the
  /// empty set.
  Bitset support_of_attrs(const Bitset& attrs) const;
  Bitset support_of_attrs(std::span<const int> attrs) const;

  /// Attributes shared by every object in the set; all attributes for the
  /// empty set.
  Bitset support_of_rows(const Bitset& objects) const;
  Bitset support_of_rows(std::span<const int> objects) const;

  /// support_of_rows(support_of_attrs(attrs)).
  Bitset closure(const Bitset& attrs) const;

  /// Drops all-ones columns and merges duplicate columns onto their
  /// lowest-index representative. All-zero columns are kept.
  std::pair<BinaryTable, ReductionLog> reduced() const;

  /// Copy of the table with column c complemented.
  BinaryTable negate_column(int c) const;

  /// Whether column t can serve as a target: rejects all-ones columns,
  /// duplicates of another column, columns whose extent equals the
  /// intersection of the strictly larger extents, and empty columns.
  TargetStatus target_status(int t) const;

 private:
  void check_attr(int c) const;
  void check_row(int r) const;

  std::vector<Bitset> rows_;  // intents, width n_cols
  std::vector<Bitset> cols_;  // extents, width n_rows
  std::optional<std::vector<std::string>> names_;
};

/// Parses the text table format: rows of 0/1 tokens separated by spaces or
/// commas, blank lines ignored, `#` lines are comments, and an optional
/// leading `#` line names the attributes.
BinaryTable parse_table(std::istream& in);
BinaryTable parse_table(const std::string& text);

}  // namespace impmine
