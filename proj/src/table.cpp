#include "impmine/table.hpp"

#include <algorithm>
#include <sstream>

namespace impmine {

int ReductionLog::representative(int original) const {
  for (const auto& [col, rep] : merged_duplicates)
    if (col == original) return rep;
  return original;
}

BinaryTable BinaryTable::from_rows(
    const std::vector<std::vector<std::uint8_t>>& bits,
    std::optional<std::vector<std::string>> names) {
  if (bits.empty()) throw std::invalid_argument("table needs at least one row");
  const std::size_t n_cols = bits.front().size();
  if (n_cols < 1)
    throw std::invalid_argument("table needs at least one column");
  BinaryTable t;
  t.rows_.reserve(bits.size());
  for (const auto& r : bits) {
    if (r.size() != n_cols)
      throw std::invalid_argument("ragged rows in table data");
    Bitset row(n_cols);
    for (std::size_t c = 0; c < n_cols; ++c)
      if (r[c]) row.set(c);
    t.rows_.push_back(std::move(row));
  }
  t.cols_.assign(n_cols, Bitset(bits.size()));
  for (std::size_t r = 0; r < bits.size(); ++r)
    for (std::size_t c = 0; c < n_cols; ++c)
      if (bits[r][c]) t.cols_[c].set(r);
  if (names) {
    if (names->size() != n_cols)
      throw std::invalid_argument("attribute name count does not match width");
    t.names_ = std::move(names);
  }
  return t;
}

void BinaryTable::check_attr(int c) const {
  if (c < 0 || c >= n_cols())
    throw std::out_of_range("attribute index " + std::to_string(c) +
                            " out of range [0, " + std::to_string(n_cols()) +
                            ")");
}

void BinaryTable::check_row(int r) const {
  if (r < 0 || r >= n_rows())
    throw std::out_of_range("object index " + std::to_string(r) +
                            " out of range [0, " + std::to_string(n_rows()) +
                            ")");
}

Bitset BinaryTable::support_of_attrs(const Bitset& attrs) const {
  Bitset out(n_rows(), true);
  attrs.for_each_set([&](std::size_t c) { out &= cols_[c]; });
  return out;
}

Bitset BinaryTable::support_of_attrs(std::span<const int> attrs) const {
  Bitset out(n_rows(), true);
  for (int c : attrs) {
    check_attr(c);
    out &= cols_[c];
  }
  return out;
}

Bitset BinaryTable::support_of_rows(const Bitset& objects) const {
  Bitset out(n_cols(), true);
  objects.for_each_set([&](std::size_t r) { out &= rows_[r]; });
  return out;
}

Bitset BinaryTable::support_of_rows(std::span<const int> objects) const {
  Bitset out(n_cols(), true);
  for (int r : objects) {
    check_row(r);
    out &= rows_[r];
  }
  return out;
}

Bitset BinaryTable::closure(const Bitset& attrs) const {
  return support_of_rows(support_of_attrs(attrs));
}

std::pair<BinaryTable, ReductionLog> BinaryTable::reduced() const {
  ReductionLog log;
  log.forward.assign(n_cols(), 0);
  std::vector<int> kept;
  for (int c = 0; c < n_cols(); ++c) {
    if (cols_[c].all()) {
      log.forward[c] = ReductionLog::kRemovedAllOnes;
      log.removed_full_columns.push_back(c);
      continue;
    }
    int rep = -1;
    for (int k : kept) {
      if (cols_[k] == cols_[c]) {
        rep = k;
        break;
      }
    }
    if (rep >= 0) {
      log.forward[c] = ReductionLog::kMerged;
      log.merged_duplicates.emplace_back(c, rep);
    } else {
      log.forward[c] = static_cast<int>(kept.size());
      kept.push_back(c);
    }
  }
  log.back = kept;
  if (kept.empty())
    throw std::invalid_argument("no attributes remain after reduction");

  std::vector<std::vector<std::uint8_t>> bits(
      n_rows(), std::vector<std::uint8_t>(kept.size(), 0));
  for (int r = 0; r < n_rows(); ++r)
    for (std::size_t j = 0; j < kept.size(); ++j)
      bits[r][j] = rows_[r].test(kept[j]) ? 1 : 0;

  std::optional<std::vector<std::string>> names;
  if (names_) {
    names.emplace();
    for (int k : kept) names->push_back((*names_)[k]);
  }
  return {from_rows(bits, std::move(names)), std::move(log)};
}

BinaryTable BinaryTable::negate_column(int c) const {
  check_attr(c);
  std::vector<std::vector<std::uint8_t>> bits(
      n_rows(), std::vector<std::uint8_t>(n_cols(), 0));
  for (int r = 0; r < n_rows(); ++r)
    for (int j = 0; j < n_cols(); ++j)
      bits[r][j] = (rows_[r].test(j) != (j == c)) ? 1 : 0;
  return from_rows(bits, names_);
}

TargetStatus BinaryTable::target_status(int t) const {
  check_attr(t);
  const Bitset& extent = cols_[t];
  TargetStatus st;
  if (extent.none()) {
    st.kind = TargetStatusKind::kEmptyExtent;
    return st;
  }
  if (extent.all()) {
    st.kind = TargetStatusKind::kReducible;
    st.reason = ReducibleReason::kAllOnes;
    return st;
  }
  for (int z = 0; z < n_cols(); ++z) {
    if (z != t && cols_[z] == extent) {
      st.kind = TargetStatusKind::kReducible;
      st.reason = ReducibleReason::kDuplicate;
      st.related_columns = {z};
      return st;
    }
  }
  // Extent equal to the intersection of all strictly larger extents.
  std::vector<int> larger;
  Bitset inter(n_rows(), true);
  for (int z = 0; z < n_cols(); ++z) {
    if (z == t) continue;
    if (extent.is_proper_subset_of(cols_[z])) {
      larger.push_back(z);
      inter &= cols_[z];
    }
  }
  if (!larger.empty() && inter == extent) {
    st.kind = TargetStatusKind::kReducible;
    st.reason = ReducibleReason::kIntersection;
    st.related_columns = std::move(larger);
    return st;
  }
  return st;
}

namespace {

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

BinaryTable parse_table(std::istream& in) {
  std::vector<std::vector<std::uint8_t>> bits;
  std::optional<std::vector<std::string>> names;
  std::string line;
  int line_no = 0;
  std::size_t n_cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      if (bits.empty() && !names) {
        auto toks = split_tokens(line.substr(first + 1));
        if (!toks.empty()) names = std::move(toks);
      }
      continue;
    }
    auto toks = split_tokens(line);
    std::vector<std::uint8_t> row;
    row.reserve(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] == "0")
        row.push_back(0);
      else if (toks[i] == "1")
        row.push_back(1);
      else
        throw ParseError(line_no, static_cast<int>(i + 1),
                         "expected 0 or 1, got '" + toks[i] + "'");
    }
    if (bits.empty()) {
      n_cols = row.size();
      if (n_cols < 2)
        throw ParseError(line_no, 1, "table needs at least two columns");
    } else if (row.size() != n_cols) {
      throw ParseError(line_no, static_cast<int>(row.size()),
                       "expected " + std::to_string(n_cols) +
                           " values, got " + std::to_string(row.size()));
    }
    bits.push_back(std::move(row));
  }
  if (bits.empty()) throw ParseError("empty input: no table rows found");
  if (names && names->size() != n_cols)
    throw ParseError("header names " + std::to_string(names->size()) +
                     " attributes but rows have " + std::to_string(n_cols));
  return BinaryTable::from_rows(bits, std::move(names));
}

BinaryTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

}  // namespace impmine
