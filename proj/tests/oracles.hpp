#pragma once

// Independent reference computations used to check the library. Everything
// here works on plain integers and row scans, deliberately avoiding the
// library's bitset machinery and search engines.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "impmine/table.hpp"

namespace oracles {

/// All minimal transversals of an edge list over vertices 0..nv-1, by
/// checking every subset against the definitions. nv must be <= 20.
inline std::set<std::vector<int>> minimal_transversals(
    int nv, const std::vector<std::vector<int>>& edges) {
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    bool hits_all = true;
    for (const auto& e : edges) {
      bool hit = false;
      for (int v : e) hit |= ((mask >> v) & 1) != 0;
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (!hits_all) continue;
    bool minimal = true;
    for (int v = 0; v < nv && minimal; ++v) {
      if (!((mask >> v) & 1)) continue;
      const std::uint32_t sub = mask & ~(1u << v);
      bool still = true;
      for (const auto& e : edges) {
        bool hit = false;
        for (int w : e) hit |= ((sub >> w) & 1) != 0;
        if (!hit) {
          still = false;
          break;
        }
      }
      if (still) minimal = false;  // v was removable
    }
    if (!minimal) continue;
    std::vector<int> set;
    for (int v = 0; v < nv; ++v)
      if ((mask >> v) & 1) set.push_back(v);
    out.insert(std::move(set));
  }
  return out;
}

/// Does every row containing all of `attrs` also contain `target`?
/// (Row scan; this is "target lies in the closure of attrs".)
inline bool implies_target(const impmine::BinaryTable& t,
                           const std::vector<int>& attrs, int target) {
  for (int r = 0; r < t.n_rows(); ++r) {
    bool has_all = true;
    for (int a : attrs) has_all &= t.bit(r, a);
    if (has_all && !t.bit(r, target)) return false;
  }
  return true;
}

inline std::vector<int> supporting_rows(const impmine::BinaryTable& t,
                                        const std::vector<int>& attrs,
                                        int target) {
  std::vector<int> rows;
  for (int r = 0; r < t.n_rows(); ++r) {
    bool has_all = t.bit(r, target);
    for (int a : attrs) has_all &= t.bit(r, a);
    if (has_all) rows.push_back(r);
  }
  return rows;
}

/// All minimal subsets of `candidates` whose closure contains `target`,
/// by subset enumeration. candidates.size() must be <= 20.
inline std::set<std::vector<int>> minimal_generators(
    const impmine::BinaryTable& t, int target,
    const std::vector<int>& candidates) {
  const int n = static_cast<int>(candidates.size());
  std::vector<std::uint32_t> accepted;  // masks with target in closure
  std::set<std::vector<int>> out;
  // by increasing popcount so minimality is a check against accepted masks
  std::vector<std::uint32_t> order;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) order.push_back(mask);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return __builtin_popcount(a) < __builtin_popcount(b);
                   });
  for (std::uint32_t mask : order) {
    std::vector<int> attrs;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) attrs.push_back(candidates[i]);
    if (!implies_target(t, attrs, target)) continue;
    bool has_smaller = false;
    for (std::uint32_t acc : accepted)
      if ((acc & mask) == acc && acc != mask) {
        has_smaller = true;
        break;
      }
    if (has_smaller) continue;
    accepted.push_back(mask);
    out.insert(std::move(attrs));
  }
  return out;
}

/// Minimal edges of a family by pairwise comparison, survivors in
/// first-occurrence order (duplicates keep the first copy).
inline std::vector<std::vector<int>> minimal_edges(
    const std::vector<std::vector<int>>& raw) {
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    for (int v : small)
      if (std::find(big.begin(), big.end(), v) == big.end()) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < raw.size() && keep; ++j) {
      if (j == i) continue;
      const bool j_in_i = contains(raw[i], raw[j]);
      const bool i_in_j = contains(raw[j], raw[i]);
      if (j_in_i && !i_in_j) keep = false;            // raw[j] strictly below
      if (j_in_i && i_in_j && j < i) keep = false;    // duplicate, keep first
    }
    if (keep) out.push_back(raw[i]);
  }
  return out;
}

}  // namespace oracles
