#include "impmine/hypergraph.hpp"

namespace impmine {

std::vector<Bitset> minimize_edges(const std::vector<Bitset>& raw) {
  std::vector<Bitset> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < raw.size() && keep; ++j) {
      if (j == i) continue;
      if (raw[j].is_proper_subset_of(raw[i])) keep = false;
      // an exact duplicate survives only at its first occurrence
      if (j < i && raw[j] == raw[i]) keep = false;
    }
    if (keep) out.push_back(raw[i]);
  }
  return out;
}

}  // namespace impmine
