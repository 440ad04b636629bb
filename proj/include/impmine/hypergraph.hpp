#pragma once

#include <vector>

#include "impmine/bitset.hpp"

namespace impmine {

/// Hypergraph handed to the dualization engines. Edges are bitsets over
/// vertex positions (0..vertices.size()-1); `vertices` maps positions back to
/// attribute ids. After construction the edge family is an antichain of
/// non-empty sets. `unsatisfiable` records that some raw edge was empty, in
/// which case no transversal exists and `edges` is left empty.
struct Hypergraph {
  std::vector<int> vertices;
  std::vector<Bitset> edges;
  bool unsatisfiable = false;
};

/// Drops duplicate edges and edges that contain another edge. Survivors keep
/// their first-occurrence order.
std::vector<Bitset> minimize_edges(const std::vector<Bitset>& raw);

}  // namespace impmine
