#pragma once

#include <vector>

#include "impmine/hypergraph.hpp"
#include "impmine/table.hpp"

namespace impmine {

/// The two maximality relations between objects and attributes, both disjoint
/// from the table relation itself. up[r] / down[r] hold the related
/// attributes of object r.
///
/// (u,x) is an up pair when u lacks x and every object whose intent strictly
/// contains u's intent has x. (u,y) is a down pair when u lacks y and u has
/// every attribute whose extent strictly contains y's extent. When several
/// rows share an intent (or columns an extent), only the lowest-index
/// representative carries pairs, so a duplicate row does not repeat its
/// class's maximal intent.
struct ArrowRelations {
  std::vector<Bitset> up;
  std::vector<Bitset> down;

  std::vector<std::pair<int, int>> up_pairs() const;
  std::vector<std::pair<int, int>> down_pairs() const;
};

std::vector<Bitset> compute_up_arrow(const BinaryTable& table);
std::vector<Bitset> compute_down_arrow(const BinaryTable& table);
ArrowRelations compute_arrows(const BinaryTable& table);

/// Everything the dualization stage needs about one target attribute: the
/// candidate antecedent attributes (the relation row of the target), the
/// up-arrow witnesses, and their intents (the maximal attribute sets that
/// avoid the target).
struct TargetContext {
  int target = 0;
  Bitset d_row_bits;                 // over attributes, target excluded
  std::vector<int> d_row;            // ascending
  std::vector<int> up_rows;          // ascending
  std::vector<Bitset> maximal_sets;  // intents of up_rows, aligned
};

TargetContext compute_d_row(const BinaryTable& table, int target);

/// Vertex set = the target's relation row; one raw edge per maximal set
/// (the vertices it misses). An empty raw edge marks the hypergraph
/// unsatisfiable; otherwise duplicate and superset edges are dropped.
Hypergraph build_hypergraph(const TargetContext& ctx);

}  // namespace impmine
