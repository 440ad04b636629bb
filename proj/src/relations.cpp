#include "impmine/relations.hpp"

namespace impmine {

namespace {

// Lowest row index per distinct intent (resp. column index per extent).
std::vector<int> row_representatives(const BinaryTable& t) {
  std::vector<int> rep(t.n_rows());
  for (int r = 0; r < t.n_rows(); ++r) {
    rep[r] = r;
    for (int s = 0; s < r; ++s) {
      if (t.row(s) == t.row(r)) {
        rep[r] = s;
        break;
      }
    }
  }
  return rep;
}

std::vector<int> col_representatives(const BinaryTable& t) {
  std::vector<int> rep(t.n_cols());
  for (int c = 0; c < t.n_cols(); ++c) {
    rep[c] = c;
    for (int d = 0; d < c; ++d) {
      if (t.column(d) == t.column(c)) {
        rep[c] = d;
        break;
      }
    }
  }
  return rep;
}

}  // namespace

std::vector<Bitset> compute_up_arrow(const BinaryTable& t) {
  const auto rep = row_representatives(t);
  std::vector<Bitset> up(t.n_rows(), Bitset(t.n_cols()));
  for (int u = 0; u < t.n_rows(); ++u) {
    if (rep[u] != u) continue;
    // attributes held by every strictly larger intent; all attributes when
    // no such row exists
    Bitset common(t.n_cols(), true);
    for (int v = 0; v < t.n_rows(); ++v) {
      if (v != u && t.row(u).is_proper_subset_of(t.row(v))) common &= t.row(v);
    }
    common.and_not_assign(t.row(u));
    up[u] = std::move(common);
  }
  return up;
}

std::vector<Bitset> compute_down_arrow(const BinaryTable& t) {
  const auto rep = col_representatives(t);
  // one pass per attribute, transposed into per-row sets at the end
  std::vector<Bitset> down_col(t.n_cols(), Bitset(t.n_rows()));
  for (int y = 0; y < t.n_cols(); ++y) {
    if (rep[y] != y) continue;
    Bitset common(t.n_rows(), true);
    for (int z = 0; z < t.n_cols(); ++z) {
      if (z != y && t.column(y).is_proper_subset_of(t.column(z)))
        common &= t.column(z);
    }
    common.and_not_assign(t.column(y));
    down_col[y] = std::move(common);
  }
  std::vector<Bitset> down(t.n_rows(), Bitset(t.n_cols()));
  for (int y = 0; y < t.n_cols(); ++y)
    down_col[y].for_each_set([&](std::size_t r) { down[r].set(y); });
  return down;
}

ArrowRelations compute_arrows(const BinaryTable& t) {
  return {compute_up_arrow(t), compute_down_arrow(t)};
}

std::vector<std::pair<int, int>> ArrowRelations::up_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < up.size(); ++r)
    up[r].for_each_set(
        [&](std::size_t a) { out.emplace_back(static_cast<int>(r), static_cast<int>(a)); });
  return out;
}

std::vector<std::pair<int, int>> ArrowRelations::down_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < down.size(); ++r)
    down[r].for_each_set(
        [&](std::size_t a) { out.emplace_back(static_cast<int>(r), static_cast<int>(a)); });
  return out;
}

TargetContext compute_d_row(const BinaryTable& t, int target) {
  const ArrowRelations arrows = compute_arrows(t);
  TargetContext ctx;
  ctx.target = target;
  ctx.d_row_bits = Bitset(t.n_cols());
  for (int u = 0; u < t.n_rows(); ++u) {
    if (!arrows.up[u].test(target)) continue;
    ctx.up_rows.push_back(u);
    ctx.maximal_sets.push_back(t.row(u));
    ctx.d_row_bits |= arrows.down[u];
  }
  ctx.d_row_bits.reset(target);
  ctx.d_row = ctx.d_row_bits.to_indices();
  return ctx;
}

Hypergraph build_hypergraph(const TargetContext& ctx) {
  Hypergraph h;
  h.vertices = ctx.d_row;
  const std::size_t nv = h.vertices.size();
  std::vector<Bitset> raw;
  raw.reserve(ctx.maximal_sets.size());
  for (const Bitset& m : ctx.maximal_sets) {
    Bitset edge(nv);
    for (std::size_t i = 0; i < nv; ++i)
      if (!m.test(h.vertices[i])) edge.set(i);
    if (edge.none()) {
      h.unsatisfiable = true;
      h.edges.clear();
      return h;
    }
    raw.push_back(std::move(edge));
  }
  h.edges = minimize_edges(raw);
  return h;
}

}  // namespace impmine
