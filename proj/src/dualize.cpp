#include "impmine/dualize.hpp"

#include <limits>
#include <vector>

namespace impmine {

namespace {

constexpr std::size_t kBruteForceVertexLimit = 20;

bool is_minimal_transversal(const Hypergraph& h, const Bitset& s) {
  for (const Bitset& e : h.edges)
    if (!e.intersects(s)) return false;
  // every member needs a critical edge
  bool ok = true;
  s.for_each_set([&](std::size_t v) {
    if (!ok) return;
    bool critical = false;
    for (const Bitset& e : h.edges) {
      if (e.test(v) && e.count_and(s) == 1) {
        critical = true;
        break;
      }
    }
    ok = critical;
  });
  return ok;
}

}  // namespace

DualizeResult dualize_bruteforce(const Hypergraph& h,
                                 const TransversalSink& sink) {
  const std::size_t nv = h.vertices.size();
  if (nv > kBruteForceVertexLimit)
    throw CapacityError("brute-force dualization limited to " +
                        std::to_string(kBruteForceVertexLimit) +
                        " vertices, got " + std::to_string(nv));
  DualizeResult res;
  if (h.unsatisfiable) return res;

  Bitset buf(nv);
  std::vector<std::size_t> comb;
  for (std::size_t k = 0; k <= nv; ++k) {
    comb.resize(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      buf.reset_all();
      for (std::size_t v : comb) buf.set(v);
      if (is_minimal_transversal(h, buf)) {
        ++res.emitted;
        if (sink(buf) == SinkAction::kStop) {
          res.stopped = true;
          return res;
        }
      }
      // next k-combination in lexicographic order
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == nv - k + (i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return res;
}

namespace {

struct RsSearch {
  const Hypergraph& h;
  const TransversalSink& sink;
  MemoryAccountant* acc;

  std::vector<Bitset> edges_of_vertex;  // vertex -> incident edge set
  Bitset chosen;                        // current partial transversal
  Bitset cand;                          // vertices still allowed
  Bitset uncov;                         // edges not yet hit
  std::size_t edge_words = 0;
  DualizeResult result;

  explicit RsSearch(const Hypergraph& hg, const TransversalSink& s,
                    MemoryAccountant* a)
      : h(hg), sink(s), acc(a) {
    const std::size_t nv = h.vertices.size();
    const std::size_t ne = h.edges.size();
    edges_of_vertex.assign(nv, Bitset(ne));
    for (std::size_t e = 0; e < ne; ++e)
      h.edges[e].for_each_set(
          [&](std::size_t v) { edges_of_vertex[v].set(e); });
    chosen = Bitset(nv);
    cand = Bitset(nv, true);
    uncov = Bitset(ne, true);
    edge_words = uncov.word_count();
  }

  void node() {
    if (result.stopped) return;
    if (uncov.none()) {
      ++result.emitted;
      if (sink(chosen) == SinkAction::kStop) result.stopped = true;
      return;
    }

    // uncovered edge with the fewest candidates left, ties to lowest index
    std::size_t best = 0;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    uncov.for_each_set([&](std::size_t e) {
      std::size_t c = h.edges[e].count_and(cand);
      if (c < best_count) {
        best_count = c;
        best = e;
      }
    });
    if (best_count == 0) return;  // dead branch

    Bitset branch_set = h.edges[best] & cand;

    // critical edges of each chosen vertex under the current set
    const std::vector<int> members = chosen.to_indices();
    std::vector<Bitset> crit(members.size(), Bitset(h.edges.size()));
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (h.edges[e].count_and(chosen) != 1) continue;
      const int u = (h.edges[e] & chosen).find_first();
      for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] == u) {
          crit[i].set(e);
          break;
        }
    }

    // per-level working set: branch set, covered-edge buffer, critical sets,
    // and the vertex slot itself
    ScopedCharge level_charge(
        acc, branch_set.word_count() + edge_words +
                 members.size() * edge_words + 1);

    const std::vector<int> branch = branch_set.to_indices();
    Bitset covered(h.edges.size());
    for (int v : branch) {
      cand.reset(v);  // stays off for the remaining siblings
      bool ok = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (crit[i].is_subset_of(edges_of_vertex[v])) {
          ok = false;  // v would strip the last critical edge of members[i]
          break;
        }
      }
      if (!ok) continue;
      covered = uncov & edges_of_vertex[v];
      uncov.and_not_assign(edges_of_vertex[v]);
      chosen.set(v);
      node();
      chosen.reset(v);
      uncov |= covered;
      if (result.stopped) break;
    }
    cand |= branch_set;  // restore for the caller
  }
};

}  // namespace

DualizeResult dualize_reverse_search(const Hypergraph& h,
                                     const TransversalSink& sink,
                                     MemoryAccountant* acc) {
  if (h.unsatisfiable) return {};
  RsSearch search(h, sink, acc);
  search.node();
  return search.result;
}

}  // namespace impmine
