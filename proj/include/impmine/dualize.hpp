#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "impmine/accounting.hpp"
#include "impmine/hypergraph.hpp"

namespace impmine {

enum class SinkAction { kContinue, kStop };

/// Receives one minimal transversal per call, as a bitset over vertex
/// positions. The reference is only valid during the call; the engines reuse
/// the buffer and never retain an emitted set. Returning kStop aborts the
/// enumeration.
using TransversalSink = std::function<SinkAction(const Bitset&)>;

struct DualizeResult {
  std::uint64_t emitted = 0;
  bool stopped = false;  // sink requested an early stop
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle engine: tests every vertex subset by increasing size (ties broken
/// lexicographically by vertex position) against the transversal and
/// minimality definitions. Refuses hypergraphs with more than 20 vertices.
DualizeResult dualize_bruteforce(const Hypergraph& h,
                                 const TransversalSink& sink);

/// Streaming engine: depth-first search guided by critical hyperedges, after
/// the scheme used for large-scale dualization. At each node one uncovered
/// edge is selected (fewest remaining candidate vertices, ties to the lowest
/// edge index) and its candidate vertices are branched on in ascending order;
/// a vertex is added only if every chosen vertex keeps a critical edge, so
/// every leaf is a minimal transversal and each is reached exactly once.
/// Working storage is polynomial in |vertices| + |edges| and independent of
/// the number of transversals; per-level state is charged to `acc` when
/// given. Emission order is deterministic for a given hypergraph.
DualizeResult dualize_reverse_search(const Hypergraph& h,
                                     const TransversalSink& sink,
                                     MemoryAccountant* acc = nullptr);

}  // namespace impmine
