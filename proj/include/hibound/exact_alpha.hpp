#pragma once

#include <cstdint>
#include <span>

#include "hibound/hypergraph.hpp"

namespace hibound {

struct SolverConfig {
  std::uint64_t node_budget = 100'000'000;
  /// Start the search from the lower bound ell, so only sets of size >= ell
  /// are looked for.
  bool use_ell_pruning = false;
};

struct AlphaResult {
  std::uint32_t alpha = 0;
  IndependentSet witness;
  std::uint64_t nodes_explored = 0;
  /// True iff the search tree was fully explored; otherwise `alpha` is only
  /// the size of the best set found.
  bool exhausted = false;
};

/// True iff no edge of `h` is contained in `s`.
bool is_independent(const Hypergraph& h, const VertexSet& s);
bool is_independent(const Hypergraph& h, std::span<const Vertex> s);

/// Maximum independent set by include/exclude branching over vertices in
/// descending-degree order. Adding a vertex removes every candidate that
/// would complete an edge; a branch is cut when the set plus all remaining
/// candidates cannot beat the incumbent. Supports n <= 1024.
AlphaResult alpha_exact(const Hypergraph& h, const SolverConfig& cfg = {});

}  // namespace hibound
