#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hibound/error.hpp"
#include "hibound/vertex_set.hpp"

namespace hibound {

/// Sorted list of distinct vertex ids.
using Edge = std::vector<Vertex>;

/// degrees[v] is the number of edges containing v.
struct DegreeSequence {
  std::vector<std::uint64_t> degrees;

  std::uint64_t sum() const noexcept;
  std::size_t size() const noexcept { return degrees.size(); }
};

struct IndependentSet {
  std::vector<Vertex> vertices;
};

/// A k-uniform hypergraph on vertices {0, ..., n-1}. Immutable once built;
/// edges are kept in canonical order (each edge sorted, the edge list sorted
/// lexicographically) together with one bit mask per edge.
class Hypergraph {
 public:
  /// Validates and canonicalises. Vertex order inside an edge is irrelevant.
  /// Throws Error on EdgeWrongSize, VertexOutOfRange, DuplicateEdge, or
  /// InvalidParams (n == 0 or k < 2).
  static Hypergraph from_edges(std::uint32_t n, std::uint32_t k,
                               std::vector<Edge> edges);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t m() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<VertexSet>& edge_masks() const noexcept { return masks_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph(std::uint32_t n, std::uint32_t k, std::vector<Edge> edges);

  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> masks_;
};

/// Checks the hypergraph invariants on raw input without building anything.
/// Returns the first problem found, or nullopt when the input is valid.
std::optional<Error> validate(std::uint32_t n, std::uint32_t k,
                              std::span<const Edge> edges);

// Generators. All throw Error(InvalidParams) when n == 0 or k < 2.

/// All C(n, k) k-subsets.
Hypergraph complete(std::uint32_t n, std::uint32_t k);

Hypergraph empty(std::uint32_t n, std::uint32_t k);

/// complete(n, k) without the edge {0, ..., k-1}.
Hypergraph complete_minus_one_edge(std::uint32_t n, std::uint32_t k);

/// A uniformly random m-subset of the k-subsets of {0, ..., n-1}. Output is a
/// pure function of the arguments.
Hypergraph random_uniform(std::uint32_t n, std::uint32_t k, std::uint64_t m,
                          std::uint64_t seed);

/// A random d-regular k-uniform hypergraph. Throws InfeasibleParams when
/// k does not divide n*d or d > C(n-1, k-1), AttemptsExhausted when no
/// attempt succeeds.
Hypergraph random_regular(std::uint32_t n, std::uint32_t k, std::uint64_t d,
                          std::uint64_t seed, std::uint32_t max_attempts = 64);

DegreeSequence degree_sequence(const Hypergraph& h);

/// Calls `fn` with every k-subset of {0, ..., n-1} in lexicographic order.
template <class Fn>
void for_each_k_subset(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return;
  Edge comb(k);
  for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    fn(static_cast<const Edge&>(comb));
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return;
    ++comb[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j)
      comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace hibound
