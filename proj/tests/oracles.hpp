#pragma once

// Reference implementations used only by tests. Each takes a different route
// from the library code it checks: Pascal's triangle instead of multiplicative
// binomials, plain subset enumeration instead of branch and bound, upward
// integer search instead of a float estimate plus correction.

#include <cmath>
#include <cstdint>
#include <vector>

#include "hibound/exact.hpp"
#include "hibound/hypergraph.hpp"

namespace oracle {

using hibound::BigInt;
using hibound::ExactRational;

/// C(n, r) from an additive Pascal triangle.
inline BigInt pascal(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(r) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = std::min(i, r); j >= 1; --j) row[j] += row[j - 1];
  return row[r];
}

/// f(i) = C(n, i+1) / C(n, i-k+1).
inline ExactRational f(std::uint32_t n, std::uint32_t k, std::uint32_t i) {
  return ExactRational(pascal(n, std::int64_t{i} + 1),
                       pascal(n, std::int64_t{i} - k + 1));
}

/// Least i in {k-1, ..., n} with f(i) <= m, by rational comparison.
inline std::uint32_t ell(std::uint32_t n, std::uint64_t m, std::uint32_t k) {
  if (n < k) return n;
  for (std::uint32_t i = k - 1; i <= n; ++i)
    if (f(n, k, i) <= ExactRational(BigInt(m))) return i;
  return n;
}

/// Turan-Spencer value as the least r >= 1 with
/// (n/k)^k ((k-1)/r)^(k-1) <= m, compared as exact rationals.
inline std::uint32_t turan_spencer(std::uint32_t n, std::uint64_t m,
                                   std::uint32_t k) {
  const ExactRational base{BigInt(n), BigInt(k)};
  ExactRational lhs_base = 1;
  for (std::uint32_t j = 0; j < k; ++j) lhs_base *= base;
  for (std::uint32_t r = 1;; ++r) {
    ExactRational lhs = lhs_base;
    const ExactRational q{BigInt(k - 1), BigInt(r)};
    for (std::uint32_t j = 0; j + 1 < k; ++j) lhs *= q;
    if (lhs <= ExactRational(BigInt(m))) return r;
  }
}

/// ceil(n^2 / (2m + n)) by counting.
inline std::uint32_t turan(std::uint32_t n, std::uint64_t m) {
  std::uint32_t r = 0;
  while (BigInt(r) * (2 * BigInt(m) + n) < BigInt(n) * n) ++r;
  return r;
}

/// C(x, d) for rational x via the falling product x (x-1) ... (x-d+1) / d!.
inline ExactRational general_binomial(const ExactRational& x, std::uint64_t d) {
  ExactRational acc = 1;
  for (std::uint64_t i = 0; i < d; ++i) acc *= (x - ExactRational(BigInt(i)));
  for (std::uint64_t i = 2; i <= d; ++i) acc /= ExactRational(BigInt(i));
  return acc;
}

inline ExactRational caro_tuza_sum(const std::vector<std::uint64_t>& degrees,
                                   std::uint32_t k) {
  ExactRational s = 0;
  for (auto d : degrees) {
    const ExactRational x =
        ExactRational(BigInt(d)) + ExactRational(BigInt(1), BigInt(k - 1));
    s += 1 / general_binomial(x, d);
  }
  return s;
}

inline long double cps_sum(const std::vector<std::uint64_t>& degrees) {
  long double s = 0;
  for (auto d : degrees) s += 1.0L / std::sqrt(static_cast<long double>(d) + 1);
  return std::sqrt(3.14159265358979323846264338327950288L) / 2 * s;
}

/// Membership counts straight from the edge list.
inline std::vector<std::uint64_t> degrees(const hibound::Hypergraph& h) {
  std::vector<std::uint64_t> d(h.n(), 0);
  for (hibound::Vertex v = 0; v < h.n(); ++v)
    for (const auto& e : h.edges())
      for (auto u : e)
        if (u == v) ++d[v];
  return d;
}

/// Independence number by checking every vertex subset (n <= 24).
inline std::uint32_t alpha_naive(const hibound::Hypergraph& h) {
  const std::uint32_t n = h.n();
  std::vector<std::uint64_t> edge_bits;
  for (const auto& e : h.edges()) {
    std::uint64_t b = 0;
    for (auto v : e) b |= std::uint64_t{1} << v;
    edge_bits.push_back(b);
  }
  std::uint32_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::uint32_t>(__builtin_popcountll(s));
    if (size <= best) continue;
    bool ok = true;
    for (auto b : edge_bits)
      if ((b & s) == b) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

/// Every k-uniform hypergraph on n vertices, as edge subsets of the complete
/// one (2^C(n,k) of them).
template <class Fn>
void for_each_hypergraph(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  std::vector<hibound::Edge> pool;
  hibound::for_each_k_subset(n, k, [&](const hibound::Edge& e) { pool.push_back(e); });
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<hibound::Edge> edges;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1u) edges.push_back(pool[i]);
    fn(hibound::Hypergraph::from_edges(n, k, std::move(edges)));
  }
}

}  // namespace oracle
