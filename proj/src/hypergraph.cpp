#include "hibound/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "hibound/exact.hpp"
#include "random.hpp"

namespace hibound {

namespace {

void require_params(std::uint32_t n, std::uint32_t k) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "n must be positive");
  if (k < 2) throw Error(ErrorCode::InvalidParams, "k must be at least 2");
}

std::string edge_text(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

// Largest edge universe enumerated outright when sampling.
constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 22;

Edge random_k_subset(std::uint32_t n, std::uint32_t k, detail::Rng& rng) {
  // Floyd's algorithm: k draws, no rejection.
  std::set<Vertex> chosen;
  for (std::uint32_t j = n - k; j < n; ++j) {
    auto t = static_cast<Vertex>(detail::uniform_below(rng, j + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return Edge(chosen.begin(), chosen.end());
}

std::vector<Edge> all_k_subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<Edge> out;
  for_each_k_subset(n, k, [&](const Edge& e) { out.push_back(e); });
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EdgeWrongSize: return "EdgeWrongSize";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::AttemptsExhausted: return "AttemptsExhausted";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WrongUniformity: return "WrongUniformity";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::EdgeArity: return "EdgeArity";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdgeLine: return "DuplicateEdgeLine";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::uint64_t DegreeSequence::sum() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

std::optional<Error> validate(std::uint32_t n, std::uint32_t k,
                              std::span<const Edge> edges) {
  if (n == 0) return Error(ErrorCode::InvalidParams, "n must be positive");
  if (k < 2) return Error(ErrorCode::InvalidParams, "k must be at least 2");
  std::set<Edge> seen;
  for (const Edge& raw : edges) {
    Edge e = raw;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() != k)
      return Error(ErrorCode::EdgeWrongSize,
                   "edge " + edge_text(raw) + " does not have " +
                       std::to_string(k) + " distinct vertices");
    if (e.back() >= n)
      return Error(ErrorCode::VertexOutOfRange,
                   "edge " + edge_text(raw) + " has a vertex >= n = " +
                       std::to_string(n));
    if (!seen.insert(std::move(e)).second)
      return Error(ErrorCode::DuplicateEdge,
                   "edge " + edge_text(raw) + " appears more than once");
  }
  return std::nullopt;
}

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k,
                       std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  masks_.reserve(edges_.size());
  for (const Edge& e : edges_) masks_.push_back(VertexSet::of(n_, e));
}

Hypergraph Hypergraph::from_edges(std::uint32_t n, std::uint32_t k,
                                  std::vector<Edge> edges) {
  if (auto err = validate(n, k, edges)) throw *err;
  for (Edge& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph complete(std::uint32_t n, std::uint32_t k) {
  require_params(n, k);
  if (n < k)
    throw Error(ErrorCode::InvalidParams, "complete hypergraph needs n >= k");
  return Hypergraph::from_edges(n, k, all_k_subsets(n, k));
}

Hypergraph empty(std::uint32_t n, std::uint32_t k) {
  require_params(n, k);
  return Hypergraph::from_edges(n, k, {});
}

Hypergraph complete_minus_one_edge(std::uint32_t n, std::uint32_t k) {
  require_params(n, k);
  if (n < k)
    throw Error(ErrorCode::InvalidParams, "complete hypergraph needs n >= k");
  auto edges = all_k_subsets(n, k);
  edges.erase(edges.begin());  // lexicographically first is {0, ..., k-1}
  return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph random_uniform(std::uint32_t n, std::uint32_t k, std::uint64_t m,
                          std::uint64_t seed) {
  require_params(n, k);
  const BigInt total = binomial(n, k);
  if (BigInt(m) > total)
    throw Error(ErrorCode::InvalidParams,
                "m = " + std::to_string(m) + " exceeds C(n, k) = " +
                    total.str());
  detail::Rng rng(detail::mix_seed(seed, n, k, m));
  if (total <= kEnumerateLimit) {
    auto pool = all_k_subsets(n, k);
    // Partial Fisher-Yates: the first m slots are a uniform m-subset.
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uint64_t j = i + detail::uniform_below(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return Hypergraph::from_edges(n, k, std::move(pool));
  }
  if (BigInt(m) * 2 > total)
    throw Error(ErrorCode::InvalidParams,
                "dense sampling over more than 2^22 candidate edges is not "
                "supported");
  std::set<Edge> chosen;
  while (chosen.size() < m) chosen.insert(random_k_subset(n, k, rng));
  return Hypergraph::from_edges(n, k, {chosen.begin(), chosen.end()});
}

namespace {

// Indices of edges that repeat a vertex or duplicate an earlier edge.
std::vector<std::size_t> conflicting_edges(const std::vector<Edge>& edges) {
  std::vector<std::size_t> bad;
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      bad.push_back(i);
      continue;
    }
    if (!seen.emplace(std::move(e), i).second) bad.push_back(i);
  }
  return bad;
}

// Stub matching: every vertex contributes d stubs, stubs are shuffled and
// cut into edges, and conflicting edges are repaired by random stub swaps
// that never increase the conflict count.
std::optional<std::vector<Edge>> try_regular(std::uint32_t n, std::uint32_t k,
                                             std::uint64_t d,
                                             detail::Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  detail::shuffle(stubs.begin(), stubs.end(), rng);

  const std::size_t m = stubs.size() / k;
  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i)
    edges[i].assign(stubs.begin() + i * k, stubs.begin() + (i + 1) * k);

  auto bad = conflicting_edges(edges);
  const std::uint64_t max_steps = 200 * static_cast<std::uint64_t>(m) * k + 1000;
  for (std::uint64_t step = 0; !bad.empty() && step < max_steps; ++step) {
    if (m < 2) break;
    std::size_t e = bad[detail::uniform_below(rng, bad.size())];
    std::size_t f = detail::uniform_below(rng, m - 1);
    if (f >= e) ++f;
    std::size_t p = detail::uniform_below(rng, k);
    std::size_t q = detail::uniform_below(rng, k);
    std::swap(edges[e][p], edges[f][q]);
    auto after = conflicting_edges(edges);
    if (after.size() <= bad.size())
      bad = std::move(after);
    else
      std::swap(edges[e][p], edges[f][q]);
  }
  if (!bad.empty()) return std::nullopt;
  return edges;
}

}  // namespace

Hypergraph random_regular(std::uint32_t n, std::uint32_t k, std::uint64_t d,
                          std::uint64_t seed, std::uint32_t max_attempts) {
  require_params(n, k);
  if ((static_cast<BigInt>(n) * d) % k != 0)
    throw Error(ErrorCode::InfeasibleParams,
                "k = " + std::to_string(k) + " does not divide n*d = " +
                    (static_cast<BigInt>(n) * d).str());
  const BigInt max_degree = binomial(n - 1, k - 1);
  if (BigInt(d) > max_degree)
    throw Error(ErrorCode::InfeasibleParams,
                "d = " + std::to_string(d) + " exceeds C(n-1, k-1) = " +
                    max_degree.str());
  if (d == 0) return empty(n, k);
  if (max_degree == d) return complete(n, k);

  // Dense targets are built as the complement of a sparse regular one.
  const auto full = static_cast<std::uint64_t>(max_degree);
  const bool complement = 2 * d > full;
  const std::uint64_t target = complement ? full - d : d;

  detail::Rng rng(detail::mix_seed(seed, n, k, d));
  for (std::uint32_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = try_regular(n, k, target, rng);
    if (!edges) continue;
    if (!complement) return Hypergraph::from_edges(n, k, std::move(*edges));
    std::set<Edge> drop;
    for (Edge& e : *edges) {
      std::sort(e.begin(), e.end());
      drop.insert(std::move(e));
    }
    std::vector<Edge> kept;
    for_each_k_subset(n, k, [&](const Edge& e) {
      if (!drop.count(e)) kept.push_back(e);
    });
    return Hypergraph::from_edges(n, k, std::move(kept));
  }
  throw Error(ErrorCode::AttemptsExhausted,
              "no " + std::to_string(d) + "-regular hypergraph found in " +
                  std::to_string(max_attempts) + " attempts");
}

DegreeSequence degree_sequence(const Hypergraph& h) {
  DegreeSequence ds;
  ds.degrees.assign(h.n(), 0);
  for (const Edge& e : h.edges())
    for (Vertex v : e) ++ds.degrees[v];
  return ds;
}

}  // namespace hibound
