#include "hibound/exact_alpha.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "hibound/bounds.hpp"

namespace hibound {

bool is_independent(const Hypergraph& h, const VertexSet& s) {
  for (const VertexSet& e : h.edge_masks())
    if (e.subset_of(s)) return false;
  return true;
}

bool is_independent(const Hypergraph& h, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (v >= h.n()) return false;
  return is_independent(h, VertexSet::of(h.n(), s));
}

namespace {

template <std::size_t W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto x : w) c += static_cast<std::uint32_t>(std::popcount(x));
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  std::uint32_t first() const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(w[i]));
    return UINT32_MAX;
  }
  Mask without(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Mask& operator|=(const Mask& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
};

template <std::size_t W>
class Search {
 public:
  Search(const Hypergraph& h, std::uint64_t budget, std::uint32_t floor)
      : budget_(budget), best_(floor) {
    const std::uint32_t n = h.n();
    const DegreeSequence ds = degree_sequence(h);
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return ds.degrees[a] > ds.degrees[b];
    });
    std::vector<std::uint32_t> position(n);
    for (std::uint32_t p = 0; p < n; ++p) position[order_[p]] = p;

    // others_[p]: for each edge through position p, the rest of the edge.
    others_.resize(n);
    for (const Edge& e : h.edges()) {
      Mask<W> full;
      for (Vertex v : e) full.set(position[v]);
      for (Vertex v : e) {
        Mask<W> rest = full;
        rest.reset(position[v]);
        others_[position[v]].push_back(rest);
      }
    }
    for (std::uint32_t p = 0; p < n; ++p) all_.set(p);
  }

  AlphaResult run() {
    Mask<W> none;
    recurse(none, 0, all_);
    AlphaResult out;
    out.nodes_explored = nodes_;
    out.exhausted = !aborted_;
    out.alpha = static_cast<std::uint32_t>(witness_.size());
    out.witness.vertices = witness_;
    std::sort(out.witness.vertices.begin(), out.witness.vertices.end());
    return out;
  }

 private:
  void recurse(const Mask<W>& chosen, std::uint32_t size,
               const Mask<W>& candidates) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      nodes_ = budget_;
      return;
    }
    if (size > best_) {
      best_ = size;
      record(chosen);
    }
    if (size + candidates.count() <= best_) return;

    const std::uint32_t p = candidates.first();
    Mask<W> rest = candidates;
    rest.reset(p);

    Mask<W> with = chosen;
    with.set(p);
    Mask<W> forbidden;
    for (const Mask<W>& other : others_[p]) {
      // Exactly one vertex missing: adding it would complete the edge.
      Mask<W> missing = other.without(with);
      if (missing.count() == 1) forbidden |= missing;
    }
    recurse(with, size + 1, rest.without(forbidden));
    recurse(chosen, size, rest);
  }

  void record(const Mask<W>& chosen) {
    witness_.clear();
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = chosen.w[i];
      while (x) {
        witness_.push_back(order_[i * 64 + std::countr_zero(x)]);
        x &= x - 1;
      }
    }
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::uint32_t best_;
  std::vector<Vertex> witness_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Mask<W>>> others_;
  Mask<W> all_;
};

template <std::size_t W>
AlphaResult solve(const Hypergraph& h, std::uint64_t budget,
                  std::uint32_t floor) {
  return Search<W>(h, budget, floor).run();
}

AlphaResult dispatch(const Hypergraph& h, std::uint64_t budget,
                     std::uint32_t floor) {
  const std::uint32_t n = h.n();
  if (n <= 64) return solve<1>(h, budget, floor);
  if (n <= 128) return solve<2>(h, budget, floor);
  if (n <= 256) return solve<4>(h, budget, floor);
  if (n <= 512) return solve<8>(h, budget, floor);
  return solve<16>(h, budget, floor);
}

}  // namespace

AlphaResult alpha_exact(const Hypergraph& h, const SolverConfig& cfg) {
  if (cfg.node_budget == 0)
    throw Error(ErrorCode::InvalidParams, "node budget must be positive");
  if (h.n() > 1024)
    throw Error(ErrorCode::InvalidParams, "exact solver supports n <= 1024");

  if (!cfg.use_ell_pruning) return dispatch(h, cfg.node_budget, 0);

  // Some independent set has size >= ell, so only larger-than-(ell-1)
  // sets need to be searched for.
  const std::uint32_t ell = ell_bound(h.n(), h.m(), h.k());
  AlphaResult r = dispatch(h, cfg.node_budget, ell > 0 ? ell - 1 : 0);
  if (r.exhausted && r.alpha < ell) {
    // Nothing of size >= ell exists; the floor was wrong, so search plainly.
    AlphaResult plain = dispatch(h, cfg.node_budget, 0);
    plain.nodes_explored += r.nodes_explored;
    return plain;
  }
  return r;
}

}  // namespace hibound
