#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hibound/bounds.hpp"

namespace hibound {

enum class MPolicy {
  /// Every edge set of every (n, k) cell with C(n, k) <= exhaustive_edge_cap;
  /// larger cells fall back to random sampling.
  Exhaustive,
  /// instances_per_cell random instances per (n, k), m uniform in [0, C(n,k)].
  RandomSample,
};

struct SweepSpec {
  std::uint32_t n_min = 4;
  std::uint32_t n_max = 8;
  std::uint32_t k_min = 2;
  std::uint32_t k_max = 3;
  MPolicy m_policy = MPolicy::RandomSample;
  std::uint32_t instances_per_cell = 100;
  std::uint64_t seed = 0;
  bool with_alpha = true;
  std::uint64_t alpha_budget = 10'000'000;
  /// When set, instances are d-regular rather than uniform in m.
  std::optional<std::uint64_t> regular_degree;
  std::uint64_t exhaustive_edge_cap = 20;
  /// Worker threads; 0 means one per hardware thread.
  std::uint32_t threads = 1;
};

/// Throws Error(InvalidParams) on empty ranges, k < 2, n == 0,
/// instances_per_cell == 0, or exhaustive_edge_cap > 30.
void validate(const SweepSpec& spec);

struct ValueRange {
  std::uint64_t present = 0;  // instances that had a value
  std::uint32_t min = 0;
  std::uint32_t max = 0;

  void add(std::uint32_t v);
  void merge(const ValueRange& o);
};

inline constexpr std::size_t kBoundCount = 5;

struct SweepCell {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t instances = 0;
  std::array<ValueRange, kBoundCount> bounds;  // indexed by BoundKind
  ValueRange alpha;
};

/// A lower bound that exceeded the exact independence number.
struct Violation {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t m = 0;
  BoundKind bound = BoundKind::Ell;
  std::uint32_t value = 0;
  std::uint32_t alpha = 0;
  std::string instance;  // serialized hypergraph
};

/// first vs second over instances where both are present; a win means the
/// first bound is strictly larger (better).
struct DominanceCount {
  BoundKind first = BoundKind::Ell;
  BoundKind second = BoundKind::Ell;
  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
  std::uint64_t losses = 0;
};

struct Flagged {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t m = 0;
  std::string reason;
};

struct SweepResult {
  SweepSpec spec;
  std::uint64_t instances = 0;
  std::vector<SweepCell> cells;  // sorted by (n, k, m)
  std::vector<Violation> violations;
  std::vector<DominanceCount> dominance;  // all 10 unordered pairs
  std::vector<Flagged> flagged;

  bool ok() const noexcept { return violations.empty(); }
  const DominanceCount& dominance_of(BoundKind first, BoundKind second) const;
};

/// Deterministic for a given spec: the thread count changes nothing but
/// wall time.
SweepResult run_sweep(const SweepSpec& spec);

// ---------------------------------------------------------------------------
// Reproduction of the worked comparisons between ell and the other bounds.

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;
  std::vector<std::string> failures;
};

struct ExampleReport {
  std::vector<CheckResult> checks;
  /// First n >= 10 at which the CPS sum of K^3_n minus an edge is below 2.
  std::optional<std::uint32_t> cps_threshold;

  bool passed() const noexcept;
};

/// For each k in ks, n in [k, n_max] and integer m with
/// (n/k)^k <= m < C(n, k): turan_spencer < k <= ell.
CheckResult check_ts_below_k(const std::vector<std::uint32_t>& ks,
                             std::uint32_t n_max);

/// For k = 3, n in [n_min, n_max] and integer m with
/// n^3/108 <= m < (n-2)(n-3)(n-4)/60: turan_spencer < 5 <= ell.
CheckResult check_ts_below_five(std::uint32_t n_min, std::uint32_t n_max);

/// The 7-regular 3-uniform and 6-regular 4-uniform hypergraphs on 6 vertices
/// give (caro_tuza, ell) = (2, 3) and (3, 4).
CheckResult check_regular_ct_pairs(std::uint64_t seed = 0);

/// K^3_n minus one edge: cps == 2 from the threshold through n_max, ell == 3
/// throughout, and alpha == 3 from the exact solver up to alpha_n_max.
CheckResult check_cps_minus_one_edge(std::uint32_t n_min, std::uint32_t n_max,
                                     std::uint32_t alpha_n_max,
                                     std::optional<std::uint32_t>* threshold =
                                         nullptr);

/// All four checks with their standard ranges.
ExampleReport run_example_checks();

}  // namespace hibound
