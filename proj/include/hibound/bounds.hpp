#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hibound/exact.hpp"
#include "hibound/hypergraph.hpp"

namespace hibound {

/// x (x+1) ... (x+k-1); 1 when k == 0.
BigInt rising_factorial(const BigInt& x, std::uint32_t k);

/// x (x-1) ... (x-k+1); 1 when k == 0.
BigInt falling_factorial(const BigInt& x, std::uint32_t k);

/// f(i) = rising(n-i, k) / falling(i+1, k), the ratio of the number of
/// (i+1)-subsets to the number of (i-k+1)-subsets of an n-set. Throws
/// DomainError unless n >= k >= 2 and k-1 <= i <= n.
ExactRational f_eval(std::uint32_t n, std::uint32_t k, std::uint32_t i);

/// Same value as f_eval, computed as C(n, i+1) / C(n, i-k+1).
ExactRational f_eval_binomial(std::uint32_t n, std::uint32_t k,
                              std::uint32_t i);

/// Lower bound on the independence number from (n, m, k) alone: the least
/// i in {k-1, ..., n} with f(i) <= m. Decided by exact integer
/// cross-multiplication over an ascending scan. n < k forces m == 0 and
/// yields n. Throws InvalidParams when m > C(n, k) or k < 2.
std::uint32_t ell_bound(std::uint32_t n, std::uint64_t m, std::uint32_t k);

/// ell_bound via bisection over i; f is strictly decreasing on its domain.
std::uint32_t ell_bound_bisect(std::uint32_t n, std::uint64_t m,
                               std::uint32_t k);

/// ell_bound(n, m, 2) from the positive root of
/// (m-1) i^2 + (m+2n+1) i = n^2 + n, corrected with the exact inequality.
/// m == 0 and m == 1 are handled directly. Requires n >= 2.
std::uint32_t ell_closed_form_k2(std::uint32_t n, std::uint64_t m);

/// ceil(n^2 / (2m + n)) for graphs.
std::uint32_t turan_bound(std::uint32_t n, std::uint64_t m);

/// ceil(((k-1)/k) n (n/(k m))^(1/(k-1))), defined only for k*m >= n.
/// Throws OutOfRange outside that range.
std::uint32_t turan_spencer_bound(std::uint32_t n, std::uint64_t m,
                                  std::uint32_t k);

/// True iff the Turan-Spencer value is <= r, i.e.
/// r^(k-1) k^k m >= n^k (k-1)^(k-1).
bool turan_spencer_at_most(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                           std::uint64_t r);

/// 1 / C(d + 1/(k-1), d) as an exact fraction.
ExactRational caro_tuza_term(std::uint64_t d, std::uint32_t k);

/// Exact sum of caro_tuza_term over all vertices.
ExactRational caro_tuza_sum(const DegreeSequence& degrees, std::uint32_t k);

std::uint32_t caro_tuza_bound(const DegreeSequence& degrees, std::uint32_t k);

struct CpsValue {
  std::uint32_t value = 0;
  double raw = 0.0;  // sum before the ceiling
  /// The raw sum lies within 1e-9 of an integer, so the ceiling cannot be
  /// trusted beyond the working precision.
  bool boundary_warning = false;
};

/// ceil((sqrt(pi)/2) * sum_v (d(v)+1)^(-1/2)) evaluated with 50 significant
/// digits. Throws WrongUniformity unless k == 3.
CpsValue cps_bound(const DegreeSequence& degrees, std::uint32_t k = 3);

// ---------------------------------------------------------------------------
// Per-instance report.

enum class BoundKind { Ell, Turan, TuranSpencer, CaroTuza, Cps };

inline constexpr BoundKind kAllBounds[] = {
    BoundKind::Ell, BoundKind::Turan, BoundKind::TuranSpencer,
    BoundKind::CaroTuza, BoundKind::Cps};

/// Report key: "ell", "turan", "turan_spencer", "caro_tuza", "cps".
const char* bound_key(BoundKind kind) noexcept;

/// Selection bit for a bound kind; combine with |.
constexpr unsigned bound_bit(BoundKind kind) noexcept {
  return 1u << static_cast<unsigned>(kind);
}
inline constexpr unsigned kAllBoundBits = 0x1f;

/// Either a value or the reason there is none.
struct BoundEntry {
  std::optional<std::uint32_t> value;
  std::string na_reason;
};

struct BoundReport {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t k = 0;
  std::uint32_t ell = 0;
  BoundEntry turan;
  BoundEntry turan_spencer;
  BoundEntry caro_tuza;
  BoundEntry cps;
  /// Set only when the exact solver finished within its budget.
  std::optional<std::uint32_t> alpha;
  bool alpha_requested = false;
  bool alpha_exhausted = false;
  /// Largest independent set found, exhausted or not.
  std::uint32_t alpha_best_found = 0;
  std::uint64_t alpha_nodes = 0;
  std::vector<std::string> warnings;

  const BoundEntry* entry(BoundKind kind) const noexcept;
  std::optional<std::uint32_t> value(BoundKind kind) const noexcept;
};

struct ReportOptions {
  unsigned bounds = kAllBoundBits;
  bool with_alpha = false;
  std::uint64_t alpha_budget = 100'000'000;
  bool use_ell_pruning = true;
};

/// Fills every requested bound that applies to `h`; inapplicable or
/// unrequested ones carry a reason instead of a value. ell is always
/// computed. A solver that runs out of budget leaves `alpha` empty and adds a
/// warning.
BoundReport compute_report(const Hypergraph& h, const ReportOptions& opts = {});

}  // namespace hibound
