#include "hibound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hibound/exact_alpha.hpp"

namespace hibound {

namespace mp = boost::multiprecision;

BigInt rising_factorial(const BigInt& x, std::uint32_t k) {
  BigInt acc = 1;
  for (std::uint32_t j = 0; j < k; ++j) acc *= x + j;
  return acc;
}

BigInt falling_factorial(const BigInt& x, std::uint32_t k) {
  BigInt acc = 1;
  for (std::uint32_t j = 0; j < k; ++j) acc *= x - j;
  return acc;
}

namespace {

void require_f_domain(std::uint32_t n, std::uint32_t k, std::uint32_t i) {
  if (k < 2 || n < k)
    throw Error(ErrorCode::DomainError, "f requires n >= k >= 2");
  if (i + 1 < k || i > n)
    throw Error(ErrorCode::DomainError,
                "f(" + std::to_string(i) + ") is defined only for " +
                    std::to_string(k - 1) + " <= i <= " + std::to_string(n));
}

void require_ell_params(std::uint32_t n, std::uint64_t m, std::uint32_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidParams, "k must be at least 2");
  if (n == 0) throw Error(ErrorCode::InvalidParams, "n must be positive");
  if (BigInt(m) > binomial(n, k))
    throw Error(ErrorCode::InvalidParams,
                "m = " + std::to_string(m) + " exceeds C(n, k)");
}

// f(i) <= m, cleared of the denominator.
bool f_at_most(std::uint32_t n, std::uint64_t m, std::uint32_t k,
               std::uint32_t i) {
  return rising_factorial(n - i, k) <= BigInt(m) * falling_factorial(i + 1, k);
}

}  // namespace

ExactRational f_eval(std::uint32_t n, std::uint32_t k, std::uint32_t i) {
  require_f_domain(n, k, i);
  return ExactRational(rising_factorial(n - i, k), falling_factorial(i + 1, k));
}

ExactRational f_eval_binomial(std::uint32_t n, std::uint32_t k,
                              std::uint32_t i) {
  require_f_domain(n, k, i);
  return ExactRational(binomial(n, std::int64_t{i} + 1),
                       binomial(n, std::int64_t{i} - k + 1));
}

std::uint32_t ell_bound(std::uint32_t n, std::uint64_t m, std::uint32_t k) {
  require_ell_params(n, m, k);
  if (n < k) return n;
  for (std::uint32_t i = k - 1; i < n; ++i)
    if (f_at_most(n, m, k, i)) return i;
  return n;  // f(n) == 0
}

std::uint32_t ell_bound_bisect(std::uint32_t n, std::uint64_t m,
                               std::uint32_t k) {
  require_ell_params(n, m, k);
  if (n < k) return n;
  std::uint32_t lo = k - 1, hi = n;  // f_at_most(hi) always holds
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    if (f_at_most(n, m, k, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::uint32_t ell_closed_form_k2(std::uint32_t n, std::uint64_t m) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "n must be at least 2");
  require_ell_params(n, m, 2);
  if (m == 0) return n;
  if (m == 1) return (n + 1) / 2;

  // (m-1) i^2 + (m+2n+1) i >= n^2 + n  <=>  f(i) <= m
  const BigInt a = BigInt(m) - 1;
  const BigInt b = BigInt(m) + 2 * BigInt(n) + 1;
  const BigInt c = BigInt(n) * n + n;
  auto holds = [&](std::uint32_t i) { return (a * i + b) * i >= c; };

  const long double ma = static_cast<long double>(m) - 1;
  const long double mb = static_cast<long double>(m) + 2.0L * n + 1;
  const long double disc = 4.0L * ma * (static_cast<long double>(n) * n + n) +
                           mb * mb;
  const long double root = (std::sqrt(disc) - mb) / (2.0L * ma);

  auto candidate = static_cast<std::int64_t>(std::ceil(root));
  candidate = std::clamp<std::int64_t>(candidate, 1, n);
  auto i = static_cast<std::uint32_t>(candidate);
  while (i > 1 && holds(i - 1)) --i;
  while (!holds(i)) ++i;
  return i;
}

std::uint32_t turan_bound(std::uint32_t n, std::uint64_t m) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "n must be positive");
  const BigInt num = BigInt(n) * n;
  const BigInt den = 2 * BigInt(m) + n;
  return static_cast<std::uint32_t>((num + den - 1) / den);
}

bool turan_spencer_at_most(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                           std::uint64_t r) {
  const BigInt lhs =
      mp::pow(BigInt(r), k - 1) * mp::pow(BigInt(k), k) * BigInt(m);
  const BigInt rhs = mp::pow(BigInt(n), k) * mp::pow(BigInt(k - 1), k - 1);
  return lhs >= rhs;
}

std::uint32_t turan_spencer_bound(std::uint32_t n, std::uint64_t m,
                                  std::uint32_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidParams, "k must be at least 2");
  if (n == 0) throw Error(ErrorCode::InvalidParams, "n must be positive");
  if (BigInt(k) * m < n)
    throw Error(ErrorCode::OutOfRange,
                "turan_spencer requires m >= n/k");

  const long double ratio = static_cast<long double>(n) /
                            (static_cast<long double>(k) * m);
  const long double estimate = static_cast<long double>(k - 1) / k * n *
                               std::pow(ratio, 1.0L / (k - 1));
  auto r = static_cast<std::uint64_t>(
      std::max<long double>(1.0L, std::ceil(estimate)));
  while (r > 1 && turan_spencer_at_most(n, m, k, r - 1)) --r;
  while (!turan_spencer_at_most(n, m, k, r)) ++r;
  return static_cast<std::uint32_t>(r);
}

ExactRational caro_tuza_term(std::uint64_t d, std::uint32_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidParams, "k must be at least 2");
  // C(d + 1/(k-1), d) = prod_{j=1..d} ((k-1) j + 1) / ((k-1) j)
  BigInt num = 1, den = 1;
  for (std::uint64_t j = 1; j <= d; ++j) {
    const BigInt step = BigInt(k - 1) * j;
    num *= step;
    den *= step + 1;
  }
  return ExactRational(num, den);
}

ExactRational caro_tuza_sum(const DegreeSequence& degrees, std::uint32_t k) {
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  for (auto d : degrees.degrees) ++multiplicity[d];
  ExactRational sum = 0;
  for (auto [d, count] : multiplicity)
    sum += caro_tuza_term(d, k) * BigInt(count);
  return sum;
}

std::uint32_t caro_tuza_bound(const DegreeSequence& degrees, std::uint32_t k) {
  return static_cast<std::uint32_t>(ceil(caro_tuza_sum(degrees, k)));
}

CpsValue cps_bound(const DegreeSequence& degrees, std::uint32_t k) {
  if (k != 3)
    throw Error(ErrorCode::WrongUniformity, "cps requires k=3");
  using Float = mp::cpp_bin_float_50;
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  for (auto d : degrees.degrees) ++multiplicity[d];
  Float sum = 0;
  for (auto [d, count] : multiplicity)
    sum += Float(count) / mp::sqrt(Float(d) + 1);
  sum *= mp::sqrt(boost::math::constants::pi<Float>()) / 2;

  CpsValue out;
  out.raw = static_cast<double>(sum);
  const Float nearest = mp::round(sum);
  out.boundary_warning = mp::abs(sum - nearest) < Float("1e-9");
  out.value = static_cast<std::uint32_t>(mp::ceil(sum));
  return out;
}

// ---------------------------------------------------------------------------

const char* bound_key(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::Ell: return "ell";
    case BoundKind::Turan: return "turan";
    case BoundKind::TuranSpencer: return "turan_spencer";
    case BoundKind::CaroTuza: return "caro_tuza";
    case BoundKind::Cps: return "cps";
  }
  return "?";
}

const BoundEntry* BoundReport::entry(BoundKind kind) const noexcept {
  switch (kind) {
    case BoundKind::Ell: return nullptr;
    case BoundKind::Turan: return &turan;
    case BoundKind::TuranSpencer: return &turan_spencer;
    case BoundKind::CaroTuza: return &caro_tuza;
    case BoundKind::Cps: return &cps;
  }
  return nullptr;
}

std::optional<std::uint32_t> BoundReport::value(BoundKind kind) const noexcept {
  if (kind == BoundKind::Ell) return ell;
  return entry(kind)->value;
}

BoundReport compute_report(const Hypergraph& h, const ReportOptions& opts) {
  BoundReport r;
  r.n = h.n();
  r.m = h.m();
  r.k = h.k();
  r.ell = ell_bound(r.n, r.m, r.k);

  const auto wanted = [&](BoundKind kind) {
    return (opts.bounds & bound_bit(kind)) != 0;
  };
  const auto skip = [](BoundEntry& e, std::string reason) {
    e.na_reason = std::move(reason);
  };

  if (!wanted(BoundKind::Turan))
    skip(r.turan, "not requested");
  else if (r.k != 2)
    skip(r.turan, "turan requires k=2");
  else
    r.turan.value = turan_bound(r.n, r.m);

  if (!wanted(BoundKind::TuranSpencer))
    skip(r.turan_spencer, "not requested");
  else if (BigInt(r.k) * r.m < r.n)
    skip(r.turan_spencer, "turan_spencer requires m >= n/k");
  else
    r.turan_spencer.value = turan_spencer_bound(r.n, r.m, r.k);

  const bool need_degrees =
      wanted(BoundKind::CaroTuza) || (wanted(BoundKind::Cps) && r.k == 3);
  DegreeSequence degrees;
  if (need_degrees) degrees = degree_sequence(h);

  if (!wanted(BoundKind::CaroTuza))
    skip(r.caro_tuza, "not requested");
  else
    r.caro_tuza.value = caro_tuza_bound(degrees, r.k);

  if (!wanted(BoundKind::Cps)) {
    skip(r.cps, "not requested");
  } else if (r.k != 3) {
    skip(r.cps, "cps requires k=3");
  } else {
    CpsValue c = cps_bound(degrees, r.k);
    r.cps.value = c.value;
    if (c.boundary_warning)
      r.warnings.push_back("cps sum " + std::to_string(c.raw) +
                           " lies within 1e-9 of an integer");
  }

  if (opts.with_alpha) {
    r.alpha_requested = true;
    SolverConfig cfg;
    cfg.node_budget = opts.alpha_budget;
    cfg.use_ell_pruning = opts.use_ell_pruning;
    AlphaResult a = alpha_exact(h, cfg);
    r.alpha_exhausted = a.exhausted;
    r.alpha_best_found = a.alpha;
    r.alpha_nodes = a.nodes_explored;
    if (a.exhausted)
      r.alpha = a.alpha;
    else
      r.warnings.push_back("alpha search stopped after " +
                           std::to_string(a.nodes_explored) +
                           " nodes; best independent set found has size " +
                           std::to_string(a.alpha));
  }
  return r;
}

}  // namespace hibound
