#include "hibound/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "hibound/exact_alpha.hpp"
#include "hibound/io.hpp"
#include "random.hpp"

namespace hibound {

void ValueRange::add(std::uint32_t v) {
  if (present == 0) {
    min = max = v;
  } else {
    min = std::min(min, v);
    max = std::max(max, v);
  }
  ++present;
}

void ValueRange::merge(const ValueRange& o) {
  if (o.present == 0) return;
  if (present == 0) {
    *this = o;
    return;
  }
  min = std::min(min, o.min);
  max = std::max(max, o.max);
  present += o.present;
}

void validate(const SweepSpec& spec) {
  auto bad = [](const std::string& why) {
    throw Error(ErrorCode::InvalidParams, "sweep: " + why);
  };
  if (spec.n_min == 0) bad("n_min must be positive");
  if (spec.n_min > spec.n_max) bad("empty n range");
  if (spec.k_min < 2) bad("k_min must be at least 2");
  if (spec.k_min > spec.k_max) bad("empty k range");
  if (spec.instances_per_cell == 0) bad("instances_per_cell must be >= 1");
  if (spec.alpha_budget == 0) bad("alpha budget must be positive");
  if (spec.exhaustive_edge_cap > 30) bad("exhaustive_edge_cap must be <= 30");
}

namespace {

constexpr std::array<std::pair<BoundKind, BoundKind>, 10> kPairs = {{
    {BoundKind::Ell, BoundKind::Turan},
    {BoundKind::Ell, BoundKind::TuranSpencer},
    {BoundKind::Ell, BoundKind::CaroTuza},
    {BoundKind::Ell, BoundKind::Cps},
    {BoundKind::Turan, BoundKind::TuranSpencer},
    {BoundKind::Turan, BoundKind::CaroTuza},
    {BoundKind::Turan, BoundKind::Cps},
    {BoundKind::TuranSpencer, BoundKind::CaroTuza},
    {BoundKind::TuranSpencer, BoundKind::Cps},
    {BoundKind::CaroTuza, BoundKind::Cps},
}};

using CellKey = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>;

struct Partial {
  std::uint64_t instances = 0;
  std::map<CellKey, SweepCell> cells;
  std::array<DominanceCount, kPairs.size()> dominance{};
  std::vector<Violation> violations;
  std::vector<Flagged> flagged;
};

struct Unit {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  bool exhaustive = false;
  std::uint64_t begin = 0;  // subset mask or instance index
  std::uint64_t end = 0;
};

class Worker {
 public:
  explicit Worker(const SweepSpec& spec) : spec_(spec) {
    opts_.bounds = kAllBoundBits;
    opts_.with_alpha = spec.with_alpha;
    opts_.alpha_budget = spec.alpha_budget;
    opts_.use_ell_pruning = false;
  }

  Partial run(const Unit& u) {
    Partial p;
    if (u.exhaustive) {
      std::vector<Edge> pool;
      for_each_k_subset(u.n, u.k, [&](const Edge& e) { pool.push_back(e); });
      for (std::uint64_t mask = u.begin; mask < u.end; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if ((mask >> i) & 1u) edges.push_back(pool[i]);
        observe(Hypergraph::from_edges(u.n, u.k, std::move(edges)), p);
      }
      return p;
    }
    for (std::uint64_t idx = u.begin; idx < u.end; ++idx) sample(u, idx, p);
    return p;
  }

 private:
  void sample(const Unit& u, std::uint64_t idx, Partial& p) {
    const std::uint64_t seed = detail::mix_seed(spec_.seed, u.n, u.k, idx);
    std::uint64_t m = 0;
    try {
      if (spec_.regular_degree) {
        const std::uint64_t d = *spec_.regular_degree;
        if ((std::uint64_t{u.n} * d) % u.k == 0) m = u.n * d / u.k;
        observe(random_regular(u.n, u.k, d, seed), p);
      } else {
        const BigInt total = binomial(u.n, u.k);
        if (total >= BigInt(UINT64_MAX))
          throw Error(ErrorCode::InvalidParams, "C(n, k) too large to sample m");
        detail::Rng rng(seed);
        m = detail::uniform_below(rng, static_cast<std::uint64_t>(total) + 1);
        observe(random_uniform(u.n, u.k, m, seed), p);
      }
    } catch (const Error& e) {
      p.flagged.push_back({u.n, u.k, m,
                           std::string(to_string(e.code())) + ": " + e.what()});
    }
  }

  void observe(const Hypergraph& h, Partial& p) {
    const BoundReport r = compute_report(h, opts_);
    ++p.instances;

    SweepCell& cell = p.cells[{r.n, r.k, r.m}];
    cell.n = r.n;
    cell.k = r.k;
    cell.m = r.m;
    ++cell.instances;
    for (BoundKind kind : kAllBounds)
      if (auto v = r.value(kind))
        cell.bounds[static_cast<std::size_t>(kind)].add(*v);
    if (r.alpha) cell.alpha.add(*r.alpha);

    for (std::size_t i = 0; i < kPairs.size(); ++i) {
      auto a = r.value(kPairs[i].first);
      auto b = r.value(kPairs[i].second);
      if (!a || !b) continue;
      DominanceCount& d = p.dominance[i];
      if (*a > *b)
        ++d.wins;
      else if (*a == *b)
        ++d.ties;
      else
        ++d.losses;
    }

    if (r.alpha) {
      for (BoundKind kind : kAllBounds) {
        auto v = r.value(kind);
        if (v && *v > *r.alpha)
          p.violations.push_back(
              {r.n, r.k, r.m, kind, *v, *r.alpha, serialize_hypergraph(h)});
      }
    }
    for (const std::string& w : r.warnings)
      p.flagged.push_back({r.n, r.k, r.m, w});
  }

  const SweepSpec& spec_;
  ReportOptions opts_;
};

std::vector<Unit> plan(const SweepSpec& spec) {
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 13;
  std::vector<Unit> units;
  for (std::uint32_t n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::uint32_t k = spec.k_min; k <= spec.k_max; ++k) {
      const BigInt total = binomial(n, k);
      const bool exhaustive = spec.m_policy == MPolicy::Exhaustive &&
                              !spec.regular_degree &&
                              total <= spec.exhaustive_edge_cap;
      if (exhaustive) {
        const std::uint64_t count =
            std::uint64_t{1} << static_cast<unsigned>(total);
        for (std::uint64_t b = 0; b < count; b += kChunk)
          units.push_back({n, k, true, b, std::min(count, b + kChunk)});
      } else {
        units.push_back({n, k, false, 0, spec.instances_per_cell});
      }
    }
  }
  return units;
}

}  // namespace

const DominanceCount& SweepResult::dominance_of(BoundKind first,
                                                BoundKind second) const {
  for (const DominanceCount& d : dominance)
    if (d.first == first && d.second == second) return d;
  throw Error(ErrorCode::InvalidParams, "no such bound pair");
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<Unit> units = plan(spec);
  std::vector<Partial> partials(units.size());

  std::uint32_t threads = spec.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<std::uint32_t>(
      std::min<std::size_t>(threads, std::max<std::size_t>(units.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    Worker w(spec);
    for (std::size_t i; (i = next.fetch_add(1)) < units.size();)
      partials[i] = w.run(units[i]);
  };
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint32_t t = 0; t < threads; ++t) pool.emplace_back(drain);
  }

  // Merge in unit order so the result is independent of scheduling.
  SweepResult out;
  out.spec = spec;
  std::map<CellKey, SweepCell> cells;
  std::array<DominanceCount, kPairs.size()> dominance{};
  for (std::size_t i = 0; i < kPairs.size(); ++i) {
    dominance[i].first = kPairs[i].first;
    dominance[i].second = kPairs[i].second;
  }
  for (Partial& p : partials) {
    out.instances += p.instances;
    for (auto& [key, c] : p.cells) {
      auto [it, fresh] = cells.try_emplace(key, c);
      if (fresh) continue;
      SweepCell& dst = it->second;
      dst.instances += c.instances;
      for (std::size_t b = 0; b < kBoundCount; ++b)
        dst.bounds[b].merge(c.bounds[b]);
      dst.alpha.merge(c.alpha);
    }
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
      dominance[i].wins += p.dominance[i].wins;
      dominance[i].ties += p.dominance[i].ties;
      dominance[i].losses += p.dominance[i].losses;
    }
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
    for (auto& f : p.flagged) out.flagged.push_back(std::move(f));
  }
  out.cells.reserve(cells.size());
  for (auto& [key, c] : cells) out.cells.push_back(c);
  out.dominance.assign(dominance.begin(), dominance.end());
  return out;
}

// ---------------------------------------------------------------------------

bool ExampleReport::passed() const noexcept {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr std::size_t kMaxListedFailures = 20;

void fail(CheckResult& c, std::string what) {
  if (c.failures.size() < kMaxListedFailures) c.failures.push_back(std::move(what));
  c.passed = false;
}

std::string triple(std::uint32_t n, std::uint64_t m, std::uint32_t k) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) +
         ", k=" + std::to_string(k) + ")";
}

}  // namespace

CheckResult check_ts_below_k(const std::vector<std::uint32_t>& ks,
                             std::uint32_t n_max) {
  CheckResult c{"a", "turan_spencer < k <= ell for (n/k)^k <= m < C(n,k)",
                true, 0, {}, {}};
  for (std::uint32_t k : ks) {
    for (std::uint32_t n = k; n <= n_max; ++n) {
      const BigInt kk = boost::multiprecision::pow(BigInt(k), k);
      const BigInt nk = boost::multiprecision::pow(BigInt(n), k);
      const auto lo = static_cast<std::uint64_t>((nk + kk - 1) / kk);
      const auto hi = static_cast<std::uint64_t>(binomial(n, k));
      for (std::uint64_t m = lo; m < hi; ++m) {
        ++c.cases;
        const std::uint32_t ts = turan_spencer_bound(n, m, k);
        const std::uint32_t ell = ell_bound(n, m, k);
        if (!(ts < k && k <= ell))
          fail(c, triple(n, m, k) + ": turan_spencer=" + std::to_string(ts) +
                      " ell=" + std::to_string(ell));
      }
    }
  }
  c.detail = std::to_string(c.cases) + " (n, m, k) triples checked";
  return c;
}

CheckResult check_ts_below_five(std::uint32_t n_min, std::uint32_t n_max) {
  CheckResult c{"b", "turan_spencer < 5 <= ell for n^3/108 <= m < (n-2)(n-3)(n-4)/60",
                true, 0, {}, {}};
  for (std::uint32_t n = std::max(n_min, 5u); n <= n_max; ++n) {
    const std::uint64_t cube = std::uint64_t{n} * n * n;
    const std::uint64_t lo = (cube + 107) / 108;
    const std::uint64_t top = std::uint64_t{n - 2} * (n - 3) * (n - 4);
    // 60 m < top  <=>  m <= (top - 1) / 60
    for (std::uint64_t m = lo; top > 0 && m <= (top - 1) / 60; ++m) {
      ++c.cases;
      const std::uint32_t ts = turan_spencer_bound(n, m, 3);
      const std::uint32_t ell = ell_bound(n, m, 3);
      if (!(ts < 5 && 5 <= ell))
        fail(c, triple(n, m, 3) + ": turan_spencer=" + std::to_string(ts) +
                    " ell=" + std::to_string(ell));
    }
  }
  c.detail = std::to_string(c.cases) + " (n, m) pairs checked";
  return c;
}

CheckResult check_regular_ct_pairs(std::uint64_t seed) {
  CheckResult c{"c", "regular hypergraphs on 6 vertices: caro_tuza < ell", true,
                0, {}, {}};
  struct Case {
    std::uint32_t n, k;
    std::uint64_t d;
    std::uint32_t ct, ell;
  };
  std::string detail;
  for (const Case& t : {Case{6, 3, 7, 2, 3}, Case{6, 4, 6, 3, 4}}) {
    ++c.cases;
    const Hypergraph h = random_regular(t.n, t.k, t.d, seed);
    const DegreeSequence ds = degree_sequence(h);
    const bool regular =
        std::all_of(ds.degrees.begin(), ds.degrees.end(),
                    [&](std::uint64_t v) { return v == t.d; });
    const std::uint32_t ct = caro_tuza_bound(ds, t.k);
    const std::uint32_t ell = ell_bound(h.n(), h.m(), h.k());
    const std::string label = std::to_string(t.d) + "-regular k=" +
                              std::to_string(t.k) + " m=" +
                              std::to_string(h.m());
    if (!regular) fail(c, label + ": generated instance is not regular");
    if (ct != t.ct || ell != t.ell)
      fail(c, label + ": caro_tuza=" + std::to_string(ct) +
                  " ell=" + std::to_string(ell) + ", expected " +
                  std::to_string(t.ct) + " and " + std::to_string(t.ell));
    if (!detail.empty()) detail += "; ";
    detail += label + ": caro_tuza=" + std::to_string(ct) +
              " ell=" + std::to_string(ell);
  }
  c.detail = detail;
  return c;
}

CheckResult check_cps_minus_one_edge(std::uint32_t n_min, std::uint32_t n_max,
                                     std::uint32_t alpha_n_max,
                                     std::optional<std::uint32_t>* threshold) {
  CheckResult c{"d", "K^3_n minus one edge: cps == 2 while ell == 3", true, 0,
                {}, {}};
  std::optional<std::uint32_t> found;
  std::uint32_t alpha_checked = 0;
  for (std::uint32_t n = std::max(n_min, 3u); n <= n_max; ++n) {
    ++c.cases;
    const Hypergraph h = complete_minus_one_edge(n, 3);
    const CpsValue cps = cps_bound(degree_sequence(h), 3);
    const std::uint32_t ell = ell_bound(n, h.m(), 3);
    if (!found && cps.raw < 2.0 && !cps.boundary_warning) found = n;
    if (found && cps.value != 2)
      fail(c, "n=" + std::to_string(n) + ": cps=" + std::to_string(cps.value));
    if (ell != 3)
      fail(c, "n=" + std::to_string(n) + ": ell=" + std::to_string(ell));
    if (n <= alpha_n_max) {
      const AlphaResult a = alpha_exact(h);
      ++alpha_checked;
      if (!a.exhausted || a.alpha != 3)
        fail(c, "n=" + std::to_string(n) + ": alpha=" + std::to_string(a.alpha) +
                    (a.exhausted ? "" : " (not exhausted)"));
    }
  }
  if (!found) fail(c, "cps never dropped below 2 in the scanned range");
  if (threshold) *threshold = found;
  c.detail = "threshold n=" + (found ? std::to_string(*found) : std::string("none")) +
             "; alpha confirmed on " + std::to_string(alpha_checked) + " instances";
  return c;
}

ExampleReport run_example_checks() {
  ExampleReport r;
  r.checks.push_back(check_ts_below_k({3, 4, 5}, 12));
  r.checks.push_back(check_ts_below_five(10, 20));
  r.checks.push_back(check_regular_ct_pairs(0));
  r.checks.push_back(check_cps_minus_one_edge(10, 40, 16, &r.cps_threshold));
  return r;
}

}  // namespace hibound
