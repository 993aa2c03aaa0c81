// hibound command-line tool. Uses only the public C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hibound/hibound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int report_error(hb_status s) {
  std::cerr << "hibound: " << hb_status_name(s);
  if (*hb_last_error()) std::cerr << ": " << hb_last_error();
  std::cerr << "\n";
  switch (s) {
    case HB_ERR_ATTEMPTS_EXHAUSTED:
    case HB_ERR_INTERNAL:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

// Owns a malloc'd string from the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { hb_string_free(p); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using GraphHandle = Handle<hb_hypergraph, hb_hypergraph_free>;

hb_format format_of(const std::string& name) {
  if (name == "csv") return HB_FORMAT_CSV;
  if (name == "table") return HB_FORMAT_TABLE;
  return HB_FORMAT_JSON;
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "hibound: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

unsigned parse_bounds(const std::string& list, bool& ok) {
  static const std::map<std::string, unsigned> names = {
      {"ell", HB_BOUND_ELL},
      {"turan", HB_BOUND_TURAN},
      {"t", HB_BOUND_TURAN},
      {"ts", HB_BOUND_TURAN_SPENCER},
      {"turan_spencer", HB_BOUND_TURAN_SPENCER},
      {"ct", HB_BOUND_CARO_TUZA},
      {"caro_tuza", HB_BOUND_CARO_TUZA},
      {"cps", HB_BOUND_CPS},
      {"all", HB_BOUND_ALL},
  };
  unsigned bits = 0;
  std::stringstream ss(list);
  std::string item;
  ok = true;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto it = names.find(item);
    if (it == names.end()) {
      std::cerr << "hibound: unknown bound \"" << item << "\"\n";
      ok = false;
      return 0;
    }
    bits |= it->second;
  }
  return bits;
}

std::uint32_t threads_from_env() {
  if (const char* env = std::getenv("HIBOUND_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint32_t>(v);
  }
  return 1;
}

struct GenArgs {
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t d = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_attempts = 64;
  std::string out;
};

int run_gen(const GenArgs& a, bool have_m, bool have_d) {
  GraphHandle g;
  hb_status s = HB_OK;
  if (a.family == "complete") {
    s = hb_hypergraph_complete(a.n, a.k, &g.p);
  } else if (a.family == "empty") {
    s = hb_hypergraph_empty(a.n, a.k, &g.p);
  } else if (a.family == "minus-one") {
    s = hb_hypergraph_complete_minus_one_edge(a.n, a.k, &g.p);
  } else if (a.family == "uniform") {
    if (!have_m) {
      std::cerr << "hibound: family uniform needs -m\n";
      return kExitUsage;
    }
    s = hb_hypergraph_random_uniform(a.n, a.k, a.m, a.seed, &g.p);
  } else if (a.family == "regular") {
    if (!have_d) {
      std::cerr << "hibound: family regular needs -d\n";
      return kExitUsage;
    }
    s = hb_hypergraph_random_regular(a.n, a.k, a.d, a.seed, a.max_attempts, &g.p);
  }
  if (s != HB_OK) return report_error(s);
  LibString text;
  if ((s = hb_hypergraph_serialize(g.p, &text.p)) != HB_OK) return report_error(s);
  return write_output(a.out, text.p) ? kExitOk : kExitFailed;
}

struct BoundArgs {
  std::string input;
  std::string bounds = "all";
  bool alpha = false;
  std::uint64_t budget = 100'000'000;
  std::string format = "json";
  bool one_based = false;
};

int run_bound(const BoundArgs& a) {
  bool ok = true;
  const unsigned bits = parse_bounds(a.bounds, ok);
  if (!ok) return kExitUsage;
  GraphHandle g;
  hb_status s = hb_hypergraph_load(a.input.c_str(), a.one_based, &g.p);
  if (s != HB_OK) return report_error(s);
  Handle<hb_report, hb_report_free> r;
  if ((s = hb_report_compute(g.p, bits, a.alpha, a.budget, &r.p)) != HB_OK)
    return report_error(s);
  LibString text;
  if ((s = hb_report_format(r.p, format_of(a.format), &text.p)) != HB_OK)
    return report_error(s);
  std::fputs(text.p, stdout);
  return kExitOk;
}

struct ExactArgs {
  std::string input;
  std::uint64_t budget = 100'000'000;
  bool no_pruning = false;
  std::string format = "json";
  bool one_based = false;
};

int run_exact(const ExactArgs& a) {
  GraphHandle g;
  hb_status s = hb_hypergraph_load(a.input.c_str(), a.one_based, &g.p);
  if (s != HB_OK) return report_error(s);
  Handle<hb_alpha, hb_alpha_free> r;
  if ((s = hb_alpha_solve(g.p, a.budget, !a.no_pruning, &r.p)) != HB_OK)
    return report_error(s);
  LibString text;
  if ((s = hb_alpha_format(r.p, format_of(a.format), &text.p)) != HB_OK)
    return report_error(s);
  std::fputs(text.p, stdout);
  return kExitOk;
}

struct VerifyArgs {
  hb_sweep_spec spec{};
  std::string m_policy = "random";
  bool no_alpha = false;
  std::uint64_t regular_degree = 0;
  std::string format = "table";
  std::string out;
};

int run_verify(VerifyArgs& a, bool have_regular) {
  a.spec.m_policy = a.m_policy == "exhaustive" ? HB_M_EXHAUSTIVE : HB_M_RANDOM;
  a.spec.with_alpha = a.no_alpha ? 0 : 1;
  a.spec.has_regular_degree = have_regular ? 1 : 0;
  a.spec.regular_degree = a.regular_degree;
  a.spec.threads = threads_from_env();
  Handle<hb_sweep, hb_sweep_free> r;
  hb_status s = hb_sweep_run(&a.spec, &r.p);
  if (s != HB_OK) return report_error(s);
  LibString text;
  if ((s = hb_sweep_format(r.p, format_of(a.format), &text.p)) != HB_OK)
    return report_error(s);
  if (!write_output(a.out, text.p)) return kExitFailed;
  const size_t violations = hb_sweep_violations(r.p);
  if (violations > 0) {
    std::cerr << "hibound: " << violations << " bound violation(s)\n";
    return kExitFailed;
  }
  return kExitOk;
}

int run_examples(const std::string& format) {
  Handle<hb_examples, hb_examples_free> r;
  hb_status s = hb_examples_run(&r.p);
  if (s != HB_OK) return report_error(s);
  LibString text;
  if ((s = hb_examples_format(r.p, format_of(format), &text.p)) != HB_OK)
    return report_error(s);
  std::fputs(text.p, stdout);
  return hb_examples_passed(r.p) ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence-number lower bounds for k-uniform hypergraphs"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv", "table"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a hypergraph file");
  gen_cmd->add_option("family", gen.family, "complete | empty | minus-one | uniform | regular")
      ->required()
      ->check(CLI::IsMember({"complete", "empty", "minus-one", "uniform", "regular"}));
  gen_cmd->add_option("-n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("-k", gen.k, "Edge size")->required();
  auto* gen_m = gen_cmd->add_option("-m", gen.m, "Edge count (uniform)");
  auto* gen_d = gen_cmd->add_option("-d", gen.d, "Vertex degree (regular)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--max-attempts", gen.max_attempts,
                      "Sampling attempts (regular)")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Compute lower bounds for a hypergraph file");
  bound_cmd->add_option("--input", bound.input, "Hypergraph file")->required();
  bound_cmd->add_option("--bounds", bound.bounds, "Comma list of ell,turan,ts,ct,cps")
      ->capture_default_str();
  bound_cmd->add_flag("--alpha", bound.alpha, "Also compute the exact independence number");
  bound_cmd->add_option("--budget", bound.budget, "Search-node budget for --alpha")
      ->capture_default_str();
  bound_cmd->add_option("--format", bound.format)->check(CLI::IsMember(formats))
      ->capture_default_str();
  bound_cmd->add_flag("--one-based", bound.one_based, "Vertex ids in the file start at 1");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact independence number");
  exact_cmd->add_option("--input", exact.input, "Hypergraph file")->required();
  exact_cmd->add_option("--budget", exact.budget, "Search-node budget")
      ->capture_default_str();
  exact_cmd->add_flag("--no-ell-pruning", exact.no_pruning,
                      "Do not seed the search with the ell lower bound");
  exact_cmd->add_option("--format", exact.format)->check(CLI::IsMember(formats))
      ->capture_default_str();
  exact_cmd->add_flag("--one-based", exact.one_based, "Vertex ids in the file start at 1");

  VerifyArgs verify;
  hb_sweep_spec_init(&verify.spec);
  auto* verify_cmd = app.add_subcommand("verify", "Soundness and dominance sweep");
  verify_cmd->add_option("--n-min", verify.spec.n_min)->capture_default_str();
  verify_cmd->add_option("--n-max", verify.spec.n_max)->capture_default_str();
  verify_cmd->add_option("--k-min", verify.spec.k_min)->capture_default_str();
  verify_cmd->add_option("--k-max", verify.spec.k_max)->capture_default_str();
  verify_cmd->add_option("--m-policy", verify.m_policy)
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  verify_cmd->add_option("--instances", verify.spec.instances_per_cell,
                         "Random instances per (n, k) cell")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.spec.seed)->capture_default_str();
  verify_cmd->add_flag("--no-alpha", verify.no_alpha, "Skip the exact solver");
  verify_cmd->add_option("--budget", verify.spec.alpha_budget, "Search-node budget per instance")
      ->capture_default_str();
  auto* verify_d = verify_cmd->add_option("--regular-degree", verify.regular_degree,
                                          "Sample d-regular instances");
  verify_cmd->add_option("--edge-cap", verify.spec.exhaustive_edge_cap,
                         "Enumerate all edge sets when C(n,k) <= cap")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember(formats))
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Output file (default stdout)");

  std::string examples_format = "table";
  auto* examples_cmd = app.add_subcommand("examples", "Reproduce the worked bound comparisons");
  examples_cmd->add_option("--format", examples_format)->check(CLI::IsMember(formats))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*gen_cmd) return run_gen(gen, gen_m->count() > 0, gen_d->count() > 0);
  if (*bound_cmd) return run_bound(bound);
  if (*exact_cmd) return run_exact(exact);
  if (*verify_cmd) return run_verify(verify, verify_d->count() > 0);
  if (*examples_cmd) return run_examples(examples_format);
  return kExitUsage;
}
