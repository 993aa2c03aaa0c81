#include "hibound/hibound.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hibound/bounds.hpp"
#include "hibound/exact_alpha.hpp"
#include "hibound/io.hpp"
#include "hibound/verify.hpp"

struct hb_hypergraph {
  hibound::Hypergraph value;
};
struct hb_report {
  hibound::BoundReport value;
};
struct hb_alpha {
  hibound::Hypergraph graph;
  hibound::AlphaResult value;
};
struct hb_sweep {
  hibound::SweepResult value;
};
struct hb_examples {
  hibound::ExampleReport value;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_error_line = 0;

hb_status to_status(hibound::ErrorCode code) {
  using hibound::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParams: return HB_ERR_INVALID_PARAMS;
    case ErrorCode::EdgeWrongSize: return HB_ERR_EDGE_WRONG_SIZE;
    case ErrorCode::VertexOutOfRange: return HB_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::DuplicateEdge: return HB_ERR_DUPLICATE_EDGE;
    case ErrorCode::InfeasibleParams: return HB_ERR_INFEASIBLE_PARAMS;
    case ErrorCode::AttemptsExhausted: return HB_ERR_ATTEMPTS_EXHAUSTED;
    case ErrorCode::DomainError: return HB_ERR_DOMAIN;
    case ErrorCode::OutOfRange: return HB_ERR_OUT_OF_RANGE;
    case ErrorCode::WrongUniformity: return HB_ERR_WRONG_UNIFORMITY;
    case ErrorCode::MalformedHeader: return HB_ERR_MALFORMED_HEADER;
    case ErrorCode::EdgeArity: return HB_ERR_EDGE_ARITY;
    case ErrorCode::IndexOutOfRange: return HB_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::DuplicateEdgeLine: return HB_ERR_DUPLICATE_EDGE_LINE;
    case ErrorCode::Io: return HB_ERR_IO;
  }
  return HB_ERR_INTERNAL;
}

hb_status fail(hb_status status, std::string message, std::size_t line = 0) {
  g_error = std::move(message);
  g_error_line = line;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
hb_status guarded(Body&& body) {
  g_error.clear();
  g_error_line = 0;
  try {
    return body();
  } catch (const hibound::Error& e) {
    return fail(to_status(e.code()), e.what(), e.line().value_or(0));
  } catch (const std::bad_alloc&) {
    return fail(HB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HB_ERR_INTERNAL, e.what());
  }
}

hb_status null_arg(const char* name) {
  return fail(HB_ERR_NULL_ARGUMENT, std::string(name) + " is NULL");
}

hb_status copy_string(const std::string& s, char** out) {
  auto* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return fail(HB_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, s.data(), s.size() + 1);
  *out = buf;
  return HB_OK;
}

hibound::Format to_format(hb_format f) {
  switch (f) {
    case HB_FORMAT_JSON: return hibound::Format::Json;
    case HB_FORMAT_CSV: return hibound::Format::Csv;
    case HB_FORMAT_TABLE: return hibound::Format::Table;
  }
  throw hibound::Error(hibound::ErrorCode::InvalidParams, "unknown format");
}

hibound::BoundKind to_kind(unsigned bit) {
  using hibound::BoundKind;
  switch (bit) {
    case HB_BOUND_ELL: return BoundKind::Ell;
    case HB_BOUND_TURAN: return BoundKind::Turan;
    case HB_BOUND_TURAN_SPENCER: return BoundKind::TuranSpencer;
    case HB_BOUND_CARO_TUZA: return BoundKind::CaroTuza;
    case HB_BOUND_CPS: return BoundKind::Cps;
    default: break;
  }
  throw hibound::Error(hibound::ErrorCode::InvalidParams,
                       "expected a single HB_BOUND_* bit");
}

hibound::DegreeSequence to_degrees(const uint64_t* degrees, size_t n) {
  hibound::DegreeSequence ds;
  ds.degrees.assign(degrees, degrees + n);
  return ds;
}

template <class Make>
hb_status make_graph(hb_hypergraph** out, Make&& make) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hb_hypergraph{make()};
    return HB_OK;
  });
}

}  // namespace

extern "C" {

const char* hb_status_name(hb_status status) {
  switch (status) {
    case HB_OK: return "OK";
    case HB_ERR_NULL_ARGUMENT: return "NullArgument";
    case HB_ERR_INVALID_PARAMS: return "InvalidParams";
    case HB_ERR_EDGE_WRONG_SIZE: return "EdgeWrongSize";
    case HB_ERR_VERTEX_OUT_OF_RANGE: return "VertexOutOfRange";
    case HB_ERR_DUPLICATE_EDGE: return "DuplicateEdge";
    case HB_ERR_INFEASIBLE_PARAMS: return "InfeasibleParams";
    case HB_ERR_ATTEMPTS_EXHAUSTED: return "AttemptsExhausted";
    case HB_ERR_DOMAIN: return "DomainError";
    case HB_ERR_OUT_OF_RANGE: return "OutOfRange";
    case HB_ERR_WRONG_UNIFORMITY: return "WrongUniformity";
    case HB_ERR_MALFORMED_HEADER: return "MalformedHeader";
    case HB_ERR_EDGE_ARITY: return "EdgeArity";
    case HB_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case HB_ERR_DUPLICATE_EDGE_LINE: return "DuplicateEdgeLine";
    case HB_ERR_IO: return "Io";
    case HB_ERR_NOT_APPLICABLE: return "NotApplicable";
    case HB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* hb_last_error(void) { return g_error.c_str(); }
size_t hb_last_error_line(void) { return g_error_line; }
void hb_string_free(char* s) { std::free(s); }

// ---- hypergraphs -----------------------------------------------------------

hb_status hb_hypergraph_create(uint32_t n, uint32_t k, const uint32_t* vertices,
                               size_t edge_count, hb_hypergraph** out) {
  if (edge_count > 0 && !vertices) return null_arg("vertices");
  return make_graph(out, [&] {
    std::vector<hibound::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      edges[i].assign(vertices + i * k, vertices + (i + 1) * k);
    return hibound::Hypergraph::from_edges(n, k, std::move(edges));
  });
}

hb_status hb_hypergraph_complete(uint32_t n, uint32_t k, hb_hypergraph** out) {
  return make_graph(out, [&] { return hibound::complete(n, k); });
}

hb_status hb_hypergraph_empty(uint32_t n, uint32_t k, hb_hypergraph** out) {
  return make_graph(out, [&] { return hibound::empty(n, k); });
}

hb_status hb_hypergraph_complete_minus_one_edge(uint32_t n, uint32_t k,
                                                hb_hypergraph** out) {
  return make_graph(out,
                    [&] { return hibound::complete_minus_one_edge(n, k); });
}

hb_status hb_hypergraph_random_uniform(uint32_t n, uint32_t k, uint64_t m,
                                       uint64_t seed, hb_hypergraph** out) {
  return make_graph(out,
                    [&] { return hibound::random_uniform(n, k, m, seed); });
}

hb_status hb_hypergraph_random_regular(uint32_t n, uint32_t k, uint64_t d,
                                       uint64_t seed, uint32_t max_attempts,
                                       hb_hypergraph** out) {
  return make_graph(out, [&] {
    return hibound::random_regular(n, k, d, seed, max_attempts);
  });
}

hb_status hb_hypergraph_parse(const char* text, int one_based,
                              hb_hypergraph** out) {
  if (!text) return null_arg("text");
  return make_graph(out, [&] {
    return hibound::parse_hypergraph(text, {.one_based = one_based != 0});
  });
}

hb_status hb_hypergraph_load(const char* path, int one_based,
                             hb_hypergraph** out) {
  if (!path) return null_arg("path");
  return make_graph(out, [&] {
    return hibound::load_hypergraph(path, {.one_based = one_based != 0});
  });
}

hb_status hb_hypergraph_serialize(const hb_hypergraph* h, char** out) {
  if (!h) return null_arg("h");
  if (!out) return null_arg("out");
  return guarded(
      [&] { return copy_string(hibound::serialize_hypergraph(h->value), out); });
}

void hb_hypergraph_free(hb_hypergraph* h) { delete h; }

uint32_t hb_hypergraph_n(const hb_hypergraph* h) { return h ? h->value.n() : 0; }
uint32_t hb_hypergraph_k(const hb_hypergraph* h) { return h ? h->value.k() : 0; }
uint64_t hb_hypergraph_m(const hb_hypergraph* h) { return h ? h->value.m() : 0; }

hb_status hb_hypergraph_edge(const hb_hypergraph* h, uint64_t index,
                             uint32_t* out) {
  if (!h) return null_arg("h");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (index >= h->value.m())
      return fail(HB_ERR_OUT_OF_RANGE, "edge index out of range");
    const auto& e = h->value.edges()[index];
    std::copy(e.begin(), e.end(), out);
    return HB_OK;
  });
}

hb_status hb_hypergraph_degrees(const hb_hypergraph* h, uint64_t* out) {
  if (!h) return null_arg("h");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto ds = hibound::degree_sequence(h->value);
    std::copy(ds.degrees.begin(), ds.degrees.end(), out);
    return HB_OK;
  });
}

hb_status hb_is_independent(const hb_hypergraph* h, const uint32_t* vertices,
                            size_t count, int* out) {
  if (!h) return null_arg("h");
  if (!out) return null_arg("out");
  if (count > 0 && !vertices) return null_arg("vertices");
  return guarded([&] {
    for (size_t i = 0; i < count; ++i)
      if (vertices[i] >= h->value.n())
        return fail(HB_ERR_VERTEX_OUT_OF_RANGE, "vertex out of range");
    *out = hibound::is_independent(
               h->value, std::span<const uint32_t>(vertices, count))
               ? 1
               : 0;
    return HB_OK;
  });
}

// ---- bounds ----------------------------------------------------------------

hb_status hb_ell_bound(uint32_t n, uint64_t m, uint32_t k, uint32_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = hibound::ell_bound(n, m, k);
    return HB_OK;
  });
}

hb_status hb_ell_closed_form_k2(uint32_t n, uint64_t m, uint32_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = hibound::ell_closed_form_k2(n, m);
    return HB_OK;
  });
}

hb_status hb_turan_bound(uint32_t n, uint64_t m, uint32_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = hibound::turan_bound(n, m);
    return HB_OK;
  });
}

hb_status hb_turan_spencer_bound(uint32_t n, uint64_t m, uint32_t k,
                                 uint32_t* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = hibound::turan_spencer_bound(n, m, k);
    return HB_OK;
  });
}

hb_status hb_caro_tuza_bound(const uint64_t* degrees, size_t n, uint32_t k,
                             uint32_t* out) {
  if (!out) return null_arg("out");
  if (n > 0 && !degrees) return null_arg("degrees");
  return guarded([&] {
    *out = hibound::caro_tuza_bound(to_degrees(degrees, n), k);
    return HB_OK;
  });
}

hb_status hb_cps_bound(const uint64_t* degrees, size_t n, uint32_t k,
                       uint32_t* out, int* boundary_warning) {
  if (!out) return null_arg("out");
  if (n > 0 && !degrees) return null_arg("degrees");
  return guarded([&] {
    const auto v = hibound::cps_bound(to_degrees(degrees, n), k);
    *out = v.value;
    if (boundary_warning) *boundary_warning = v.boundary_warning ? 1 : 0;
    return HB_OK;
  });
}

// ---- reports ---------------------------------------------------------------

hb_status hb_report_compute(const hb_hypergraph* h, unsigned bounds,
                            int with_alpha, uint64_t alpha_budget,
                            hb_report** out) {
  if (!h) return null_arg("h");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    hibound::ReportOptions opts;
    opts.bounds = bounds & HB_BOUND_ALL;
    opts.with_alpha = with_alpha != 0;
    if (alpha_budget) opts.alpha_budget = alpha_budget;
    *out = new hb_report{hibound::compute_report(h->value, opts)};
    return HB_OK;
  });
}

hb_status hb_report_bound(const hb_report* r, unsigned bound, uint32_t* out) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto kind = to_kind(bound);
    if (auto v = r->value.value(kind)) {
      *out = *v;
      return HB_OK;
    }
    return fail(HB_ERR_NOT_APPLICABLE, r->value.entry(kind)->na_reason);
  });
}

hb_status hb_report_alpha(const hb_report* r, uint32_t* out) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  g_error.clear();
  if (!r->value.alpha)
    return fail(HB_ERR_NOT_APPLICABLE, r->value.alpha_requested
                                           ? "alpha search not exhausted"
                                           : "alpha not requested");
  *out = *r->value.alpha;
  return HB_OK;
}

size_t hb_report_warning_count(const hb_report* r) {
  return r ? r->value.warnings.size() : 0;
}

hb_status hb_report_format(const hb_report* r, hb_format format, char** out) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  return guarded([&] {
    return copy_string(hibound::format_report(r->value, to_format(format)), out);
  });
}

void hb_report_free(hb_report* r) { delete r; }

// ---- exact -----------------------------------------------------------------

hb_status hb_alpha_solve(const hb_hypergraph* h, uint64_t node_budget,
                         int use_ell_pruning, hb_alpha** out) {
  if (!h) return null_arg("h");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    hibound::SolverConfig cfg;
    cfg.node_budget = node_budget;
    cfg.use_ell_pruning = use_ell_pruning != 0;
    *out = new hb_alpha{h->value, hibound::alpha_exact(h->value, cfg)};
    return HB_OK;
  });
}

uint32_t hb_alpha_value(const hb_alpha* a) { return a ? a->value.alpha : 0; }
int hb_alpha_exhausted(const hb_alpha* a) {
  return a && a->value.exhausted ? 1 : 0;
}
uint64_t hb_alpha_nodes(const hb_alpha* a) {
  return a ? a->value.nodes_explored : 0;
}
size_t hb_alpha_witness_size(const hb_alpha* a) {
  return a ? a->value.witness.vertices.size() : 0;
}
const uint32_t* hb_alpha_witness(const hb_alpha* a) {
  return a ? a->value.witness.vertices.data() : nullptr;
}

hb_status hb_alpha_format(const hb_alpha* a, hb_format format, char** out) {
  if (!a) return null_arg("a");
  if (!out) return null_arg("out");
  return guarded([&] {
    return copy_string(
        hibound::format_alpha(a->graph, a->value, to_format(format)), out);
  });
}

void hb_alpha_free(hb_alpha* a) { delete a; }

// ---- sweeps ----------------------------------------------------------------

void hb_sweep_spec_init(hb_sweep_spec* spec) {
  if (!spec) return;
  const hibound::SweepSpec d;
  spec->n_min = d.n_min;
  spec->n_max = d.n_max;
  spec->k_min = d.k_min;
  spec->k_max = d.k_max;
  spec->m_policy = d.m_policy == hibound::MPolicy::Exhaustive ? HB_M_EXHAUSTIVE
                                                              : HB_M_RANDOM;
  spec->instances_per_cell = d.instances_per_cell;
  spec->seed = d.seed;
  spec->with_alpha = d.with_alpha ? 1 : 0;
  spec->alpha_budget = d.alpha_budget;
  spec->regular_degree = 0;
  spec->has_regular_degree = 0;
  spec->exhaustive_edge_cap = d.exhaustive_edge_cap;
  spec->threads = d.threads;
}

hb_status hb_sweep_run(const hb_sweep_spec* spec, hb_sweep** out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    hibound::SweepSpec s;
    s.n_min = spec->n_min;
    s.n_max = spec->n_max;
    s.k_min = spec->k_min;
    s.k_max = spec->k_max;
    s.m_policy = spec->m_policy == HB_M_EXHAUSTIVE
                     ? hibound::MPolicy::Exhaustive
                     : hibound::MPolicy::RandomSample;
    s.instances_per_cell = spec->instances_per_cell;
    s.seed = spec->seed;
    s.with_alpha = spec->with_alpha != 0;
    s.alpha_budget = spec->alpha_budget;
    if (spec->has_regular_degree) s.regular_degree = spec->regular_degree;
    s.exhaustive_edge_cap = spec->exhaustive_edge_cap;
    s.threads = spec->threads;
    *out = new hb_sweep{hibound::run_sweep(s)};
    return HB_OK;
  });
}

uint64_t hb_sweep_instances(const hb_sweep* s) {
  return s ? s->value.instances : 0;
}
size_t hb_sweep_violations(const hb_sweep* s) {
  return s ? s->value.violations.size() : 0;
}
size_t hb_sweep_flagged(const hb_sweep* s) {
  return s ? s->value.flagged.size() : 0;
}

hb_status hb_sweep_dominance(const hb_sweep* s, unsigned first,
                             unsigned second, uint64_t* wins, uint64_t* ties,
                             uint64_t* losses) {
  if (!s) return null_arg("s");
  return guarded([&] {
    const auto& d = s->value.dominance_of(to_kind(first), to_kind(second));
    if (wins) *wins = d.wins;
    if (ties) *ties = d.ties;
    if (losses) *losses = d.losses;
    return HB_OK;
  });
}

hb_status hb_sweep_format(const hb_sweep* s, hb_format format, char** out) {
  if (!s) return null_arg("s");
  if (!out) return null_arg("out");
  return guarded([&] {
    return copy_string(hibound::format_sweep(s->value, to_format(format)), out);
  });
}

void hb_sweep_free(hb_sweep* s) { delete s; }

// ---- examples --------------------------------------------------------------

hb_status hb_examples_run(hb_examples** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hb_examples{hibound::run_example_checks()};
    return HB_OK;
  });
}

int hb_examples_passed(const hb_examples* e) {
  return e && e->value.passed() ? 1 : 0;
}
size_t hb_examples_check_count(const hb_examples* e) {
  return e ? e->value.checks.size() : 0;
}
int hb_examples_check_passed(const hb_examples* e, size_t index) {
  return e && index < e->value.checks.size() && e->value.checks[index].passed
             ? 1
             : 0;
}

hb_status hb_examples_format(const hb_examples* e, hb_format format,
                             char** out) {
  if (!e) return null_arg("e");
  if (!out) return null_arg("out");
  return guarded([&] {
    return copy_string(hibound::format_examples(e->value, to_format(format)),
                       out);
  });
}

void hb_examples_free(hb_examples* e) { delete e; }

}  // extern "C"
