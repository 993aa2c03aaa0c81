/*
 * hibound C API.
 *
 * Independence-number lower bounds for k-uniform hypergraphs, an exact
 * independence-number solver, and verification sweeps, behind opaque handles
 * and status codes. Every function returning hb_status stores a message for
 * the calling thread that hb_last_error() returns until the next call.
 *
 * Strings returned through `char** out` are owned by the caller and must be
 * released with hb_string_free().
 */
#ifndef HIBOUND_H
#define HIBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HIBOUND_BUILDING_LIBRARY)
#    define HB_API __declspec(dllexport)
#  else
#    define HB_API __declspec(dllimport)
#  endif
#else
#  define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERR_NULL_ARGUMENT,
  HB_ERR_INVALID_PARAMS,
  HB_ERR_EDGE_WRONG_SIZE,
  HB_ERR_VERTEX_OUT_OF_RANGE,
  HB_ERR_DUPLICATE_EDGE,
  HB_ERR_INFEASIBLE_PARAMS,
  HB_ERR_ATTEMPTS_EXHAUSTED,
  HB_ERR_DOMAIN,
  HB_ERR_OUT_OF_RANGE,
  HB_ERR_WRONG_UNIFORMITY,
  HB_ERR_MALFORMED_HEADER,
  HB_ERR_EDGE_ARITY,
  HB_ERR_INDEX_OUT_OF_RANGE,
  HB_ERR_DUPLICATE_EDGE_LINE,
  HB_ERR_IO,
  HB_ERR_NOT_APPLICABLE,
  HB_ERR_INTERNAL
} hb_status;

typedef enum hb_format {
  HB_FORMAT_JSON = 0,
  HB_FORMAT_CSV = 1,
  HB_FORMAT_TABLE = 2
} hb_format;

/* Bound selection bits. */
enum {
  HB_BOUND_ELL = 1u << 0,
  HB_BOUND_TURAN = 1u << 1,
  HB_BOUND_TURAN_SPENCER = 1u << 2,
  HB_BOUND_CARO_TUZA = 1u << 3,
  HB_BOUND_CPS = 1u << 4,
  HB_BOUND_ALL = 0x1f
};

typedef struct hb_hypergraph hb_hypergraph;
typedef struct hb_report hb_report;
typedef struct hb_alpha hb_alpha;
typedef struct hb_sweep hb_sweep;
typedef struct hb_examples hb_examples;

/* ---- diagnostics -------------------------------------------------------- */

HB_API const char* hb_status_name(hb_status status);
/* Message of the last failed call on this thread ("" after success). */
HB_API const char* hb_last_error(void);
/* 1-based input line of the last parse error, 0 if none. */
HB_API size_t hb_last_error_line(void);
HB_API void hb_string_free(char* s);

/* ---- hypergraphs -------------------------------------------------------- */

/* `vertices` holds edge_count * k vertex ids, one edge after another. */
HB_API hb_status hb_hypergraph_create(uint32_t n, uint32_t k,
                                      const uint32_t* vertices,
                                      size_t edge_count, hb_hypergraph** out);
HB_API hb_status hb_hypergraph_complete(uint32_t n, uint32_t k,
                                        hb_hypergraph** out);
HB_API hb_status hb_hypergraph_empty(uint32_t n, uint32_t k,
                                     hb_hypergraph** out);
HB_API hb_status hb_hypergraph_complete_minus_one_edge(uint32_t n, uint32_t k,
                                                       hb_hypergraph** out);
HB_API hb_status hb_hypergraph_random_uniform(uint32_t n, uint32_t k,
                                              uint64_t m, uint64_t seed,
                                              hb_hypergraph** out);
HB_API hb_status hb_hypergraph_random_regular(uint32_t n, uint32_t k,
                                              uint64_t d, uint64_t seed,
                                              uint32_t max_attempts,
                                              hb_hypergraph** out);
HB_API hb_status hb_hypergraph_parse(const char* text, int one_based,
                                     hb_hypergraph** out);
HB_API hb_status hb_hypergraph_load(const char* path, int one_based,
                                    hb_hypergraph** out);
HB_API hb_status hb_hypergraph_serialize(const hb_hypergraph* h, char** out);
HB_API void hb_hypergraph_free(hb_hypergraph* h);

HB_API uint32_t hb_hypergraph_n(const hb_hypergraph* h);
HB_API uint32_t hb_hypergraph_k(const hb_hypergraph* h);
HB_API uint64_t hb_hypergraph_m(const hb_hypergraph* h);
/* Writes k vertex ids of edge `index` (canonical order) into `out`. */
HB_API hb_status hb_hypergraph_edge(const hb_hypergraph* h, uint64_t index,
                                    uint32_t* out);
/* Writes n degrees into `out`. */
HB_API hb_status hb_hypergraph_degrees(const hb_hypergraph* h, uint64_t* out);
/* 1 if no edge lies inside the given vertex set, 0 if one does. */
HB_API hb_status hb_is_independent(const hb_hypergraph* h,
                                   const uint32_t* vertices, size_t count,
                                   int* out);

/* ---- bounds ------------------------------------------------------------- */

HB_API hb_status hb_ell_bound(uint32_t n, uint64_t m, uint32_t k,
                              uint32_t* out);
HB_API hb_status hb_ell_closed_form_k2(uint32_t n, uint64_t m, uint32_t* out);
HB_API hb_status hb_turan_bound(uint32_t n, uint64_t m, uint32_t* out);
HB_API hb_status hb_turan_spencer_bound(uint32_t n, uint64_t m, uint32_t k,
                                        uint32_t* out);
HB_API hb_status hb_caro_tuza_bound(const uint64_t* degrees, size_t n,
                                    uint32_t k, uint32_t* out);
/* boundary_warning may be NULL. */
HB_API hb_status hb_cps_bound(const uint64_t* degrees, size_t n, uint32_t k,
                              uint32_t* out, int* boundary_warning);

/* ---- reports ------------------------------------------------------------ */

HB_API hb_status hb_report_compute(const hb_hypergraph* h, unsigned bounds,
                                   int with_alpha, uint64_t alpha_budget,
                                   hb_report** out);
/* `bound` is a single HB_BOUND_* bit. HB_ERR_NOT_APPLICABLE when the report
 * holds no value for it; hb_last_error() then gives the reason. */
HB_API hb_status hb_report_bound(const hb_report* r, unsigned bound,
                                 uint32_t* out);
/* HB_ERR_NOT_APPLICABLE unless alpha was computed to completion. */
HB_API hb_status hb_report_alpha(const hb_report* r, uint32_t* out);
HB_API size_t hb_report_warning_count(const hb_report* r);
HB_API hb_status hb_report_format(const hb_report* r, hb_format format,
                                  char** out);
HB_API void hb_report_free(hb_report* r);

/* ---- exact independence number ------------------------------------------ */

HB_API hb_status hb_alpha_solve(const hb_hypergraph* h, uint64_t node_budget,
                                int use_ell_pruning, hb_alpha** out);
HB_API uint32_t hb_alpha_value(const hb_alpha* a);
HB_API int hb_alpha_exhausted(const hb_alpha* a);
HB_API uint64_t hb_alpha_nodes(const hb_alpha* a);
HB_API size_t hb_alpha_witness_size(const hb_alpha* a);
HB_API const uint32_t* hb_alpha_witness(const hb_alpha* a);
HB_API hb_status hb_alpha_format(const hb_alpha* a, hb_format format,
                                 char** out);
HB_API void hb_alpha_free(hb_alpha* a);

/* ---- sweeps ------------------------------------------------------------- */

typedef enum hb_m_policy {
  HB_M_EXHAUSTIVE = 0,
  HB_M_RANDOM = 1
} hb_m_policy;

typedef struct hb_sweep_spec {
  uint32_t n_min;
  uint32_t n_max;
  uint32_t k_min;
  uint32_t k_max;
  hb_m_policy m_policy;
  uint32_t instances_per_cell;
  uint64_t seed;
  int with_alpha;
  uint64_t alpha_budget;
  uint64_t regular_degree; /* used only when has_regular_degree != 0 */
  int has_regular_degree;
  uint64_t exhaustive_edge_cap;
  uint32_t threads; /* 0: one per hardware thread */
} hb_sweep_spec;

HB_API void hb_sweep_spec_init(hb_sweep_spec* spec);
HB_API hb_status hb_sweep_run(const hb_sweep_spec* spec, hb_sweep** out);
HB_API uint64_t hb_sweep_instances(const hb_sweep* s);
HB_API size_t hb_sweep_violations(const hb_sweep* s);
HB_API size_t hb_sweep_flagged(const hb_sweep* s);
/* Strict wins / ties / losses of `first` over `second` (HB_BOUND_* bits). */
HB_API hb_status hb_sweep_dominance(const hb_sweep* s, unsigned first,
                                    unsigned second, uint64_t* wins,
                                    uint64_t* ties, uint64_t* losses);
HB_API hb_status hb_sweep_format(const hb_sweep* s, hb_format format,
                                 char** out);
HB_API void hb_sweep_free(hb_sweep* s);

/* ---- worked-example checks ---------------------------------------------- */

HB_API hb_status hb_examples_run(hb_examples** out);
HB_API int hb_examples_passed(const hb_examples* e);
HB_API size_t hb_examples_check_count(const hb_examples* e);
HB_API int hb_examples_check_passed(const hb_examples* e, size_t index);
HB_API hb_status hb_examples_format(const hb_examples* e, hb_format format,
                                    char** out);
HB_API void hb_examples_free(hb_examples* e);

#ifdef __cplusplus
}
#endif

#endif /* HIBOUND_H */
