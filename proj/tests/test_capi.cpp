#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "hibound/hibound.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(hb_status_name(HB_OK)) == "OK");
  CHECK(std::string(hb_status_name(HB_ERR_DUPLICATE_EDGE_LINE)) == "DuplicateEdgeLine");
  CHECK(std::string(hb_status_name(HB_ERR_NOT_APPLICABLE)) == "NotApplicable");
  CHECK(std::string(hb_status_name(static_cast<hb_status>(999))) == "Unknown");
}

TEST_CASE("hypergraph handles") {
  const uint32_t verts[] = {2, 1, 0, 3, 4, 5};
  hb_hypergraph* h = nullptr;
  REQUIRE(hb_hypergraph_create(6, 3, verts, 2, &h) == HB_OK);
  CHECK(hb_hypergraph_n(h) == 6);
  CHECK(hb_hypergraph_k(h) == 3);
  CHECK(hb_hypergraph_m(h) == 2);
  uint32_t e[3];
  REQUIRE(hb_hypergraph_edge(h, 0, e) == HB_OK);
  CHECK(e[0] == 0);
  CHECK(e[2] == 2);
  CHECK(std::string(hb_last_error()).empty());
  CHECK(hb_hypergraph_edge(h, 2, e) == HB_ERR_OUT_OF_RANGE);
  CHECK(std::string(hb_last_error()).size() > 0);

  uint64_t deg[6];
  REQUIRE(hb_hypergraph_degrees(h, deg) == HB_OK);
  for (auto d : deg) CHECK(d == 1);

  int ind = -1;
  const uint32_t s1[] = {0, 1, 3, 4};
  const uint32_t s2[] = {3, 4, 5};
  const uint32_t s3[] = {9};
  CHECK(hb_is_independent(h, s1, 4, &ind) == HB_OK);
  CHECK(ind == 1);
  CHECK(hb_is_independent(h, s2, 3, &ind) == HB_OK);
  CHECK(ind == 0);
  CHECK(hb_is_independent(h, nullptr, 0, &ind) == HB_OK);
  CHECK(ind == 1);
  CHECK(hb_is_independent(h, s3, 1, &ind) == HB_ERR_VERTEX_OUT_OF_RANGE);

  char* text = nullptr;
  REQUIRE(hb_hypergraph_serialize(h, &text) == HB_OK);
  CHECK(take(text) == "3 6\n0 1 2\n3 4 5\n");
  hb_hypergraph_free(h);
  hb_hypergraph_free(nullptr);
}

TEST_CASE("generators") {
  hb_hypergraph* h = nullptr;
  REQUIRE(hb_hypergraph_complete(6, 3, &h) == HB_OK);
  CHECK(hb_hypergraph_m(h) == 20);
  hb_hypergraph_free(h);

  REQUIRE(hb_hypergraph_empty(5, 2, &h) == HB_OK);
  CHECK(hb_hypergraph_m(h) == 0);
  hb_hypergraph_free(h);

  REQUIRE(hb_hypergraph_complete_minus_one_edge(6, 3, &h) == HB_OK);
  CHECK(hb_hypergraph_m(h) == 19);
  hb_hypergraph_free(h);

  REQUIRE(hb_hypergraph_random_uniform(8, 3, 20, 4, &h) == HB_OK);
  CHECK(hb_hypergraph_m(h) == 20);
  hb_hypergraph_free(h);

  REQUIRE(hb_hypergraph_random_regular(6, 3, 7, 0, 64, &h) == HB_OK);
  uint64_t deg[6];
  REQUIRE(hb_hypergraph_degrees(h, deg) == HB_OK);
  for (auto d : deg) CHECK(d == 7);
  hb_hypergraph_free(h);

  h = reinterpret_cast<hb_hypergraph*>(0x1);
  CHECK(hb_hypergraph_random_regular(5, 3, 2, 0, 64, &h) == HB_ERR_INFEASIBLE_PARAMS);
  CHECK(h == nullptr);
  CHECK(hb_hypergraph_random_regular(6, 3, 7, 0, 0, &h) == HB_ERR_ATTEMPTS_EXHAUSTED);
  CHECK(hb_hypergraph_random_uniform(5, 3, 11, 0, &h) == HB_ERR_INVALID_PARAMS);
  CHECK(hb_hypergraph_complete(3, 4, &h) == HB_ERR_INVALID_PARAMS);
}

TEST_CASE("construction errors") {
  hb_hypergraph* h = nullptr;
  const uint32_t out_of_range[] = {0, 1, 6};
  CHECK(hb_hypergraph_create(6, 3, out_of_range, 1, &h) == HB_ERR_VERTEX_OUT_OF_RANGE);
  const uint32_t dup[] = {0, 1, 2, 2, 1, 0};
  CHECK(hb_hypergraph_create(6, 3, dup, 2, &h) == HB_ERR_DUPLICATE_EDGE);
  const uint32_t repeat[] = {0, 0, 1};
  CHECK(hb_hypergraph_create(6, 3, repeat, 1, &h) == HB_ERR_EDGE_WRONG_SIZE);
  CHECK(hb_hypergraph_create(6, 3, nullptr, 1, &h) == HB_ERR_NULL_ARGUMENT);
  CHECK(hb_hypergraph_create(6, 3, nullptr, 0, nullptr) == HB_ERR_NULL_ARGUMENT);
  CHECK(hb_hypergraph_create(6, 1, nullptr, 0, &h) == HB_ERR_INVALID_PARAMS);
  REQUIRE(hb_hypergraph_create(6, 3, nullptr, 0, &h) == HB_OK);
  CHECK(hb_hypergraph_m(h) == 0);
  hb_hypergraph_free(h);
}

TEST_CASE("parse and load") {
  hb_hypergraph* h = nullptr;
  REQUIRE(hb_hypergraph_parse("# x\n3 4\n1 2 3\n", 1, &h) == HB_OK);
  uint32_t e[3];
  REQUIRE(hb_hypergraph_edge(h, 0, e) == HB_OK);
  CHECK(e[0] == 0);
  hb_hypergraph_free(h);

  CHECK(hb_hypergraph_parse("3 6\n0 1 2\n0 2 1\n", 0, &h) == HB_ERR_DUPLICATE_EDGE_LINE);
  CHECK(hb_last_error_line() == 3);
  CHECK(std::string(hb_last_error()).find("line 3") != std::string::npos);
  CHECK(hb_hypergraph_parse("2 4\n0 1\n1 5\n", 0, &h) == HB_ERR_INDEX_OUT_OF_RANGE);
  CHECK(hb_last_error_line() == 3);
  CHECK(hb_hypergraph_parse("3 4\n0 1\n", 0, &h) == HB_ERR_EDGE_ARITY);
  CHECK(hb_last_error_line() == 2);
  CHECK(hb_hypergraph_parse("hello\n", 0, &h) == HB_ERR_MALFORMED_HEADER);
  CHECK(hb_last_error_line() == 1);
  CHECK(hb_hypergraph_parse(nullptr, 0, &h) == HB_ERR_NULL_ARGUMENT);
  CHECK(hb_last_error_line() == 0);

  CHECK(hb_hypergraph_load("/nonexistent/hibound/file.txt", 0, &h) == HB_ERR_IO);

  const std::string path = "hibound_capi_load.txt";
  if (FILE* f = std::fopen(path.c_str(), "w")) {
    std::fputs("2 3\n0 1\n1 2\n", f);
    std::fclose(f);
  }
  REQUIRE(hb_hypergraph_load(path.c_str(), 0, &h) == HB_OK);
  CHECK(hb_hypergraph_m(h) == 2);
  hb_hypergraph_free(h);
  std::remove(path.c_str());
}

TEST_CASE("bound functions") {
  uint32_t v = 0;
  REQUIRE(hb_ell_bound(6, 14, 3, &v) == HB_OK);
  CHECK(v == 3);
  REQUIRE(hb_ell_bound(10, 20, 3, &v) == HB_OK);
  CHECK(v == 4);
  CHECK(hb_ell_bound(5, 11, 3, &v) == HB_ERR_INVALID_PARAMS);
  CHECK(hb_ell_bound(5, 1, 3, nullptr) == HB_ERR_NULL_ARGUMENT);
  REQUIRE(hb_ell_closed_form_k2(5, 5, &v) == HB_OK);
  CHECK(v == 2);
  REQUIRE(hb_turan_bound(5, 5, &v) == HB_OK);
  CHECK(v == 2);
  REQUIRE(hb_turan_spencer_bound(6, 14, 3, &v) == HB_OK);
  CHECK(v == 2);
  CHECK(hb_turan_spencer_bound(6, 2, 2, &v) == HB_ERR_OUT_OF_RANGE);

  const uint64_t seven[] = {7, 7, 7, 7, 7, 7};
  REQUIRE(hb_caro_tuza_bound(seven, 6, 3, &v) == HB_OK);
  CHECK(v == 2);
  int warn = -1;
  REQUIRE(hb_cps_bound(seven, 6, 3, &v, &warn) == HB_OK);
  CHECK(v == 2);
  CHECK(warn == 0);
  REQUIRE(hb_cps_bound(seven, 6, 3, &v, nullptr) == HB_OK);
  CHECK(hb_cps_bound(seven, 6, 4, &v, nullptr) == HB_ERR_WRONG_UNIFORMITY);
  const uint64_t six[] = {6, 6, 6, 6, 6, 6};
  REQUIRE(hb_caro_tuza_bound(six, 6, 4, &v) == HB_OK);
  CHECK(v == 3);
}

TEST_CASE("reports") {
  hb_hypergraph* h = nullptr;
  REQUIRE(hb_hypergraph_random_regular(6, 3, 7, 0, 64, &h) == HB_OK);
  hb_report* r = nullptr;
  REQUIRE(hb_report_compute(h, HB_BOUND_ALL, 1, 0, &r) == HB_OK);
  uint32_t v = 0;
  REQUIRE(hb_report_bound(r, HB_BOUND_ELL, &v) == HB_OK);
  CHECK(v == 3);
  REQUIRE(hb_report_bound(r, HB_BOUND_CARO_TUZA, &v) == HB_OK);
  CHECK(v == 2);
  REQUIRE(hb_report_bound(r, HB_BOUND_TURAN_SPENCER, &v) == HB_OK);
  CHECK(v == 2);
  REQUIRE(hb_report_bound(r, HB_BOUND_CPS, &v) == HB_OK);
  CHECK(v == 2);
  CHECK(hb_report_bound(r, HB_BOUND_TURAN, &v) == HB_ERR_NOT_APPLICABLE);
  CHECK(std::string(hb_last_error()) == "turan requires k=2");
  CHECK(hb_report_bound(r, HB_BOUND_ELL | HB_BOUND_CPS, &v) == HB_ERR_INVALID_PARAMS);
  REQUIRE(hb_report_alpha(r, &v) == HB_OK);
  CHECK(v == 3);
  CHECK(hb_report_warning_count(r) == 0);

  char* s = nullptr;
  REQUIRE(hb_report_format(r, HB_FORMAT_JSON, &s) == HB_OK);
  const auto json = take(s);
  CHECK(json.find("\"ell\": 3") != std::string::npos);
  CHECK(json.find("\"na\": \"turan requires k=2\"") != std::string::npos);
  REQUIRE(hb_report_format(r, HB_FORMAT_CSV, &s) == HB_OK);
  CHECK(take(s) ==
        "n,m,k,ell,turan,turan_spencer,caro_tuza,cps,alpha\n6,14,3,3,na,2,2,2,3\n");
  REQUIRE(hb_report_format(r, HB_FORMAT_TABLE, &s) == HB_OK);
  CHECK(take(s).find("caro_tuza") != std::string::npos);
  CHECK(hb_report_format(r, static_cast<hb_format>(7), &s) == HB_ERR_INVALID_PARAMS);
  hb_report_free(r);

  REQUIRE(hb_report_compute(h, HB_BOUND_ELL, 0, 0, &r) == HB_OK);
  CHECK(hb_report_alpha(r, &v) == HB_ERR_NOT_APPLICABLE);
  CHECK(std::string(hb_last_error()) == "alpha not requested");
  CHECK(hb_report_bound(r, HB_BOUND_CARO_TUZA, &v) == HB_ERR_NOT_APPLICABLE);
  CHECK(std::string(hb_last_error()) == "not requested");
  hb_report_free(r);
  hb_hypergraph_free(h);

  REQUIRE(hb_hypergraph_random_uniform(24, 3, 300, 4, &h) == HB_OK);
  REQUIRE(hb_report_compute(h, HB_BOUND_ALL, 1, 1, &r) == HB_OK);
  CHECK(hb_report_alpha(r, &v) == HB_ERR_NOT_APPLICABLE);
  CHECK(hb_report_warning_count(r) >= 1);
  hb_report_free(r);
  hb_hypergraph_free(h);

  CHECK(hb_report_compute(nullptr, HB_BOUND_ALL, 0, 0, &r) == HB_ERR_NULL_ARGUMENT);
}

TEST_CASE("exact solver") {
  hb_hypergraph* h = nullptr;
  REQUIRE(hb_hypergraph_complete_minus_one_edge(6, 3, &h) == HB_OK);
  hb_alpha* a = nullptr;
  REQUIRE(hb_alpha_solve(h, 1000000, 1, &a) == HB_OK);
  CHECK(hb_alpha_value(a) == 3);
  CHECK(hb_alpha_exhausted(a) == 1);
  CHECK(hb_alpha_nodes(a) > 0);
  REQUIRE(hb_alpha_witness_size(a) == 3);
  const uint32_t* w = hb_alpha_witness(a);
  int ind = 0;
  REQUIRE(hb_is_independent(h, w, 3, &ind) == HB_OK);
  CHECK(ind == 1);
  char* s = nullptr;
  REQUIRE(hb_alpha_format(a, HB_FORMAT_JSON, &s) == HB_OK);
  CHECK(take(s).find("\"witness\"") != std::string::npos);
  hb_alpha_free(a);

  CHECK(hb_alpha_solve(h, 0, 0, &a) == HB_ERR_INVALID_PARAMS);
  CHECK(hb_alpha_solve(nullptr, 10, 0, &a) == HB_ERR_NULL_ARGUMENT);
  hb_hypergraph_free(h);

  CHECK(hb_alpha_value(nullptr) == 0);
  CHECK(hb_alpha_witness_size(nullptr) == 0);
}

TEST_CASE("sweeps") {
  hb_sweep_spec spec;
  hb_sweep_spec_init(&spec);
  CHECK(spec.n_min == 4);
  CHECK(spec.n_max == 8);
  CHECK(spec.with_alpha == 1);
  spec.n_min = spec.n_max = 5;
  spec.k_min = spec.k_max = 3;
  spec.m_policy = HB_M_EXHAUSTIVE;
  hb_sweep* s = nullptr;
  REQUIRE(hb_sweep_run(&spec, &s) == HB_OK);
  CHECK(hb_sweep_instances(s) == 1024);
  CHECK(hb_sweep_violations(s) == 0);
  CHECK(hb_sweep_flagged(s) == 0);
  uint64_t wins = 1, ties = 0, losses = 0;
  REQUIRE(hb_sweep_dominance(s, HB_BOUND_ELL, HB_BOUND_CARO_TUZA, &wins, &ties, &losses) ==
          HB_OK);
  CHECK(wins + ties + losses == 1024);
  CHECK(hb_sweep_dominance(s, HB_BOUND_CPS, HB_BOUND_ELL, &wins, nullptr, nullptr) ==
        HB_ERR_INVALID_PARAMS);
  char* out = nullptr;
  REQUIRE(hb_sweep_format(s, HB_FORMAT_JSON, &out) == HB_OK);
  CHECK(take(out).find("\"instances\": 1024") != std::string::npos);
  hb_sweep_free(s);

  spec.k_min = 1;
  CHECK(hb_sweep_run(&spec, &s) == HB_ERR_INVALID_PARAMS);
  CHECK(hb_sweep_run(nullptr, &s) == HB_ERR_NULL_ARGUMENT);

  hb_sweep_spec_init(&spec);
  spec.n_min = spec.n_max = 6;
  spec.k_min = spec.k_max = 3;
  spec.has_regular_degree = 1;
  spec.regular_degree = 7;
  spec.instances_per_cell = 5;
  REQUIRE(hb_sweep_run(&spec, &s) == HB_OK);
  REQUIRE(hb_sweep_dominance(s, HB_BOUND_ELL, HB_BOUND_CARO_TUZA, &wins, &ties, &losses) ==
          HB_OK);
  CHECK(wins == 5);
  hb_sweep_free(s);
}

TEST_CASE("worked examples") {
  hb_examples* e = nullptr;
  REQUIRE(hb_examples_run(&e) == HB_OK);
  CHECK(hb_examples_passed(e) == 1);
  REQUIRE(hb_examples_check_count(e) == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(hb_examples_check_passed(e, i) == 1);
  CHECK(hb_examples_check_passed(e, 4) == 0);
  char* s = nullptr;
  REQUIRE(hb_examples_format(e, HB_FORMAT_TABLE, &s) == HB_OK);
  CHECK(take(s).find("[PASS]") != std::string::npos);
  hb_examples_free(e);
}
