#include <doctest.h>

#include <algorithm>
#include <map>

#include "hibound/hypergraph.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace hibound;

namespace {

ErrorCode code_of(std::uint32_t n, std::uint32_t k, std::vector<Edge> edges) {
  auto err = validate(n, k, edges);
  REQUIRE(err.has_value());
  return err->code();
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("validate accepts and rejects") {
  CHECK_FALSE(validate(3, 3, std::vector<Edge>{{0, 1, 2}}).has_value());
  CHECK(code_of(3, 3, {{0, 1, 3}}) == ErrorCode::VertexOutOfRange);
  CHECK(code_of(4, 2, {{0, 1}, {0, 1}}) == ErrorCode::DuplicateEdge);
  CHECK(code_of(4, 2, {{0, 1}, {1, 0}}) == ErrorCode::DuplicateEdge);
  CHECK(code_of(4, 3, {{0, 1}}) == ErrorCode::EdgeWrongSize);
  CHECK(code_of(4, 3, {{0, 0, 1}}) == ErrorCode::EdgeWrongSize);
  CHECK(code_of(0, 2, {}) == ErrorCode::InvalidParams);
  CHECK(code_of(3, 1, {}) == ErrorCode::InvalidParams);

  CHECK(thrown_code([] { Hypergraph::from_edges(3, 3, {{0, 1, 3}}); }) ==
        ErrorCode::VertexOutOfRange);
}

TEST_CASE("from_edges canonicalises") {
  auto h = Hypergraph::from_edges(5, 3, {{4, 2, 0}, {3, 1, 0}});
  REQUIRE(h.m() == 2);
  CHECK(h.edges()[0] == Edge{0, 1, 3});
  CHECK(h.edges()[1] == Edge{0, 2, 4});
  CHECK(h.edge_masks()[1].to_vector() == Edge{0, 2, 4});
  CHECK(h == Hypergraph::from_edges(5, 3, {{0, 1, 3}, {0, 2, 4}}));
}

TEST_CASE("n < k is a legal edgeless hypergraph") {
  auto h = empty(1, 2);
  CHECK(h.n() == 1);
  CHECK(h.m() == 0);
  CHECK(code_of(2, 3, {{0, 1, 2}}) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("complete") {
  CHECK(complete(6, 3).m() == 20);
  auto single = complete(4, 4);
  REQUIRE(single.m() == 1);
  CHECK(single.edges()[0] == Edge{0, 1, 2, 3});
  CHECK(complete(5, 2).m() == 10);
  CHECK(thrown_code([] { complete(3, 4); }) == ErrorCode::InvalidParams);
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (std::uint32_t n = k; n <= 12; ++n)
      CHECK(BigInt(complete(n, k).m()) == oracle::pascal(n, k));
}

TEST_CASE("empty") {
  CHECK(empty(7, 3).m() == 0);
  CHECK(empty(1, 2).m() == 0);
  CHECK(empty(6, 4).m() == 0);
  CHECK(thrown_code([] { empty(0, 3); }) == ErrorCode::InvalidParams);
}

TEST_CASE("complete_minus_one_edge") {
  auto h = complete_minus_one_edge(6, 3);
  CHECK(h.m() == 19);
  CHECK(oracle::degrees(h) == std::vector<std::uint64_t>{9, 9, 9, 10, 10, 10});
  CHECK(complete_minus_one_edge(3, 3).m() == 0);
  CHECK(thrown_code([] { complete_minus_one_edge(2, 3); }) ==
        ErrorCode::InvalidParams);

  for (std::uint32_t n = 3; n <= 20; ++n) {
    auto g = complete_minus_one_edge(n, 3);
    CHECK(BigInt(g.m()) == oracle::pascal(n, 3) - 1);
    const auto full = static_cast<std::uint64_t>(oracle::pascal(n - 1, 2));
    std::vector<std::uint64_t> expect(3, full - 1);
    expect.insert(expect.end(), n - 3, full);
    CHECK(sorted(oracle::degrees(g)) == sorted(expect));
  }
}

TEST_CASE("random_uniform") {
  CHECK(random_uniform(5, 3, 10, 99) == complete(5, 3));
  CHECK(random_uniform(5, 3, 0, 7).m() == 0);
  CHECK(random_uniform(6, 3, 14, 42) == random_uniform(6, 3, 14, 42));
  CHECK(random_uniform(6, 3, 14, 42).m() == 14);
  CHECK_FALSE(random_uniform(12, 3, 50, 1) == random_uniform(12, 3, 50, 2));
  CHECK(thrown_code([] { random_uniform(5, 3, 11, 0); }) ==
        ErrorCode::InvalidParams);

  SUBCASE("sparse sampling over a large universe") {
    auto h = random_uniform(200, 4, 300, 5);
    CHECK(h.m() == 300);
    CHECK(h == random_uniform(200, 4, 300, 5));
    CHECK_FALSE(validate(h.n(), h.k(), h.edges()).has_value());
  }

  SUBCASE("every edge is about equally likely") {
    std::map<Edge, int> hits;
    const int trials = 4000;
    for (int s = 0; s < trials; ++s) ++hits[random_uniform(5, 2, 1, s).edges()[0]];
    CHECK(hits.size() == 10);
    for (auto& [e, c] : hits) {
      CHECK(c > 300);  // expected 400
      CHECK(c < 500);
    }
  }
}

TEST_CASE("random_regular") {
  auto h = random_regular(6, 3, 7, 0);
  CHECK(h.m() == 14);
  for (auto d : degree_sequence(h).degrees) CHECK(d == 7);

  auto g = random_regular(6, 4, 6, 0);
  CHECK(g.m() == 9);
  for (auto d : degree_sequence(g).degrees) CHECK(d == 6);

  CHECK(thrown_code([] { random_regular(5, 3, 2, 0); }) ==
        ErrorCode::InfeasibleParams);
  CHECK(thrown_code([] { random_regular(6, 3, 11, 0); }) ==
        ErrorCode::InfeasibleParams);
  CHECK(thrown_code([] { random_regular(6, 3, 7, 0, 0); }) ==
        ErrorCode::AttemptsExhausted);

  CHECK(random_regular(9, 3, 4, 11) == random_regular(9, 3, 4, 11));

  struct Case {
    std::uint32_t n, k;
    std::uint64_t d;
  };
  for (Case c : {Case{6, 3, 1}, Case{6, 3, 5}, Case{8, 4, 7}, Case{9, 3, 4},
                 Case{10, 2, 3}, Case{12, 3, 10}, Case{7, 3, 9}, Case{10, 5, 20}}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto r = random_regular(c.n, c.k, c.d, seed);
      CHECK(BigInt(r.m()) * c.k == BigInt(c.n) * c.d);
      for (auto d : oracle::degrees(r)) CHECK(d == c.d);
    }
  }
}

TEST_CASE("degree_sequence") {
  for (auto d : degree_sequence(complete(6, 3)).degrees) CHECK(d == 10);
  for (auto d : degree_sequence(empty(5, 3)).degrees) CHECK(d == 0);
  CHECK(sorted(degree_sequence(complete_minus_one_edge(6, 3)).degrees) ==
        std::vector<std::uint64_t>{9, 9, 9, 10, 10, 10});
}

TEST_CASE("handshake identity on every 3-uniform hypergraph on 5 vertices") {
  int count = 0;
  oracle::for_each_hypergraph(5, 3, [&](const Hypergraph& h) {
    ++count;
    const auto ds = degree_sequence(h);
    CHECK(ds.sum() == 3 * h.m());
    CHECK(ds.degrees == oracle::degrees(h));
  });
  CHECK(count == 1024);
}

TEST_CASE("generated instances validate and satisfy the handshake identity") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    for (std::uint32_t n = k; n <= 10; ++n) {
      const auto total = static_cast<std::uint64_t>(oracle::pascal(n, k));
      for (std::uint64_t s = 0; s < 1000; ++s) {
        const std::uint64_t m = (s * 7919) % (total + 1);
        auto h = random_uniform(n, k, m, s);
        REQUIRE(h.m() == m);
        CHECK_FALSE(validate(h.n(), h.k(), h.edges()).has_value());
        CHECK(degree_sequence(h).sum() == k * m);
      }
      CHECK_FALSE(validate(n, k, complete(n, k).edges()).has_value());
      CHECK_FALSE(validate(n, k, complete_minus_one_edge(n, k).edges()).has_value());
    }
  }
}

TEST_CASE("VertexSet") {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
  auto t = VertexSet::of(130, std::vector<Vertex>{0, 129});
  CHECK(t.subset_of(s));
  CHECK_FALSE(s.subset_of(t));
  s.erase(64);
  CHECK(s.size() == 2);
}
