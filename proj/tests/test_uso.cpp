#include "doctest.h"

#include <set>

#include "polywork/uso.hpp"

using namespace polywork;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> pow2_weights(int d) {
  std::vector<Rational> w;
  for (int i = 0; i < d; ++i) w.push_back(q(1L << i));
  return w;
}

// Acyclicity of the orientation as a DAG over the 2^d vertices.
bool orientation_acyclic(const CubeOracle& oracle) {
  std::uint32_t n = oracle.vertex_count();
  int d = oracle.dim();
  std::vector<std::uint32_t> sign(n);
  for (std::uint32_t v = 0; v < n; ++v) sign[v] = oracle.eval(v);
  std::vector<int> indeg(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i)
      if ((sign[v] >> i) & 1) ++indeg[v ^ (std::uint32_t{1} << i)];
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    ++seen;
    for (int i = 0; i < d; ++i)
      if ((sign[u] >> i) & 1)
        if (--indeg[u ^ (std::uint32_t{1} << i)] == 0) queue.push_back(u ^ (std::uint32_t{1} << i));
  }
  return seen == n;
}

}  // namespace

TEST_CASE("generators validate") {
  CHECK(validate_uso(uso::linear(pow2_weights(3))));
  CHECK(validate_uso(uso::linear({q(3), q(-5), q(7)})));
  for (int d = 0; d <= 6; ++d) CHECK(validate_uso(uso::klee_minty(d)));
  CHECK(validate_uso(uso::product(uso::linear(pow2_weights(2)), uso::klee_minty(2))));
  SUBCASE("linear and Klee-Minty are acyclic (AOF, not just USO)") {
    CHECK(orientation_acyclic(uso::linear(pow2_weights(4))));
    CHECK(orientation_acyclic(uso::klee_minty(5)));
  }
  SUBCASE("degenerate weights rejected") {
    CHECK_THROWS_AS(uso::linear({q(1), q(2), q(3)}), DegenerateWeights);  // 1+2-3 = 0
    CHECK_THROWS_AS(uso::linear({q(0), q(1)}), DegenerateWeights);
  }
  SUBCASE("inconsistent oracle detected") {
    CubeOracle bad(2, [](std::uint32_t) { return 0u; });  // every vertex all '-'
    CHECK_THROWS_AS(validate_uso(bad), InconsistentOracle);
  }
}

TEST_CASE("flips") {
  SUBCASE("flipping the lone outgoing edge of a Klee-Minty vertex makes a second sink") {
    // v = e0 + e1 has sign vector with exactly one '+', at coordinate 1, and
    // its flip partner e0 is not the sink. Verified here by hand: flipping
    // makes both v and 0 all-'-'.
    CubeOracle km = uso::klee_minty(3);
    CHECK(km.eval(0b011) == 0b010);
    CHECK(km.eval(0) == 0);
    CHECK_THROWS_AS(uso::flip(km, {{0b011, 1}}), NotUSO);
  }
  SUBCASE("every single flip of the uniform orientation stays a USO") {
    CubeOracle lin = uso::linear(pow2_weights(3));
    for (std::uint32_t v = 0; v < 8; ++v)
      for (int i = 0; i < 3; ++i) CHECK_NOTHROW(uso::flip(lin, {{v, i}}));
  }
  SUBCASE("moving the sink by flipping at the sink is fine") {
    CubeOracle km = uso::klee_minty(3);
    CHECK_NOTHROW(uso::flip(km, {{0, 0}}));
  }
}

TEST_CASE("sink algorithms") {
  SUBCASE("d = 1: at most 2 calls") {
    CubeOracle o = uso::linear({q(5)});
    SinkReport r = random_facet_sink(o, 42);
    CHECK(r.sink == 0);
    CHECK(r.calls <= 2);
    SinkReport s = sw_sink(o, 42);
    CHECK(s.sink == 0);
    CHECK(s.calls <= 2);
  }
  SUBCASE("d = 0: one confirming call") {
    CubeOracle o = uso::klee_minty(0);
    CHECK(random_facet_sink(o, 1).calls == 1);
    CHECK(sw_sink(o, 1).calls == 1);
    CHECK(exhaustive_sink(o).sink == 0);
  }
  SUBCASE("linear d = 3 sink is the origin") {
    CubeOracle o = uso::linear(pow2_weights(3));
    CHECK(random_facet_sink(o, 7).sink == 0);
    CHECK(sw_sink(o, 7).sink == 0);
  }
  SUBCASE("agreement with exhaustive scan over seeds and oracles") {
    std::vector<CubeOracle> corpus;
    corpus.push_back(uso::linear(pow2_weights(5)));
    corpus.push_back(uso::linear({q(-1), q(2), q(-4), q(8), q(-16)}));
    corpus.push_back(uso::klee_minty(6));
    corpus.push_back(uso::product(uso::klee_minty(3), uso::linear(pow2_weights(3))));
    for (const auto& o : corpus) {
      std::uint32_t expect = exhaustive_sink(o).sink;
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK(random_facet_sink(o, seed).sink == expect);
        CHECK(sw_sink(o, seed).sink == expect);
      }
    }
  }
  SUBCASE("product sink is the pair of factor sinks") {
    CubeOracle a = uso::linear({q(-1), q(2)});   // factor sink: coordinate 0 flipped -> 01
    CubeOracle b = uso::linear(pow2_weights(3)); // sink 000
    std::uint32_t sa = exhaustive_sink(a).sink;
    std::uint32_t sb = exhaustive_sink(b).sink;
    CubeOracle p = uso::product(a, b);
    CHECK(exhaustive_sink(p).sink == (sa | (sb << 2)));
  }
  SUBCASE("linear d = 6: correct sink in fewer than 64 calls") {
    CubeOracle o = uso::linear(pow2_weights(6));
    SinkReport r = sw_sink(o, 2026);
    CHECK(r.sink == 0);
    CHECK(r.calls < 64);
  }
  SUBCASE("Klee-Minty d = 5 over many seeds") {
    CubeOracle o = uso::klee_minty(5);
    std::uint32_t expect = exhaustive_sink(o).sink;
    std::uint64_t total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      SinkReport r = random_facet_sink(o, seed);
      CHECK(r.sink == expect);
      total += r.calls;
    }
    CHECK(total > 0);
    CHECK(total <= 200 * (2u << 5));
  }
}

TEST_CASE("oracle call accounting") {
  std::uint64_t external = 0;
  CubeOracle counted(3, [&external](std::uint32_t v) {
    ++external;
    std::uint32_t out = 0;
    for (int i = 0; i < 3; ++i)
      if ((v >> i) & 1) out |= std::uint32_t{1} << i;
    return out;
  });
  SinkReport r = random_facet_sink(counted, 11);
  CHECK(counted.call_count() == external);
  CHECK(r.calls == external);
  SinkReport s = sw_sink(counted, 11);
  CHECK(counted.call_count() == external);
  CHECK(s.calls == external - r.calls);
  CHECK(validate_uso(counted));
  CHECK(counted.call_count() == external);
}
