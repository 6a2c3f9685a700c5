#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polywork/budget.hpp"
#include "polywork/rational.hpp"

namespace polywork {

// Oracle for an edge orientation of the d-cube graph. The sign vector of a
// vertex is a '+'-bitmask: bit i set means the coordinate-i edge leaves the
// vertex (points to v XOR e_i). The global sink is the all-'-' vertex.
class CubeOracle {
public:
  CubeOracle(int d, std::function<std::uint32_t(std::uint32_t)> fn)
      : d_(d), fn_(std::move(fn)) {}

  int dim() const { return d_; }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << d_; }
  std::uint64_t call_count() const { return calls_; }

  std::uint32_t eval(std::uint32_t v) const {
    ++calls_;
    return fn_(v) & (vertex_count() - 1);
  }

private:
  int d_;
  std::function<std::uint32_t(std::uint32_t)> fn_;
  mutable std::uint64_t calls_ = 0;
};

struct SinkReport {
  std::uint32_t sink = 0;
  std::uint64_t calls = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
};

// Exhaustive check of the unique-sink property on all 3^d subcubes, plus the
// edge-consistency invariant (throws InconsistentOracle on disagreement).
bool validate_uso(const CubeOracle& oracle, Budget budget = {});

// Reference algorithm: evaluates every vertex and demands exactly one sink.
SinkReport exhaustive_sink(const CubeOracle& oracle);

// Random-facet recursion: solve a random facet through the current vertex,
// follow the crossing edge if its sink is not global, recurse on the
// antipodal facet. At most 2^(d+1) oracle calls on any consistent input.
SinkReport random_facet_sink(const CubeOracle& oracle, std::uint64_t seed);

// Divide strategy with antipodal probing: query the entry vertex and its
// subcube antipode, descend into the facet holding the more sink-like one.
SinkReport sw_sink(const CubeOracle& oracle, std::uint64_t seed);

namespace uso {

// AOF induced by generic weights; throws DegenerateWeights when some signed
// subset sum vanishes.
CubeOracle linear(const std::vector<Rational>& weights);
// The Klee-Minty orientation: coordinate i leaves v iff popcount(v >> i) is
// odd. AOF with a Hamiltonian descending path.
CubeOracle klee_minty(int d);
// Product orientation: factor 1 on the low bits, factor 2 on the high bits.
CubeOracle product(const CubeOracle& a, const CubeOracle& b);
// Explicit table oracle.
CubeOracle from_table(int d, std::vector<std::uint32_t> table);
// Flip the given (vertex, coordinate) edges in a materialized copy; the
// result is validated and NotUSO is thrown if the flip broke the property.
CubeOracle flip(const CubeOracle& base, const std::vector<std::pair<std::uint32_t, int>>& edges,
                Budget budget = {});

}  // namespace uso
}  // namespace polywork
