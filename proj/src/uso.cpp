#include "polywork/uso.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <random>
#include <unordered_map>

namespace polywork {

namespace {

// Per-run memo so the counter sees each vertex at most once per algorithm.
class CachedOracle {
public:
  explicit CachedOracle(const CubeOracle& oracle)
      : oracle_(oracle), start_(oracle.call_count()) {}

  std::uint32_t sign_of(std::uint32_t v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    if (oracle_.call_count() - start_ > (std::uint64_t{2} << oracle_.dim()))
      throw NotUSO("oracle call cap 2^(d+1) exceeded");
    std::uint32_t s = oracle_.eval(v);
    memo_.emplace(v, s);
    return s;
  }

private:
  const CubeOracle& oracle_;
  std::uint64_t start_;
  std::unordered_map<std::uint32_t, std::uint32_t> memo_;
};

std::uint32_t random_set_bit(std::uint32_t mask, std::mt19937_64& rng) {
  int count = std::popcount(mask);
  std::uniform_int_distribution<int> pick(0, count - 1);
  int skip = pick(rng);
  for (std::uint32_t rest = mask;;) {
    std::uint32_t bit = rest & (~rest + 1);
    if (skip-- == 0) return bit;
    rest ^= bit;
  }
}

}  // namespace

bool validate_uso(const CubeOracle& oracle, Budget budget) {
  int d = oracle.dim();
  BudgetMeter meter(budget);
  std::uint64_t subcubes = 1;
  for (int i = 0; i < d; ++i) subcubes *= 3;
  meter.require(subcubes);

  std::uint32_t n = oracle.vertex_count();
  std::vector<std::uint32_t> sign(n);
  for (std::uint32_t v = 0; v < n; ++v) sign[v] = oracle.eval(v);
  for (std::uint32_t v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) {
      std::uint32_t w = v ^ (std::uint32_t{1} << i);
      if (((sign[v] >> i) & 1) == ((sign[w] >> i) & 1))
        throw InconsistentOracle("edge endpoints disagree at vertex " + std::to_string(v) +
                                 " coordinate " + std::to_string(i));
    }

  std::uint32_t full = n - 1;
  for (std::uint32_t free = 0;; free = (free + 1) & full) {
    std::uint32_t fixed = full & ~free;
    // Enumerate fixed-coordinate assignments as submasks of `fixed`.
    std::uint32_t base = 0;
    for (;;) {
      meter.tick();
      int sinks = 0;
      for (std::uint32_t sub = free;;) {
        std::uint32_t v = base | sub;
        if ((sign[v] & free) == 0 && ++sinks > 1) break;
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
      if (sinks != 1) return false;
      if (base == fixed) break;
      base = (base - fixed) & fixed;  // next submask
    }
    if (free == full) break;
  }
  return true;
}

SinkReport exhaustive_sink(const CubeOracle& oracle) {
  std::uint64_t before = oracle.call_count();
  std::uint32_t n = oracle.vertex_count();
  std::uint32_t sink = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (oracle.eval(v) == 0) {
      if (sink != n) throw NotUSO("two global sinks");
      sink = v;
    }
  }
  if (sink == n) throw NotUSO("no global sink");
  return {sink, oracle.call_count() - before, "exhaustive", 0};
}

SinkReport random_facet_sink(const CubeOracle& oracle, std::uint64_t seed) {
  std::uint64_t before = oracle.call_count();
  CachedOracle cache(oracle);
  std::mt19937_64 rng(seed);
  std::uint32_t full = oracle.vertex_count() - 1;

  auto rec = [&](auto&& self, std::uint32_t free, std::uint32_t v) -> std::uint32_t {
    if (free == 0) {
      cache.sign_of(v);
      return v;
    }
    std::uint32_t bit = random_set_bit(free, rng);
    std::uint32_t w = self(self, free ^ bit, v);
    if ((cache.sign_of(w) & bit) == 0) return w;  // crossing edge incoming
    return self(self, free ^ bit, w ^ bit);
  };
  std::uint32_t start = full ? static_cast<std::uint32_t>(rng()) & full : 0;
  std::uint32_t sink = rec(rec, full, start);
  if ((cache.sign_of(sink) & full) != 0) throw NotUSO("returned vertex is not a sink");
  return {sink, oracle.call_count() - before, "random-facet", seed};
}

SinkReport sw_sink(const CubeOracle& oracle, std::uint64_t seed) {
  std::uint64_t before = oracle.call_count();
  CachedOracle cache(oracle);
  std::mt19937_64 rng(seed);
  std::uint32_t full = oracle.vertex_count() - 1;

  auto rec = [&](auto&& self, std::uint32_t free, std::uint32_t v) -> std::uint32_t {
    if (free == 0) {
      cache.sign_of(v);
      return v;
    }
    std::uint32_t sv = cache.sign_of(v);
    if ((sv & free) == 0) return v;
    std::uint32_t w = v ^ free;  // subcube antipode
    std::uint32_t sw = cache.sign_of(w);
    if ((sw & free) == 0) return w;
    std::uint32_t u = std::popcount(sv & free) <= std::popcount(sw & free) ? v : w;
    std::uint32_t bit = random_set_bit(free, rng);
    std::uint32_t s1 = self(self, free ^ bit, u);
    if ((cache.sign_of(s1) & bit) == 0) return s1;
    return self(self, free ^ bit, s1 ^ bit);
  };
  std::uint32_t start = full ? static_cast<std::uint32_t>(rng()) & full : 0;
  std::uint32_t sink = rec(rec, full, start);
  if ((cache.sign_of(sink) & full) != 0) throw NotUSO("returned vertex is not a sink");
  return {sink, oracle.call_count() - before, "sw", seed};
}

namespace uso {

CubeOracle linear(const std::vector<Rational>& weights) {
  int d = static_cast<int>(weights.size());
  if (d > 20) throw UnsupportedParameter("linear oracle limited to d <= 20");
  // Generic means all signed subset sums are nonzero, i.e. all plain subset
  // sums are distinct.
  std::vector<Rational> sums{Rational(0)};
  for (const auto& w : weights) {
    std::size_t sz = sums.size();
    for (std::size_t i = 0; i < sz; ++i) sums.push_back(sums[i] + w);
  }
  std::sort(sums.begin(), sums.end());
  for (std::size_t i = 1; i < sums.size(); ++i)
    if (sums[i] == sums[i - 1]) throw DegenerateWeights("zero signed subset sum of weights");

  std::vector<bool> positive;
  for (const auto& w : weights) positive.push_back(w.sign() > 0);
  return CubeOracle(d, [positive, d](std::uint32_t v) {
    std::uint32_t out = 0;
    for (int i = 0; i < d; ++i) {
      bool bit = (v >> i) & 1;
      if (bit == positive[static_cast<std::size_t>(i)]) out |= std::uint32_t{1} << i;
    }
    return out;
  });
}

CubeOracle klee_minty(int d) {
  if (d < 0 || d > 20) throw UnsupportedParameter("klee_minty oracle limited to 0 <= d <= 20");
  return CubeOracle(d, [d](std::uint32_t v) {
    std::uint32_t out = 0;
    for (int i = 0; i < d; ++i)
      if (std::popcount(v >> i) & 1) out |= std::uint32_t{1} << i;
    return out;
  });
}

CubeOracle product(const CubeOracle& a, const CubeOracle& b) {
  int da = a.dim(), db = b.dim();
  std::uint32_t low = (std::uint32_t{1} << da) - 1;
  return CubeOracle(da + db, [a, b, da, low](std::uint32_t v) {
    return a.eval(v & low) | (b.eval(v >> da) << da);
  });
}

CubeOracle from_table(int d, std::vector<std::uint32_t> table) {
  if (table.size() != (std::size_t{1} << d)) throw InputError("oracle table has wrong size");
  auto shared = std::make_shared<std::vector<std::uint32_t>>(std::move(table));
  return CubeOracle(d, [shared](std::uint32_t v) { return (*shared)[v]; });
}

CubeOracle flip(const CubeOracle& base, const std::vector<std::pair<std::uint32_t, int>>& edges,
                Budget budget) {
  int d = base.dim();
  std::vector<std::uint32_t> table(base.vertex_count());
  for (std::uint32_t v = 0; v < base.vertex_count(); ++v) table[v] = base.eval(v);
  for (const auto& [v, i] : edges) {
    if (v >= base.vertex_count() || i < 0 || i >= d) throw InputError("flip edge out of range");
    table[v] ^= std::uint32_t{1} << i;
    table[v ^ (std::uint32_t{1} << i)] ^= std::uint32_t{1} << i;
  }
  CubeOracle out = from_table(d, std::move(table));
  if (!validate_uso(out, budget)) throw NotUSO("flip destroyed the unique-sink property");
  return out;
}

}  // namespace uso
}  // namespace polywork
