#include "polywork/poset.hpp"

#include <algorithm>

namespace polywork {

Poset::Poset(std::size_t n, std::vector<std::vector<std::size_t>> lower)
    : n_(n), lower_(std::move(lower)) {
  if (lower_.size() != n_) throw InputError("cover list size mismatch");
  for (const auto& l : lower_)
    for (std::size_t c : l)
      if (c >= n_) throw InputError("cover index out of range");

  // Topological order over the downward cover DAG; cycles are invalid.
  std::vector<int> outstanding(n_, 0);
  std::vector<std::vector<std::size_t>> above(n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t c : lower_[x]) {
      ++outstanding[x];
      above[c].push_back(x);
    }
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < n_; ++x)
    if (outstanding[x] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::size_t u = order[head];
    for (std::size_t up : above[u])
      if (--outstanding[up] == 0) order.push_back(up);
  }
  if (order.size() != n_) throw AxiomViolation("cover relation contains a cycle");

  below_.assign(n_, Bitset(n_));
  for (std::size_t u : order) {
    below_[u].set(u);
    for (std::size_t c : lower_[u]) below_[u] |= below_[c];
  }
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<bool> covered(n_, false);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t c : lower_[x]) covered[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x)
    if (!covered[x]) out.push_back(x);
  return out;
}

Bitset Poset::up_set(std::size_t x) const {
  Bitset up(n_);
  for (std::size_t y = 0; y < n_; ++y)
    if (leq(x, y)) up.set(y);
  return up;
}

Poset poset_from_lattice(const FaceLattice& l) {
  std::vector<std::vector<std::size_t>> lower;
  for (const auto& node : l.nodes) lower.push_back(node.covers);
  return Poset(l.nodes.size(), std::move(lower));
}

namespace {

// Unique maximal element of a down-closed candidate set, or SIZE_MAX.
std::size_t unique_maximal(const Poset& p, const Bitset& set) {
  std::size_t found = SIZE_MAX;
  for (int xi : set.elements()) {
    std::size_t x = static_cast<std::size_t>(xi);
    bool maximal = true;
    for (int yi : set.elements()) {
      std::size_t y = static_cast<std::size_t>(yi);
      if (y != x && p.leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      if (found != SIZE_MAX) return SIZE_MAX;
      found = x;
    }
  }
  return found;
}

std::size_t unique_minimal(const Poset& p, const Bitset& set) {
  std::size_t found = SIZE_MAX;
  for (int xi : set.elements()) {
    std::size_t x = static_cast<std::size_t>(xi);
    bool minimal = true;
    for (int yi : set.elements()) {
      std::size_t y = static_cast<std::size_t>(yi);
      if (y != x && p.leq(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      if (found != SIZE_MAX) return SIZE_MAX;
      found = x;
    }
  }
  return found;
}

}  // namespace

LatticeAxiomReport check_lattice_axioms(const Poset& p) {
  LatticeAxiomReport r;
  std::size_t n = p.size();
  auto mins = p.minimal_elements();
  auto maxs = p.maximal_elements();
  r.bounded = n > 0 && mins.size() == 1 && maxs.size() == 1;
  if (!r.bounded) {
    r.detail = "poset is not bounded";
    return r;
  }
  std::size_t bottom = mins[0], top = maxs[0];

  // Ranked: a rank function consistent with every cover edge.
  std::vector<int> rank(n, -1);
  rank[bottom] = 0;
  r.ranked = true;
  // Propagate along covers in topological order (down-sets grow upward).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  for (std::size_t x : order) {
    for (std::size_t c : p.covered_by(x)) {
      if (rank[c] < 0) {
        r.ranked = false;
        break;
      }
      if (rank[x] < 0) rank[x] = rank[c] + 1;
      else if (rank[x] != rank[c] + 1) r.ranked = false;
    }
    if (!r.ranked) break;
  }
  if (r.ranked && rank[top] < 0) r.ranked = false;
  if (r.ranked) r.candidate_dim = rank[top] - 1;

  // Lattice: unique meets and joins for all pairs.
  r.is_lattice = true;
  for (std::size_t a = 0; a < n && r.is_lattice; ++a) {
    for (std::size_t b = a + 1; b < n && r.is_lattice; ++b) {
      Bitset common_lower = p.down_set(a) & p.down_set(b);
      if (unique_maximal(p, common_lower) == SIZE_MAX) {
        r.is_lattice = false;
        r.detail = "meet of " + std::to_string(a) + "," + std::to_string(b) + " undefined";
      }
      Bitset common_upper = p.up_set(a) & p.up_set(b);
      if (r.is_lattice && unique_minimal(p, common_upper) == SIZE_MAX) {
        r.is_lattice = false;
        r.detail = "join of " + std::to_string(a) + "," + std::to_string(b) + " undefined";
      }
    }
  }

  // Atomic: every element is the unique minimal upper bound of the atoms
  // below it. Atoms are the elements covering the bottom.
  std::vector<std::size_t> atoms;
  for (std::size_t x = 0; x < n; ++x)
    if (x != bottom &&
        std::find(p.covered_by(x).begin(), p.covered_by(x).end(), bottom) != p.covered_by(x).end())
      atoms.push_back(x);

  r.atomic = true;
  for (std::size_t x = 0; x < n && r.atomic; ++x) {
    if (x == bottom) continue;
    std::vector<std::size_t> below;
    for (std::size_t a : atoms)
      if (p.leq(a, x)) below.push_back(a);
    if (below.empty()) {
      r.atomic = false;
      r.detail = "element " + std::to_string(x) + " has no atoms below";
      break;
    }
    Bitset ub(n);
    for (std::size_t y = 0; y < n; ++y) {
      bool all = true;
      for (std::size_t a : below)
        if (!p.leq(a, y)) {
          all = false;
          break;
        }
      if (all) ub.set(y);
    }
    if (unique_minimal(p, ub) != x) {
      r.atomic = false;
      r.detail = "element " + std::to_string(x) + " is not a join of atoms";
    }
  }

  // Coatomic: dual condition through the coatoms (covers of the top).
  std::vector<std::size_t> coatoms = p.covered_by(top);
  r.coatomic = true;
  for (std::size_t x = 0; x < n && r.coatomic; ++x) {
    if (x == top) continue;
    std::vector<std::size_t> above;
    for (std::size_t c : coatoms)
      if (p.leq(x, c)) above.push_back(c);
    if (above.empty()) {
      r.coatomic = false;
      r.detail = "element " + std::to_string(x) + " has no coatoms above";
      break;
    }
    Bitset lb(n);
    for (std::size_t y = 0; y < n; ++y) {
      bool all = true;
      for (std::size_t c : above)
        if (!p.leq(y, c)) {
          all = false;
          break;
        }
      if (all) lb.set(y);
    }
    if (unique_maximal(p, lb) != x) {
      r.coatomic = false;
      r.detail = "element " + std::to_string(x) + " is not a meet of coatoms";
    }
  }
  return r;
}

}  // namespace polywork
