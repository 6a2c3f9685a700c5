#pragma once

#include <string>
#include <vector>

#include "polywork/bitset.hpp"
#include "polywork/lattice.hpp"

namespace polywork {

// Finite poset given by its Hasse diagram (cover lists pointing downward).
// Construction rejects cyclic cover data.
class Poset {
public:
  Poset(std::size_t n, std::vector<std::vector<std::size_t>> lower);

  std::size_t size() const { return n_; }
  const std::vector<std::size_t>& covered_by(std::size_t x) const { return lower_[x]; }
  bool leq(std::size_t a, std::size_t b) const { return below_[b].test(a); }  // a <= b

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  // Elements <= x as a bitset (includes x).
  const Bitset& down_set(std::size_t x) const { return below_[x]; }
  Bitset up_set(std::size_t x) const;

private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<Bitset> below_;
};

Poset poset_from_lattice(const FaceLattice& l);

struct LatticeAxiomReport {
  bool bounded = false;
  bool is_lattice = false;
  bool ranked = false;
  bool atomic = false;
  bool coatomic = false;
  int candidate_dim = -2;  // rank(L) - 1 when ranked
  std::string detail;

  bool all_pass() const { return bounded && is_lattice && ranked && atomic && coatomic; }
};

// Pass/fail report of the face-lattice necessary conditions.
LatticeAxiomReport check_lattice_axioms(const Poset& p);

}  // namespace polywork
