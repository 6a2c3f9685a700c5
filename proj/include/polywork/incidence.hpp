#pragma once

#include <string>
#include <vector>

#include "polywork/bitset.hpp"
#include "polywork/polytope.hpp"

namespace polywork {

// 0/1 vertex-facet incidences: entry (v, f) is set iff vertex v lies on
// facet f. Only cheap invariants are checkable; callers own data integrity.
class IncidenceMatrix {
public:
  IncidenceMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), cols_(m, Bitset(n)) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t facet_count() const { return m_; }

  void set(std::size_t v, std::size_t f) { cols_[f].set(v); }
  bool test(std::size_t v, std::size_t f) const { return cols_[f].test(v); }

  // Vertex set of facet f, as a bitset over vertices.
  const Bitset& facet_vertices(std::size_t f) const { return cols_[f]; }
  // Facet set of vertex v, as a bitset over facets.
  Bitset vertex_facets(std::size_t v) const {
    Bitset row(m_);
    for (std::size_t f = 0; f < m_; ++f)
      if (cols_[f].test(v)) row.set(f);
    return row;
  }

  std::size_t incidence_count() const {  // the symbol alpha
    std::size_t a = 0;
    for (const auto& c : cols_) a += c.count();
    return a;
  }

  IncidenceMatrix transposed() const;

  // Checks the cheap invariants: no repeated rows or columns, and (for
  // dim >= 1 data) no all-ones row or column. Returns a diagnostic or "".
  std::string invariant_violation() const;

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return a.n_ == b.n_ && a.cols_ == b.cols_;
  }

private:
  std::size_t n_, m_;
  std::vector<Bitset> cols_;
};

// Incidences of a bounded full-dimensional H-polytope: vertices in canonical
// order against the irredundant rows (in surviving input order).
IncidenceMatrix vertex_facet_incidences(const HPolytope& p);

}  // namespace polywork
