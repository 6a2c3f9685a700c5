#include "polywork/incidence.hpp"

#include "polywork/hull.hpp"

namespace polywork {

IncidenceMatrix IncidenceMatrix::transposed() const {
  IncidenceMatrix t(m_, n_);
  for (std::size_t f = 0; f < m_; ++f)
    for (std::size_t v = 0; v < n_; ++v)
      if (cols_[f].test(v)) t.set(f, v);
  return t;
}

std::string IncidenceMatrix::invariant_violation() const {
  for (std::size_t f = 0; f < m_; ++f) {
    if (cols_[f].count() == n_ && n_ > 0) return "all-ones column " + std::to_string(f);
    for (std::size_t g = f + 1; g < m_; ++g)
      if (cols_[f] == cols_[g]) return "identical columns " + std::to_string(f) + "," + std::to_string(g);
  }
  std::vector<Bitset> rows;
  for (std::size_t v = 0; v < n_; ++v) rows.push_back(vertex_facets(v));
  for (std::size_t v = 0; v < n_; ++v) {
    if (rows[v].count() == m_ && m_ > 0) return "all-ones row " + std::to_string(v);
    for (std::size_t w = v + 1; w < n_; ++w)
      if (rows[v] == rows[w]) return "identical rows " + std::to_string(v) + "," + std::to_string(w);
  }
  return "";
}

IncidenceMatrix vertex_facet_incidences(const HPolytope& p) {
  HPolytope rows = remove_redundancy(p);
  VPolytope verts = enumerate_vertices(p);  // throws NotBounded / EmptyPolyhedron
  IncidenceMatrix inc(verts.point_count(), rows.row_count());
  for (std::size_t v = 0; v < verts.point_count(); ++v) {
    QVector s = rows.slacks(verts.point(v));
    for (std::size_t f = 0; f < rows.row_count(); ++f)
      if (s[f].is_zero()) inc.set(v, f);
  }
  return inc;
}

}  // namespace polywork
