#pragma once

#include <optional>

#include "polywork/budget.hpp"
#include "polywork/hull.hpp"

namespace polywork {

// A triangulation of conv(vertices); simplices index into `vertices`, the
// canonical (irredundant, lexicographically sorted) vertex list.
struct Triangulation {
  VPolytope vertices;
  std::vector<std::vector<int>> simplices;
};

struct VolumeResult {
  Rational value;
  bool full_dimensional;
};

struct OptimalVertexResult {
  bool has_vertex;        // false means the infimum is +infinity
  Rational value;         // min c.v over vertices
  QVector vertex;         // lexicographically smallest optimal vertex
};

// True iff some vertex lies on more than d irredundant facets.
bool is_degenerate(const HPolytope& p);

std::size_t count_vertices(const HPolytope& p);

// Is there a feasible basis of {x : A x = b, x >= 0} whose index set
// contains S? Decided by enumerating column bases.
bool feasible_basis_extension(const QMatrix& a, const QVector& b, const std::vector<std::size_t>& s);

bool is_integral(const HPolytope& p);

// Graph-theoretic diameter of the vertex-edge graph; edges are vertex pairs
// whose common tight rows have rank d-1.
std::size_t diameter(const HPolytope& p);

// Placing triangulation in canonical lexicographic vertex order.
Triangulation triangulate(const VPolytope& q);

// Placing triangulation in the given point order; points must already be
// pairwise-distinct extreme points.
Triangulation placing_triangulation(const VPolytope& verts);

// Exact check that two vertex simplices meet in a common face.
bool simplices_meet_in_common_face(const std::vector<QVector>& verts, const std::vector<int>& s1,
                                   const std::vector<int>& s2);

// True iff conv(Q) admits a triangulation with at most K simplices.
bool min_triangulation(const VPolytope& q, std::size_t k, Budget budget = {});

VolumeResult volume(const VPolytope& q);
VolumeResult volume(const HPolytope& p);

// inf c.v over vertices of the (possibly unbounded) polyhedron P.
OptimalVertexResult optimal_vertex(const HPolytope& p, const QVector& c);

// Is there a vertex v with c.v = value exactly?
bool vertex_with_value(const HPolytope& p, const QVector& c, const Rational& value);

}  // namespace polywork
