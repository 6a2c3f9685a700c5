#pragma once

#include <vector>

#include "polywork/polytope.hpp"

namespace polywork {

class SimplicialComplex;

namespace gen {

// [0,1]^d as 2d inequalities.
HPolytope cube(std::size_t d);
// x >= 0, sum x <= 1 as d+1 inequalities.
HPolytope simplex(std::size_t d);
// conv(+-e_i), 2d points.
VPolytope crosspoly(std::size_t d);
// Moment curve points (t, t^2, ..., t^d), t = 1..n.
VPolytope cyclic(std::size_t d, std::size_t n);
// Convex rational n-gon: cyclic(2, n).
VPolytope polygon(std::size_t n);
// Cartesian products.
VPolytope product(const VPolytope& a, const VPolytope& b);
HPolytope product(const HPolytope& a, const HPolytope& b);
// base x [0,1].
VPolytope prism(const VPolytope& base);

// Vertex set of cube(d), in canonical order.
VPolytope cube_vertices(std::size_t d);
// Vertices 0, e_1, ..., e_d of the standard simplex.
VPolytope simplex_vertices(std::size_t d);

// Combinatorial platonic incidences (vertex count x facet count).
std::vector<std::vector<bool>> dodecahedron_incidences();
std::vector<std::vector<bool>> icosahedron_incidences();

// The 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2_6();

}  // namespace gen
}  // namespace polywork
