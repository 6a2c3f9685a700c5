#include "doctest.h"

#include "polywork/generators.hpp"
#include "polywork/hull.hpp"
#include "polywork/steinitz.hpp"

using namespace polywork;

namespace {

IncidenceMatrix from_rows(std::size_t n, std::size_t m, const std::vector<std::vector<bool>>& rows) {
  IncidenceMatrix a(n, m);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t f = 0; f < m; ++f)
      if (rows[v][f]) a.set(v, f);
  return a;
}

Poset cube_lattice_poset() { return poset_from_lattice(lattice_from_H(gen::cube(3))); }

// All faces of K5 up to triangles, plus a top: a ranked atomic coatomic
// lattice whose atom graph is K5.
Poset k5_complex_poset() {
  std::vector<std::vector<std::size_t>> lower;
  lower.push_back({});  // 0 = bottom
  for (int a = 0; a < 5; ++a) lower.push_back({0});
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      lower.push_back({static_cast<std::size_t>(1 + a), static_cast<std::size_t>(1 + b)});
      pairs.emplace_back(a, b);
    }
  auto edge_id = [&](int a, int b) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::make_pair(std::min(a, b), std::max(a, b))) return 6 + i;
    return std::size_t{0};
  };
  std::vector<std::size_t> triangles;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        lower.push_back({edge_id(a, b), edge_id(a, c), edge_id(b, c)});
        triangles.push_back(lower.size() - 1);
      }
  lower.push_back(triangles);  // top
  std::size_t n = lower.size();
  return Poset(n, std::move(lower));
}

// Face poset of two tetrahedra glued along an edge whose shared edge is then
// deleted (4 triangles and 2 quadrilaterals): ranked, atomic and coatomic but
// not a lattice, with a planar 2-connected atom graph cut by {u, v}.
Poset glued_tetrahedra_poset() {
  // ids: 0 bottom; atoms u=1 v=2 a=3 b=4 c=5 d=6;
  // edges ua=7 ub=8 uc=9 ud=10 va=11 vb=12 vc=13 vd=14 ab=15 cd=16;
  // faces uab=17 vab=18 ucd=19 vcd=20 uavd=21 ubvc=22; top=23.
  std::vector<std::vector<std::size_t>> lower = {
      {},  // bottom
      {0}, {0}, {0}, {0}, {0}, {0},
      {1, 3},   // ua
      {1, 4},   // ub
      {1, 5},   // uc
      {1, 6},   // ud
      {2, 3},   // va
      {2, 4},   // vb
      {2, 5},   // vc
      {2, 6},   // vd
      {3, 4},   // ab
      {5, 6},   // cd
      {7, 8, 15},       // uab
      {11, 12, 15},     // vab
      {9, 10, 16},      // ucd
      {13, 14, 16},     // vcd
      {7, 11, 14, 10},  // uavd
      {8, 12, 13, 9},   // ubvc
      {17, 18, 19, 20, 21, 22},
  };
  std::size_t n = lower.size();
  return Poset(n, std::move(lower));
}

}  // namespace

TEST_CASE("check_lattice_axioms") {
  SUBCASE("cube face lattice passes everything, candidate d = 3") {
    LatticeAxiomReport r = check_lattice_axioms(cube_lattice_poset());
    CHECK(r.all_pass());
    CHECK(r.candidate_dim == 3);
  }
  SUBCASE("cube lattice with one edge node deleted fails the lattice axiom") {
    FaceLattice l = lattice_from_H(gen::cube(3));
    std::size_t victim = l.nodes_of_dim(1)[0];
    std::vector<std::vector<std::size_t>> lower;
    auto remap = [&](std::size_t x) { return x > victim ? x - 1 : x; };
    for (std::size_t i = 0; i < l.nodes.size(); ++i) {
      if (i == victim) continue;
      std::vector<std::size_t> covers;
      for (std::size_t c : l.nodes[i].covers)
        if (c != victim) covers.push_back(remap(c));
      lower.push_back(covers);
    }
    LatticeAxiomReport r = check_lattice_axioms(Poset(lower.size(), lower));
    CHECK(!r.all_pass());
    CHECK(!r.is_lattice);  // the two squares above the edge lost their meet
    CHECK(r.ranked);
    CHECK(r.atomic);
    CHECK(r.coatomic);
  }
  SUBCASE("Boolean lattice on d+1 atoms passes (simplex)") {
    for (std::size_t d = 2; d <= 4; ++d) {
      LatticeAxiomReport r = check_lattice_axioms(poset_from_lattice(lattice_from_H(gen::simplex(d))));
      CHECK(r.all_pass());
      CHECK(r.candidate_dim == static_cast<int>(d));
    }
  }
  SUBCASE("glued tetrahedra: ranked atomic coatomic but not a lattice") {
    LatticeAxiomReport r = check_lattice_axioms(glued_tetrahedra_poset());
    CHECK(r.bounded);
    CHECK(r.ranked);
    CHECK(r.atomic);
    CHECK(r.coatomic);
    CHECK(!r.is_lattice);
    CHECK(r.candidate_dim == 3);
  }
}

TEST_CASE("steinitz_3d on realizable lattices") {
  SUBCASE("platonic solids") {
    CHECK(steinitz_3d(cube_lattice_poset()).answer == SteinitzAnswer::Yes);
    CHECK(steinitz_3d(poset_from_lattice(lattice_from_H(gen::simplex(3)))).answer == SteinitzAnswer::Yes);
    CHECK(steinitz_3d(poset_from_lattice(lattice_from_H(enumerate_facets(gen::crosspoly(3))))).answer ==
          SteinitzAnswer::Yes);
    FaceLattice dode = build_lattice(from_rows(20, 12, gen::dodecahedron_incidences()));
    SteinitzResult rd = steinitz_3d(poset_from_lattice(dode));
    CHECK(rd.answer == SteinitzAnswer::Yes);
    CHECK(rd.facet_cycles.size() == 12);
    for (const auto& cyc : rd.facet_cycles) CHECK(cyc.size() == 5);
    FaceLattice ico = build_lattice(from_rows(12, 20, gen::icosahedron_incidences()));
    CHECK(steinitz_3d(poset_from_lattice(ico)).answer == SteinitzAnswer::Yes);
  }
  SUBCASE("every lattice of a realized 3-polytope answers Yes") {
    std::vector<HPolytope> corpus = {gen::cube(3), gen::simplex(3),
                                     enumerate_facets(gen::crosspoly(3)),
                                     gen::product(enumerate_facets(gen::polygon(6)), gen::cube(1))};
    for (const auto& h : corpus) {
      SteinitzResult r = steinitz_3d(poset_from_lattice(lattice_from_H(h)));
      CHECK(r.answer == SteinitzAnswer::Yes);
      CHECK(!r.facet_cycles.empty());
    }
  }
  SUBCASE("lower dimensions decided directly") {
    CHECK(steinitz_3d(poset_from_lattice(lattice_from_H(gen::cube(1)))).answer == SteinitzAnswer::Yes);
    CHECK(steinitz_3d(poset_from_lattice(lattice_from_H(enumerate_facets(gen::polygon(7))))).answer ==
          SteinitzAnswer::Yes);
  }
  SUBCASE("dimension 4 and beyond unsupported") {
    CHECK(steinitz_3d(poset_from_lattice(lattice_from_H(gen::simplex(4)))).answer ==
          SteinitzAnswer::Unsupported);
  }
}

TEST_CASE("steinitz_3d rejections") {
  SUBCASE("K5 lattice: non-planar") {
    SteinitzResult r = steinitz_3d(k5_complex_poset());
    CHECK(r.answer == SteinitzAnswer::No);
    bool nonplanar = false;
    for (const auto& reason : r.reasons) nonplanar |= reason.find("not planar") != std::string::npos;
    CHECK(nonplanar);
  }
  SUBCASE("glued tetrahedra: 2-cut found by the exhaustive search") {
    SteinitzResult r = steinitz_3d(glued_tetrahedra_poset());
    CHECK(r.answer == SteinitzAnswer::No);
    bool cut = false;
    for (const auto& reason : r.reasons) cut |= reason.find("2-cut") != std::string::npos;
    CHECK(cut);
  }
  SUBCASE("malformed poset throws") {
    // two maximal elements
    std::vector<std::vector<std::size_t>> lower = {{}, {0}, {0}};
    CHECK_THROWS_AS(steinitz_3d(Poset(3, lower)), AxiomViolation);
    // cyclic covers
    std::vector<std::vector<std::size_t>> cyc = {{1}, {0}};
    CHECK_THROWS_AS(Poset(2, cyc), AxiomViolation);
  }
}
