#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "venkov/venkov_complex.hpp"

using namespace venkov;
using namespace venkov::testing;

namespace {

ParityClass cls(int dim, unsigned bits) { return ParityClass{dim, bits}; }

// Downward closure of a triangle list, mirroring what buildVenkovComplex does
// after collecting the census triples.
VenkovComplex complexFromTriangles(std::vector<VenkovTriangle> triangles) {
  VenkovComplex complex;
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  complex.triangles = std::move(triangles);
  for (const VenkovTriangle& t : complex.triangles) {
    for (const ParityClass& v : t) {
      complex.vertices.push_back(v);
    }
    complex.edges.push_back(ClassEdge{t[0], t[1]});
    complex.edges.push_back(ClassEdge{t[0], t[2]});
    complex.edges.push_back(ClassEdge{t[1], t[2]});
  }
  std::sort(complex.vertices.begin(), complex.vertices.end());
  complex.vertices.erase(std::unique(complex.vertices.begin(), complex.vertices.end()),
                         complex.vertices.end());
  std::sort(complex.edges.begin(), complex.edges.end());
  complex.edges.erase(std::unique(complex.edges.begin(), complex.edges.end()),
                      complex.edges.end());
  return complex;
}

Dual3Census censusOfTypes(std::vector<Dual3Type> types) {
  Dual3Census census;
  for (Dual3Tag tag : {Dual3Tag::Tetrahedron, Dual3Tag::Pyramid, Dual3Tag::Octahedron,
                       Dual3Tag::Prism, Dual3Tag::Cube}) {
    census.counts[tag] = 0;
  }
  for (Dual3Type& t : types) {
    census.counts[t.tag] += 1;
    DualCell cell;
    cell.dualDim = 3;
    cell.points = t.witness;
    std::sort(cell.points.begin(), cell.points.end());
    census.representatives.emplace_back(cell, std::move(t));
  }
  return census;
}

}  // namespace

TEST_CASE("label triples of the five dual cell shapes") {
  const Dual3Type cube{Dual3Tag::Cube,
                       {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(trianglesOfDual3Cell(cube).empty());

  const Dual3Type prism{Dual3Tag::Prism,
                        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                         {0, 0, -1}, {1, 0, -1}, {0, 1, -1}}};
  const auto prismTriples = trianglesOfDual3Cell(prism);
  REQUIRE(prismTriples.size() == 1);
  const std::set<ParityClass> labels(prismTriples[0].begin(), prismTriples[0].end());
  CHECK(labels == std::set<ParityClass>{cls(3, 1), cls(3, 2), cls(3, 3)});

  const Dual3Type tetra{Dual3Tag::Tetrahedron,
                        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const auto tetraTriples = trianglesOfDual3Cell(tetra);
  CHECK(tetraTriples.size() == 8);
  std::set<ParityClass> used;
  for (const VenkovTriangle& t : tetraTriples) {
    used.insert(t.begin(), t.end());
  }
  CHECK(used == std::set<ParityClass>{cls(3, 1), cls(3, 2), cls(3, 4), cls(3, 3), cls(3, 5),
                                      cls(3, 6)});
  for (const ParityClass& label : used) {
    const auto touching = std::count_if(tetraTriples.begin(), tetraTriples.end(),
                                        [&](const VenkovTriangle& t) {
                                          return std::find(t.begin(), t.end(), label) != t.end();
                                        });
    CHECK(touching == 4);
  }

  const Dual3Type pyramid{Dual3Tag::Pyramid,
                          {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}};
  CHECK(trianglesOfDual3Cell(pyramid).size() == 8);

  const Dual3Type octa{Dual3Tag::Octahedron,
                       {{0, 0, 0}, {1, 0, 0}, {0, 0, 1},
                        {1, 1, 0}, {0, 1, 0}, {1, 1, -1}}};
  CHECK(trianglesOfDual3Cell(octa).size() == 8);
}

TEST_CASE("degenerate label triples are rejected") {
  CHECK_THROWS_AS(detail::sortedTriangle(cls(3, 1), cls(3, 1), cls(3, 2), "test"),
                  DegenerateTriple);
}

TEST_CASE("complex of a single tetrahedral cell is an octahedron surface") {
  Dual3Type tetra;
  tetra.tag = Dual3Tag::Tetrahedron;
  tetra.witness = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  const auto census = censusOfTypes({tetra});
  CHECK_THROWS_AS(buildVenkovComplex(census, 3), DimensionTooSmall);

  const VenkovComplex complex = buildVenkovComplex(census, 4);
  CHECK(complex.vertices.size() == 6);
  CHECK(complex.edges.size() == 12);
  CHECK(complex.triangles.size() == 8);

  const CohomologyResult h = cohomologyCheck(complex);
  CHECK(h.f0 == 6);
  CHECK(h.f1 == 12);
  CHECK(h.f2 == 8);
  CHECK(h.rankDelta0 == 5);
  CHECK(h.rankDelta1 == 7);
  CHECK(h.h1Trivial);
}

TEST_CASE("cohomology of the empty complex is trivial") {
  const CohomologyResult h = cohomologyCheck(VenkovComplex{});
  CHECK(h.f0 == 0);
  CHECK(h.f1 == 0);
  CHECK(h.f2 == 0);
  CHECK(h.h1Trivial);
}

TEST_CASE("a hollow triangle has nontrivial first cohomology") {
  VenkovComplex complex;
  complex.vertices = {cls(4, 1), cls(4, 2), cls(4, 3)};
  complex.edges = {{cls(4, 1), cls(4, 3)}, {cls(4, 2), cls(4, 1)}, {cls(4, 2), cls(4, 3)}};
  for (ClassEdge& e : complex.edges) {
    if (e[1] < e[0]) {
      std::swap(e[0], e[1]);
    }
  }
  std::sort(complex.edges.begin(), complex.edges.end());
  const CohomologyResult h = cohomologyCheck(complex);
  CHECK(h.f1 == 3);
  CHECK(h.rankDelta0 == 2);
  CHECK(h.rankDelta1 == 0);
  CHECK_FALSE(h.h1Trivial);
}

TEST_CASE("two octahedron surfaces glued along an edge") {
  std::vector<VenkovTriangle> triangles = detail::octahedralTriples(
      {cls(4, 1), cls(4, 2), cls(4, 3), cls(4, 4), cls(4, 5), cls(4, 6)}, "test");
  const auto second = detail::octahedralTriples(
      {cls(4, 1), cls(4, 2), cls(4, 7), cls(4, 8), cls(4, 9), cls(4, 10)}, "test");
  triangles.insert(triangles.end(), second.begin(), second.end());
  const VenkovComplex complex = complexFromTriangles(std::move(triangles));
  CHECK(complex.vertices.size() == 10);
  CHECK(complex.edges.size() == 23);
  CHECK(complex.triangles.size() == 16);

  const CohomologyResult h = cohomologyCheck(complex);
  CHECK(h.rankDelta0 == 9);
  CHECK(h.rankDelta1 == 14);
  CHECK(h.h1Trivial);
}

TEST_CASE("cohomology ranks add over disjoint unions") {
  std::vector<VenkovTriangle> first = detail::octahedralTriples(
      {cls(4, 1), cls(4, 2), cls(4, 3), cls(4, 4), cls(4, 5), cls(4, 6)}, "test");
  std::vector<VenkovTriangle> second = detail::octahedralTriples(
      {cls(4, 7), cls(4, 8), cls(4, 9), cls(4, 10), cls(4, 11), cls(4, 12)}, "test");
  const CohomologyResult a = cohomologyCheck(complexFromTriangles(first));
  const CohomologyResult b = cohomologyCheck(complexFromTriangles(second));
  std::vector<VenkovTriangle> both = first;
  both.insert(both.end(), second.begin(), second.end());
  const CohomologyResult ab = cohomologyCheck(complexFromTriangles(std::move(both)));
  CHECK(ab.f0 == a.f0 + b.f0);
  CHECK(ab.f1 == a.f1 + b.f1);
  CHECK(ab.rankDelta0 == a.rankDelta0 + b.rankDelta0);
  CHECK(ab.rankDelta1 == a.rankDelta1 + b.rankDelta1);
  CHECK(ab.h1Trivial == (a.h1Trivial && b.h1Trivial));
}

TEST_CASE("graph construction colors ridges by primitivity") {
  const std::vector<LatticeVector> reps = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  std::vector<RidgeClassification> ridges;
  ridges.push_back({{1, 0, 0, 0}, {0, 1, 0, 0}, RidgeType::Primitive});
  ridges.push_back({{0, 1, 0, 0}, {0, 0, 1, 0}, RidgeType::NonPrimitive});
  const VenkovGraph graph = buildVenkovGraph(reps, ridges);
  CHECK(graph.vertices.size() == 3);
  REQUIRE(graph.redEdges.size() == 1);
  REQUIRE(graph.blueEdges.size() == 1);
  CHECK((graph.redEdges[0] == ClassEdge{cls(4, 2), cls(4, 1)} ||
         graph.redEdges[0] == ClassEdge{cls(4, 1), cls(4, 2)}));

  // The same unordered facet pair with both colors is inconsistent.
  ridges.push_back({{0, 1, 0, 0}, {1, 0, 0, 0}, RidgeType::NonPrimitive});
  CHECK_THROWS_AS(buildVenkovGraph(reps, ridges), RedBlueConflict);

  // Duplicate parity classes among facet representatives are a fatal bug.
  const std::vector<LatticeVector> clash = {{1, 0, 0, 0}, {1, 2, 0, 0}};
  CHECK_THROWS_AS(buildVenkovGraph(clash, {}), Error);
}

TEST_CASE("skeleton comparison between complex and red graph") {
  VenkovGraph graph;
  graph.vertices = {cls(4, 1), cls(4, 2), cls(4, 3), cls(4, 4)};
  std::sort(graph.vertices.begin(), graph.vertices.end());
  ClassEdge ab{cls(4, 1), cls(4, 2)};
  if (ab[1] < ab[0]) {
    std::swap(ab[0], ab[1]);
  }
  graph.redEdges = {ab};

  VenkovComplex complex;
  complex.vertices = {ab[0], ab[1]};
  complex.edges = {ab};
  const SkeletonResult match = skeletonCheck(complex, graph);
  CHECK(match.skeletonMatch);
  CHECK(match.isolatedVertices == 2);

  VenkovComplex wrong = complex;
  ClassEdge ac{cls(4, 1), cls(4, 4)};
  if (ac[1] < ac[0]) {
    std::swap(ac[0], ac[1]);
  }
  wrong.edges = {ac};
  std::sort(wrong.edges.begin(), wrong.edges.end());
  CHECK_FALSE(skeletonCheck(wrong, graph).skeletonMatch);

  VenkovComplex alien = complex;
  alien.vertices.push_back(cls(4, 9));
  std::sort(alien.vertices.begin(), alien.vertices.end());
  CHECK_FALSE(skeletonCheck(alien, graph).skeletonMatch);
}
