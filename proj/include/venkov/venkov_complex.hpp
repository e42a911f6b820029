#ifndef VENKOV_VENKOV_COMPLEX_HPP
#define VENKOV_VENKOV_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "venkov/dual_cells.hpp"
#include "venkov/errors.hpp"
#include "venkov/lattice_enum.hpp"
#include "venkov/matrix.hpp"

namespace venkov {

// Simplices of the Venkov complex, stored as sorted tuples of parity classes.
using ClassEdge = std::array<ParityClass, 2>;
using VenkovTriangle = std::array<ParityClass, 3>;

namespace detail {

inline ParityClass paritySum(const LatticeVector& u, const LatticeVector& w) {
  return parityOf(addLat(u, w));
}

inline VenkovTriangle sortedTriangle(ParityClass a, ParityClass b, ParityClass c,
                                     const char* context) {
  if (a == b || a == c || b == c) {
    throw DegenerateTriple(std::string("repeated parity label in a triple from a ") + context);
  }
  VenkovTriangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Expands the octahedral label scheme O(x, y, z, x', y', z') with opposite
// pairs (x,x'), (y,y'), (z,z'): all 8 triples choosing one label per pair.
inline std::vector<VenkovTriangle> octahedralTriples(const std::array<ParityClass, 6>& o,
                                                     const char* context) {
  std::vector<VenkovTriangle> out;
  out.reserve(8);
  for (unsigned mask = 0; mask < 8; ++mask) {
    out.push_back(sortedTriangle(o[(mask & 1u) ? 3 : 0], o[(mask & 2u) ? 4 : 1],
                                 o[(mask & 4u) ? 5 : 2], context));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// The label set X(D) of a classified dual 3-cell: triples of parity classes
// of vertex-pair sums. Tetrahedra, pyramids, and octahedra each contribute an
// octahedral family of 8 triples, prisms one triple, cubes nothing.
inline std::vector<VenkovTriangle> trianglesOfDual3Cell(const Dual3Type& type) {
  const auto& w = type.witness;
  auto ps = [](const LatticeVector& u, const LatticeVector& v) {
    return detail::paritySum(u, v);
  };
  switch (type.tag) {
    case Dual3Tag::Tetrahedron: {
      const LatticeVector &a = w[0], &b = w[1], &c = w[2], &d = w[3];
      return detail::octahedralTriples(
          {ps(a, b), ps(a, c), ps(a, d), ps(c, d), ps(b, d), ps(b, c)}, "tetrahedron");
    }
    case Dual3Tag::Pyramid: {
      const LatticeVector &s = w[0], &a = w[1], &b = w[2], &c = w[3], &d = w[4];
      return detail::octahedralTriples(
          {ps(s, a), ps(s, b), ps(a, d), ps(s, c), ps(s, d), ps(a, b)}, "pyramid");
    }
    case Dual3Tag::Octahedron: {
      const LatticeVector &a = w[0], &b = w[1], &c = w[2], &e = w[4], &f = w[5];
      return detail::octahedralTriples(
          {ps(a, b), ps(a, c), ps(b, c), ps(a, e), ps(a, f), ps(b, f)}, "octahedron");
    }
    case Dual3Tag::Prism: {
      const LatticeVector &a = w[0], &b = w[1], &c = w[2];
      return {detail::sortedTriangle(ps(a, b), ps(a, c), ps(b, c), "prism")};
    }
    case Dual3Tag::Cube:
      return {};
  }
  return {};
}

struct VenkovComplex {
  std::vector<ParityClass> vertices;
  std::vector<ClassEdge> edges;
  std::vector<VenkovTriangle> triangles;
};

// Union of X(D) over the census representatives, closed downward: edges are
// the 2-subsets of triangles and vertices the labels used at least once.
// Defined for d >= 4 only.
inline VenkovComplex buildVenkovComplex(const Dual3Census& census, std::size_t dim) {
  if (dim < 4) {
    throw DimensionTooSmall();
  }
  VenkovComplex complex;
  for (const auto& [cell, type] : census.representatives) {
    std::vector<VenkovTriangle> triples = trianglesOfDual3Cell(type);
    complex.triangles.insert(complex.triangles.end(), triples.begin(), triples.end());
  }
  std::sort(complex.triangles.begin(), complex.triangles.end());
  complex.triangles.erase(std::unique(complex.triangles.begin(), complex.triangles.end()),
                          complex.triangles.end());
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

// One ridge of the Voronoi cell, reduced to what the graph needs: the
// relevant vectors of its two incident facets and its primitivity.
struct RidgeClassification {
  LatticeVector facetA;
  LatticeVector facetB;
  RidgeType type;
};

struct VenkovGraph {
  std::vector<ParityClass> vertices;  // one per facet pair, sorted
  std::vector<ClassEdge> redEdges;    // from primitive ridges
  std::vector<ClassEdge> blueEdges;   // from non-primitive ridges
};

// Vertices are the parity classes of the facet pairs; each ridge colors the
// unordered pair of its two facets' classes red (primitive) or blue
// (non-primitive). A pair receiving both colors is a fatal inconsistency.
inline VenkovGraph buildVenkovGraph(const std::vector<LatticeVector>& facetReps,
                                    const std::vector<RidgeClassification>& ridges) {
  VenkovGraph graph;
  graph.vertices.reserve(facetReps.size());
  for (const LatticeVector& v : facetReps) {
    graph.vertices.push_back(parityOf(v));
  }
  std::sort(graph.vertices.begin(), graph.vertices.end());
  if (std::adjacent_find(graph.vertices.begin(), graph.vertices.end()) != graph.vertices.end()) {
    throw Error(Error::Kind::Internal,
                "buildVenkovGraph: two facet pairs share a parity class");
  }
  for (const RidgeClassification& r : ridges) {
    ParityClass a = parityOf(r.facetA);
    ParityClass b = parityOf(r.facetB);
    if (a == b) {
      throw Error(Error::Kind::Internal,
                  "buildVenkovGraph: ridge with equal facet parity classes");
    }
    if (b < a) {
      std::swap(a, b);
    }
    (r.type == RidgeType::Primitive ? graph.redEdges : graph.blueEdges)
        .push_back(ClassEdge{a, b});
  }
  for (auto* edges : {&graph.redEdges, &graph.blueEdges}) {
    std::sort(edges->begin(), edges->end());
    edges->erase(std::unique(edges->begin(), edges->end()), edges->end());
  }
  std::vector<ClassEdge> both;
  std::set_intersection(graph.redEdges.begin(), graph.redEdges.end(), graph.blueEdges.begin(),
                        graph.blueEdges.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw RedBlueConflict("facet pair {" + both[0][0].str() + ", " + both[0][1].str() +
                          "} is both a primitive and a non-primitive ridge class");
  }
  return graph;
}

struct SkeletonResult {
  bool skeletonMatch = false;
  std::size_t isolatedVertices = 0;
};

// The Venkov complex's 1-skeleton must be the red graph minus isolated
// vertices: same edge set, complex vertices a subset of graph vertices.
inline SkeletonResult skeletonCheck(const VenkovComplex& complex, const VenkovGraph& graph) {
  SkeletonResult out;
  const bool verticesContained =
      std::includes(graph.vertices.begin(), graph.vertices.end(), complex.vertices.begin(),
                    complex.vertices.end());
  out.skeletonMatch = (complex.edges == graph.redEdges) && verticesContained;
  for (const ParityClass& v : graph.vertices) {
    bool touched = false;
    for (const ClassEdge& e : graph.redEdges) {
      if (e[0] == v || e[1] == v) {
        touched = true;
        break;
      }
    }
    if (!touched) {
      ++out.isolatedVertices;
    }
  }
  return out;
}

struct CohomologyResult {
  std::size_t f0 = 0;
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  std::size_t rankDelta0 = 0;
  std::size_t rankDelta1 = 0;
  bool h1Trivial = false;
};

// Rank identity for trivial H^1 of a 2-complex: rank(delta_0) +
// rank(delta_1) = f_1, with coboundaries over Q and signs from the
// lexicographic orientation of the parity classes.
inline CohomologyResult cohomologyCheck(const VenkovComplex& complex) {
  CohomologyResult out;
  out.f0 = complex.vertices.size();
  out.f1 = complex.edges.size();
  out.f2 = complex.triangles.size();

  std::map<ParityClass, std::size_t> vertexIndex;
  for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
    vertexIndex.emplace(complex.vertices[i], i);
  }
  std::map<ClassEdge, std::size_t> edgeIndex;
  for (std::size_t i = 0; i < complex.edges.size(); ++i) {
    edgeIndex.emplace(complex.edges[i], i);
  }

  QMatrix delta0(out.f1, out.f0);
  for (std::size_t e = 0; e < complex.edges.size(); ++e) {
    delta0(e, vertexIndex.at(complex.edges[e][0])) = Rational(-1);
    delta0(e, vertexIndex.at(complex.edges[e][1])) = Rational(1);
  }
  QMatrix delta1(out.f2, out.f1);
  for (std::size_t t = 0; t < complex.triangles.size(); ++t) {
    const VenkovTriangle& tri = complex.triangles[t];
    delta1(t, edgeIndex.at(ClassEdge{tri[1], tri[2]})) = Rational(1);
    delta1(t, edgeIndex.at(ClassEdge{tri[0], tri[2]})) = Rational(-1);
    delta1(t, edgeIndex.at(ClassEdge{tri[0], tri[1]})) = Rational(1);
  }
  out.rankDelta0 = rank(std::move(delta0));
  out.rankDelta1 = rank(std::move(delta1));
  out.h1Trivial = out.rankDelta0 + out.rankDelta1 == out.f1;
  return out;
}

}  // namespace venkov

#endif  // VENKOV_VENKOV_COMPLEX_HPP
