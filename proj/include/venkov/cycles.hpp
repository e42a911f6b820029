#ifndef VENKOV_CYCLES_HPP
#define VENKOV_CYCLES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "venkov/dual_cells.hpp"
#include "venkov/errors.hpp"
#include "venkov/lattice_enum.hpp"
#include "venkov/matrix.hpp"
#include "venkov/venkov_complex.hpp"

namespace venkov {

// Fixed global order on the red edges; every cycle vector is indexed by it.
struct RedEdgeIndex {
  std::vector<ClassEdge> edges;
  std::map<ClassEdge, std::size_t> index;

  static RedEdgeIndex fromGraph(const VenkovGraph& graph) {
    RedEdgeIndex idx;
    idx.edges = graph.redEdges;
    for (std::size_t i = 0; i < idx.edges.size(); ++i) {
      idx.index.emplace(idx.edges[i], i);
    }
    return idx;
  }

  std::size_t at(ParityClass a, ParityClass b, const char* context) const {
    if (b < a) {
      std::swap(a, b);
    }
    auto it = index.find(ClassEdge{a, b});
    if (it == index.end()) {
      throw MissingRedEdge(std::string(context) + ": pair {" + a.str() + ", " + b.str() +
                           "} is not a red edge");
    }
    return it->second;
  }
};

// Sparse +-1 vector over the red edge index, entries sorted by edge;
// orientation of an edge runs from the smaller parity class to the larger.
using CycleVector = std::vector<std::pair<std::size_t, int>>;

namespace detail {

// Closed walk through pairwise distinct classes -> signed edge vector,
// canonicalized so the first coefficient is +1.
inline CycleVector cycleFromClassLoop(const std::vector<ParityClass>& loop,
                                      const RedEdgeIndex& idx, const char* context) {
  std::map<std::size_t, int> coeff;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const ParityClass& from = loop[i];
    const ParityClass& to = loop[(i + 1) % loop.size()];
    const std::size_t e = idx.at(from, to, context);
    coeff[e] += from < to ? 1 : -1;
  }
  CycleVector out;
  out.reserve(coeff.size());
  for (const auto& [e, c] : coeff) {
    if (c == 0) {
      continue;
    }
    if (c != 1 && c != -1) {
      throw Error(Error::Kind::Internal,
                  std::string(context) + ": repeated edge in a basic cycle");
    }
    out.emplace_back(e, c);
  }
  if (out.size() != loop.size()) {
    throw Error(Error::Kind::Internal,
                std::string(context) + ": basic cycle with cancelling edges");
  }
  if (out.front().second < 0) {
    for (auto& [e, c] : out) {
      c = -c;
    }
  }
  return out;
}

}  // namespace detail

// One triangle cycle per primitive ridge: the three tile centers around the
// ridge differ pairwise by facet vectors, and those three facet-pair classes
// bound a triangle in the red graph (the image of the ridge's 6-belt).
inline std::vector<CycleVector> halfBeltCycles(const std::vector<DualCell>& ridgeCells,
                                               const RedEdgeIndex& idx) {
  std::set<CycleVector> seen;
  for (const DualCell& cell : ridgeCells) {
    if (cell.points.size() != 3) {
      continue;
    }
    const auto& t = cell.points;
    std::vector<ParityClass> loop = {parityOf(subLat(t[1], t[0])), parityOf(subLat(t[2], t[1])),
                                     parityOf(subLat(t[0], t[2]))};
    seen.insert(detail::cycleFromClassLoop(loop, idx, "halfBeltCycles"));
  }
  return {seen.begin(), seen.end()};
}

// Cycles around (d-3)-faces whose dual 3-cell has only triangular 2-faces at
// the vertex 0: the classes of the edges of conv D at 0, in cyclic order.
// Tetrahedra and octahedra always qualify; a pyramid only when 0 is its apex
// (opt-out via includePyramidApex); prisms and cubes never do.
inline std::vector<CycleVector> triviallyContractibleCycles(const Dual3Census& census,
                                                            const RedEdgeIndex& idx,
                                                            bool includePyramidApex = true) {
  std::set<CycleVector> seen;
  for (std::size_t i = 0; i < census.perFaceCells.size(); ++i) {
    const DualCell& cell = census.perFaceCells[i];
    const Dual3Type& type = census.perFaceTypes[i];
    const LatticeVector zero(cell.points.front().size(), 0);
    std::vector<ParityClass> loop;
    switch (type.tag) {
      case Dual3Tag::Tetrahedron: {
        for (const LatticeVector& p : cell.points) {
          if (p != zero) {
            loop.push_back(parityOf(p));
          }
        }
        break;
      }
      case Dual3Tag::Pyramid: {
        if (!includePyramidApex || type.witness[0] != zero) {
          break;
        }
        for (std::size_t j = 1; j <= 4; ++j) {
          loop.push_back(parityOf(type.witness[j]));
        }
        break;
      }
      case Dual3Tag::Octahedron: {
        std::size_t pos = 6;
        for (std::size_t j = 0; j < 6; ++j) {
          if (type.witness[j] == zero) {
            pos = j;
            break;
          }
        }
        if (pos == 6) {
          throw Error(Error::Kind::Internal,
                      "triviallyContractibleCycles: octahedron witness without the origin");
        }
        std::vector<std::size_t> pairs;
        for (std::size_t j = 0; j < 3; ++j) {
          if (j != pos % 3) {
            pairs.push_back(j);
          }
        }
        loop = {parityOf(type.witness[pairs[0]]), parityOf(type.witness[pairs[1]]),
                parityOf(type.witness[pairs[0] + 3]), parityOf(type.witness[pairs[1] + 3])};
        break;
      }
      case Dual3Tag::Prism:
      case Dual3Tag::Cube:
        break;
    }
    if (!loop.empty()) {
      seen.insert(detail::cycleFromClassLoop(loop, idx, "triviallyContractibleCycles"));
    }
  }
  return {seen.begin(), seen.end()};
}

struct GgmResult {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t k = 0;
  std::size_t cyclomatic = 0;
  std::size_t basicCycleRank = 0;
  bool ggmHolds = false;
};

namespace detail {

inline std::size_t redComponentCount(const VenkovGraph& graph) {
  std::map<ParityClass, std::size_t> id;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    id.emplace(graph.vertices[i], i);
  }
  std::vector<std::size_t> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const ClassEdge& e : graph.redEdges) {
    parent[find(id.at(e[0]))] = find(id.at(e[1]));
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    roots.insert(find(i));
  }
  return roots.size();
}

inline QMatrix cycleMatrix(const std::vector<CycleVector>& cycles, std::size_t edgeCount) {
  QMatrix m(cycles.size(), edgeCount);
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    for (const auto& [e, c] : cycles[r]) {
      m(r, e) = Rational(c);
    }
  }
  return m;
}

}  // namespace detail

// The basic cycles generate the cycle space of the red graph iff their rank
// reaches the cyclomatic number e - v + k (isolated vertices cancel between
// v and k).
inline GgmResult ggmCheck(const VenkovGraph& graph, const std::vector<CycleVector>& cycles,
                          const RedEdgeIndex& idx) {
  GgmResult out;
  out.v = graph.vertices.size();
  out.e = graph.redEdges.size();
  out.k = detail::redComponentCount(graph);
  out.cyclomatic = out.e + out.k - out.v;
  out.basicCycleRank = rank(detail::cycleMatrix(cycles, idx.edges.size()));
  if (out.basicCycleRank > out.cyclomatic) {
    throw Error(Error::Kind::Internal,
                "ggmCheck: basic cycle rank exceeds the cyclomatic number");
  }
  out.ggmHolds = out.basicCycleRank == out.cyclomatic;
  return out;
}

// 3-irreducibility: the dual 3-cell census contains neither prisms nor cubes.
inline bool ordineCheck(const Dual3Census& census) {
  return census.counts.at(Dual3Tag::Prism) == 0 && census.counts.at(Dual3Tag::Cube) == 0;
}

// Every basic cycle must be a rational combination of Venkov triangle
// boundaries: stacking the cycle vectors under the boundary matrix must not
// raise its rank.
inline bool triangleSpanCheck(const VenkovComplex& complex,
                              const std::vector<CycleVector>& cycles, const RedEdgeIndex& idx) {
  const std::size_t cols = idx.edges.size();
  QMatrix boundary(complex.triangles.size(), cols);
  for (std::size_t t = 0; t < complex.triangles.size(); ++t) {
    const VenkovTriangle& tri = complex.triangles[t];
    boundary(t, idx.at(tri[1], tri[2], "triangleSpanCheck")) = Rational(1);
    boundary(t, idx.at(tri[0], tri[2], "triangleSpanCheck")) = Rational(-1);
    boundary(t, idx.at(tri[0], tri[1], "triangleSpanCheck")) = Rational(1);
  }
  QMatrix stacked(complex.triangles.size() + cycles.size(), cols);
  for (std::size_t r = 0; r < complex.triangles.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      stacked(r, c) = boundary(r, c);
    }
  }
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    for (const auto& [e, c] : cycles[r]) {
      stacked(complex.triangles.size() + r, e) = Rational(c);
    }
  }
  return rank(std::move(boundary)) == rank(std::move(stacked));
}

}  // namespace venkov

#endif  // VENKOV_CYCLES_HPP
