#ifndef VENKOV_DUAL_CELLS_HPP
#define VENKOV_DUAL_CELLS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/lattice_enum.hpp"
#include "venkov/matrix.hpp"
#include "venkov/quadratic_form.hpp"
#include "venkov/voronoi_cell.hpp"

namespace venkov {

// Dual cell of a face G of the Voronoi cell: the centers of all lattice
// translates of the cell that contain G, i.e. the nearest lattice points to
// any relative-interior point of G. Always contains 0.
struct DualCell {
  int faceDim = 0;
  int dualDim = 0;
  std::vector<LatticeVector> points;  // sorted lexicographically
};

inline DualCell dualCellOfFace(const QuadraticForm& q, const FaceRecord& face) {
  EnumerationResult nearest = closestLatticePoints(q, face.barycenter);
  DualCell cell;
  cell.faceDim = face.dim;
  cell.dualDim = static_cast<int>(q.dim()) - face.dim;
  cell.points = std::move(nearest.minimizers);
  const LatticeVector zero(q.dim(), 0);
  if (!std::binary_search(cell.points.begin(), cell.points.end(), zero)) {
    throw Error(Error::Kind::Internal, "dualCellOfFace: own tile center missing from dual cell");
  }
  std::vector<QVector> pts;
  pts.reserve(cell.points.size());
  for (const LatticeVector& p : cell.points) {
    pts.push_back(toRational(p));
  }
  if (affineDimension(pts) != static_cast<std::size_t>(cell.dualDim)) {
    throw DualDimensionMismatch("dual cell of a dim-" + std::to_string(face.dim) +
                                " face spans dimension " + std::to_string(affineDimension(pts)) +
                                " instead of " + std::to_string(cell.dualDim));
  }
  return cell;
}

enum class RidgeType { Primitive, NonPrimitive };

// A ridge (codimension-2 face) lies in exactly 3 tiles (primitive) or
// exactly 4 (non-primitive); in the latter case the 4 centers form a
// parallelogram.
inline RidgeType ridgeType(const DualCell& cell) {
  if (cell.dualDim != 2) {
    throw Error(Error::Kind::Internal, "ridgeType: dual cell is not a ridge dual");
  }
  if (cell.points.size() == 3) {
    return RidgeType::Primitive;
  }
  if (cell.points.size() == 4) {
    const auto& p = cell.points;
    const bool parallelogram = addLat(p[0], p[1]) == addLat(p[2], p[3]) ||
                               addLat(p[0], p[2]) == addLat(p[1], p[3]) ||
                               addLat(p[0], p[3]) == addLat(p[1], p[2]);
    if (!parallelogram) {
      throw MinkowskiVenkovViolation("4-point ridge dual cell is not a parallelogram");
    }
    return RidgeType::NonPrimitive;
  }
  throw MinkowskiVenkovViolation("ridge dual cell has " + std::to_string(cell.points.size()) +
                                 " points, expected 3 or 4");
}

enum class Dual3Tag { Tetrahedron, Pyramid, Octahedron, Prism, Cube };

inline const char* dual3TagName(Dual3Tag tag) {
  switch (tag) {
    case Dual3Tag::Tetrahedron: return "tetrahedron";
    case Dual3Tag::Pyramid: return "pyramid";
    case Dual3Tag::Octahedron: return "octahedron";
    case Dual3Tag::Prism: return "prism";
    case Dual3Tag::Cube: return "cube";
  }
  return "";
}

// Witness layout by tag:
//   Tetrahedron: the 4 vertices.
//   Pyramid: apex, then the base 4-cycle (a, b, c, d) with a + c = b + d.
//   Octahedron: (a, b, c, d, e, f) with antipodal pairs (a,d), (b,e), (c,f)
//     and a + d = b + e = c + f.
//   Prism: (a, b, c, a', b', c') with a - a' = b - b' = c - c'.
//   Cube: corner, then the 3 edge generators.
struct Dual3Type {
  Dual3Tag tag = Dual3Tag::Tetrahedron;
  std::vector<LatticeVector> witness;
};

namespace detail {

inline bool coplanar(const std::vector<LatticeVector>& pts) {
  std::vector<QVector> q;
  q.reserve(pts.size());
  for (const LatticeVector& p : pts) {
    q.push_back(toRational(p));
  }
  return affineDimension(q) == 2;
}

// Orders 4 coplanar points into a 4-cycle (a, b, c, d) with a + c = b + d,
// i.e. finds the diagonal pairing of the parallelogram. Nullopt if no pairing
// balances.
inline std::optional<std::array<LatticeVector, 4>> parallelogramCycle(
    std::vector<LatticeVector> pts) {
  std::sort(pts.begin(), pts.end());
  if (addLat(pts[0], pts[1]) == addLat(pts[2], pts[3])) {
    return std::array<LatticeVector, 4>{pts[0], pts[2], pts[1], pts[3]};
  }
  if (addLat(pts[0], pts[2]) == addLat(pts[1], pts[3])) {
    return std::array<LatticeVector, 4>{pts[0], pts[1], pts[2], pts[3]};
  }
  if (addLat(pts[0], pts[3]) == addLat(pts[1], pts[2])) {
    return std::array<LatticeVector, 4>{pts[0], pts[1], pts[3], pts[2]};
  }
  return std::nullopt;
}

inline std::optional<Dual3Type> matchOctahedron(const std::vector<LatticeVector>& p) {
  for (std::size_t i = 1; i < 6; ++i) {
    const LatticeVector sum = addLat(p[0], p[i]);
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < 6; ++j) {
      if (j != i) {
        rest.push_back(j);
      }
    }
    for (std::size_t k = 1; k < 4; ++k) {
      const std::size_t r0 = rest[0], r1 = rest[k];
      std::vector<std::size_t> last;
      for (std::size_t j = 1; j < 4; ++j) {
        if (j != k) {
          last.push_back(rest[j]);
        }
      }
      if (addLat(p[r0], p[r1]) == sum && addLat(p[last[0]], p[last[1]]) == sum) {
        Dual3Type t;
        t.tag = Dual3Tag::Octahedron;
        t.witness = {p[0], p[r0], p[last[0]], p[i], p[r1], p[last[1]]};
        return t;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Dual3Type> matchPrism(const std::vector<LatticeVector>& p) {
  // Choose the triangle containing p[0]; try every translation onto the rest.
  for (std::size_t i = 1; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      std::vector<LatticeVector> top = {p[0], p[i], p[j]};
      std::vector<LatticeVector> bottom;
      for (std::size_t k = 1; k < 6; ++k) {
        if (k != i && k != j) {
          bottom.push_back(p[k]);
        }
      }
      for (const LatticeVector& b : bottom) {
        const LatticeVector delta = subLat(p[0], b);
        if (delta == LatticeVector(delta.size(), 0)) {
          continue;
        }
        std::vector<LatticeVector> shifted;
        shifted.reserve(3);
        for (const LatticeVector& t : top) {
          shifted.push_back(subLat(t, delta));
        }
        std::sort(shifted.begin(), shifted.end());
        std::vector<LatticeVector> target = bottom;
        std::sort(target.begin(), target.end());
        if (shifted == target) {
          Dual3Type t;
          t.tag = Dual3Tag::Prism;
          t.witness = {top[0], top[1], top[2], subLat(top[0], delta), subLat(top[1], delta),
                       subLat(top[2], delta)};
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Dual3Type> matchCube(const std::vector<LatticeVector>& sorted) {
  const LatticeVector& corner = sorted[0];
  std::vector<LatticeVector> rel;
  rel.reserve(7);
  for (std::size_t i = 1; i < 8; ++i) {
    rel.push_back(subLat(sorted[i], corner));
  }
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = a + 1; b < 7; ++b) {
      for (std::size_t c = b + 1; c < 7; ++c) {
        std::vector<LatticeVector> gen = {
            LatticeVector(corner.size(), 0),
            rel[a],
            rel[b],
            rel[c],
            addLat(rel[a], rel[b]),
            addLat(rel[a], rel[c]),
            addLat(rel[b], rel[c]),
            addLat(addLat(rel[a], rel[b]), rel[c])};
        std::sort(gen.begin(), gen.end());
        std::vector<LatticeVector> target;
        target.reserve(8);
        target.push_back(LatticeVector(corner.size(), 0));
        for (const LatticeVector& r : rel) {
          target.push_back(r);
        }
        std::sort(target.begin(), target.end());
        if (gen == target) {
          Dual3Type t;
          t.tag = Dual3Tag::Cube;
          t.witness = {corner, rel[a], rel[b], rel[c]};
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Delaunay's classification of dual 3-cells: every dual 3-cell of a Voronoi
// parallelohedron is a tetrahedron, quadrangular pyramid, octahedron,
// triangular prism, or cube, recognized here by point count and exact affine
// relations.
inline Dual3Type classifyDual3Cell(const DualCell& cell) {
  if (cell.dualDim != 3) {
    throw Error(Error::Kind::Internal, "classifyDual3Cell: dual cell is not 3-dimensional");
  }
  const std::vector<LatticeVector>& p = cell.points;
  switch (p.size()) {
    case 4: {
      Dual3Type t;
      t.tag = Dual3Tag::Tetrahedron;
      t.witness = p;
      return t;
    }
    case 5: {
      std::optional<Dual3Type> found;
      for (std::size_t s = 0; s < 5; ++s) {
        std::vector<LatticeVector> base;
        for (std::size_t i = 0; i < 5; ++i) {
          if (i != s) {
            base.push_back(p[i]);
          }
        }
        if (!detail::coplanar(base)) {
          continue;
        }
        auto cycle = detail::parallelogramCycle(base);
        if (!cycle) {
          continue;
        }
        if (found) {
          throw UnclassifiableDual3Cell("two apex candidates in a 5-point dual cell");
        }
        Dual3Type t;
        t.tag = Dual3Tag::Pyramid;
        t.witness = {p[s], (*cycle)[0], (*cycle)[1], (*cycle)[2], (*cycle)[3]};
        found = std::move(t);
      }
      if (!found) {
        throw UnclassifiableDual3Cell("5-point dual cell with no pyramid structure");
      }
      return *found;
    }
    case 6: {
      auto octa = detail::matchOctahedron(p);
      auto prism = detail::matchPrism(p);
      if (octa && prism) {
        throw UnclassifiableDual3Cell("6-point dual cell matches octahedron and prism");
      }
      if (octa) {
        return *octa;
      }
      if (prism) {
        return *prism;
      }
      throw UnclassifiableDual3Cell("6-point dual cell is neither octahedron nor prism");
    }
    case 8: {
      auto cube = detail::matchCube(p);
      if (!cube) {
        throw UnclassifiableDual3Cell("8-point dual cell is not a cube");
      }
      return *cube;
    }
    default:
      throw UnclassifiableDual3Cell("dual 3-cell with " + std::to_string(p.size()) + " points");
  }
}

// Census of dual 3-cells: the per-face list keeps every (d-3)-face's dual
// cell (each contains 0), and representatives are deduplicated by translating
// the lexicographically smallest point to the origin.
struct Dual3Census {
  std::vector<DualCell> perFaceCells;
  std::vector<Dual3Type> perFaceTypes;
  std::vector<std::pair<DualCell, Dual3Type>> representatives;
  std::map<Dual3Tag, std::size_t> counts;
};

inline DualCell translateToCanonical(const DualCell& cell) {
  DualCell out;
  out.faceDim = cell.faceDim;
  out.dualDim = cell.dualDim;
  out.points.reserve(cell.points.size());
  const LatticeVector& shift = cell.points.front();
  for (const LatticeVector& p : cell.points) {
    out.points.push_back(subLat(p, shift));
  }
  return out;
}

inline Dual3Census dual3Representatives(const QuadraticForm& q, const FaceLattice& lattice) {
  const int targetDim = static_cast<int>(q.dim()) - 3;
  if (targetDim < 0 || !lattice.hasDim(targetDim)) {
    throw Error(Error::Kind::Internal, "dual3Representatives: (d-3)-faces not available");
  }
  Dual3Census census;
  for (Dual3Tag tag : {Dual3Tag::Tetrahedron, Dual3Tag::Pyramid, Dual3Tag::Octahedron,
                       Dual3Tag::Prism, Dual3Tag::Cube}) {
    census.counts[tag] = 0;
  }
  std::map<std::vector<LatticeVector>, std::pair<DualCell, Dual3Type>> canonical;
  for (const FaceRecord& face : lattice.facesOfDim(targetDim)) {
    DualCell cell = dualCellOfFace(q, face);
    Dual3Type type = classifyDual3Cell(cell);
    DualCell rep = translateToCanonical(cell);
    if (!canonical.contains(rep.points)) {
      Dual3Type repType = classifyDual3Cell(rep);
      std::vector<LatticeVector> key = rep.points;
      canonical.emplace(std::move(key), std::make_pair(std::move(rep), std::move(repType)));
    }
    census.perFaceCells.push_back(std::move(cell));
    census.perFaceTypes.push_back(std::move(type));
  }
  for (auto& [points, entry] : canonical) {
    census.counts[entry.second.tag] += 1;
    census.representatives.push_back(std::move(entry));
  }
  return census;
}

}  // namespace venkov

#endif  // VENKOV_DUAL_CELLS_HPP
