#ifndef VENKOV_VORONOI_CELL_HPP
#define VENKOV_VORONOI_CELL_HPP

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/lattice_enum.hpp"
#include "venkov/matrix.hpp"
#include "venkov/quadratic_form.hpp"

namespace venkov {

// 2 * (2^6 - 1) is the most half-spaces any supported form can produce.
using TightSet = std::bitset<128>;

// The bisector inequality 2 t^T Q x <= t^T Q t of a relevant vector t,
// stored with the precomputed gradient 2 Q t.
struct HalfSpace {
  LatticeVector normalLattice;
  QVector gradient;
  Rational rhs;
};

// One inequality per signed relevant vector; +t at even indices, -t at the
// odd index right after, pairs in the sorted representative order.
inline std::vector<HalfSpace> buildHRep(const QuadraticForm& q,
                                        const std::vector<LatticeVector>& relevant) {
  std::vector<HalfSpace> out;
  out.reserve(2 * relevant.size());
  for (const LatticeVector& v : relevant) {
    for (int sign : {1, -1}) {
      LatticeVector t = sign > 0 ? v : negLat(v);
      HalfSpace h;
      h.gradient = scaleVec(matVec(q.gram(), toRational(t)), Rational(2));
      h.rhs = qNormLat(q, t);
      h.normalLattice = std::move(t);
      out.push_back(std::move(h));
    }
  }
  return out;
}

struct VertexSet {
  std::vector<QVector> coords;   // sorted lexicographically
  std::vector<TightSet> tight;   // tight[i][j] <=> vertex i lies on half-space j
};

namespace detail {

struct WorkingVertex {
  QVector x;
  TightSet tight;
};

inline TightSet exactTightSet(const QVector& x, const std::vector<HalfSpace>& hrep,
                              const std::vector<bool>& inserted) {
  TightSet t;
  for (std::size_t j = 0; j < hrep.size(); ++j) {
    if (inserted[j] && dot(hrep[j].gradient, x) == hrep[j].rhs) {
      t.set(j);
    }
  }
  return t;
}

}  // namespace detail

// Exact vertex enumeration by incremental half-space insertion (the
// double-description scheme restricted to bounded polytopes). The seed
// polytope is the parallelepiped cut out by d linearly independent
// constraint pairs; every further half-space splits the current vertex set
// and adds the cut points of crossing edges. Edges are recognized
// combinatorially: u, w are adjacent iff no third vertex is tight on every
// constraint tight at both u and w.
inline VertexSet enumerateVertices(const std::vector<HalfSpace>& hrep) {
  if (hrep.empty()) {
    throw UnboundedPolytope();
  }
  const std::size_t d = hrep[0].gradient.size();
  const std::size_t m = hrep.size();
  if (m > 128) {
    throw Error(Error::Kind::Internal, "enumerateVertices: more half-spaces than supported");
  }

  // Greedy independent pair subset; +t members sit at even indices.
  std::vector<std::size_t> indep;
  {
    std::vector<QVector> chosen;
    for (std::size_t i = 0; i < m && indep.size() < d; i += 2) {
      chosen.push_back(hrep[i].gradient);
      if (rankOfRows(chosen) == indep.size() + 1) {
        indep.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
    if (indep.size() < d) {
      throw UnboundedPolytope();
    }
  }

  std::vector<bool> inserted(m, false);
  for (std::size_t i : indep) {
    inserted[i] = true;
    inserted[i + 1] = true;
  }

  QMatrix seedMatrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      seedMatrix(k, j) = hrep[indep[k]].gradient[j];
    }
  }
  std::vector<detail::WorkingVertex> verts;
  verts.reserve(1u << d);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    QVector rhs(d);
    TightSet tight;
    for (std::size_t k = 0; k < d; ++k) {
      const bool plus = (mask >> k) & 1u;
      rhs[k] = plus ? hrep[indep[k]].rhs : -hrep[indep[k]].rhs;
      tight.set(plus ? indep[k] : indep[k] + 1);
    }
    auto x = solveLinear(seedMatrix, rhs);
    if (!x) {
      throw Error(Error::Kind::Internal, "enumerateVertices: singular seed system");
    }
    verts.push_back({std::move(*x), tight});
  }

  for (std::size_t h = 0; h < m; ++h) {
    if (inserted[h]) {
      continue;
    }
    inserted[h] = true;
    std::vector<Rational> slack(verts.size());
    std::vector<std::size_t> insideIdx, outsideIdx;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      slack[i] = hrep[h].rhs - dot(hrep[h].gradient, verts[i].x);
      if (slack[i] > 0) {
        insideIdx.push_back(i);
      } else if (slack[i] < 0) {
        outsideIdx.push_back(i);
      } else {
        verts[i].tight.set(h);
      }
    }
    if (outsideIdx.empty()) {
      continue;
    }

    std::map<QVector, detail::WorkingVertex> cut;
    for (std::size_t u : insideIdx) {
      for (std::size_t w : outsideIdx) {
        TightSet common = verts[u].tight & verts[w].tight;
        if (common.count() + 1 < d) {
          continue;
        }
        bool adjacent = true;
        for (std::size_t v = 0; v < verts.size(); ++v) {
          if (v == u || v == w) {
            continue;
          }
          if ((common & ~verts[v].tight).none()) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) {
          continue;
        }
        const Rational lambda = slack[u] / (slack[u] - slack[w]);
        QVector x = addVec(verts[u].x, scaleVec(subVec(verts[w].x, verts[u].x), lambda));
        if (!cut.contains(x)) {
          TightSet tight = detail::exactTightSet(x, hrep, inserted);
          cut.emplace(x, detail::WorkingVertex{x, tight});
        }
      }
    }

    std::vector<detail::WorkingVertex> next;
    next.reserve(verts.size() - outsideIdx.size() + cut.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (slack[i] >= 0) {
        next.push_back(std::move(verts[i]));
      }
    }
    for (auto& [coords, vert] : cut) {
      next.push_back(std::move(vert));
    }
    verts = std::move(next);
  }

  std::sort(verts.begin(), verts.end(),
            [](const detail::WorkingVertex& a, const detail::WorkingVertex& b) { return a.x < b.x; });
  VertexSet out;
  out.coords.reserve(verts.size());
  out.tight.reserve(verts.size());
  for (detail::WorkingVertex& v : verts) {
    if (v.tight.count() < d) {
      throw Error(Error::Kind::Internal, "enumerateVertices: vertex with too few tight facets");
    }
    out.coords.push_back(std::move(v.x));
    out.tight.push_back(v.tight);
  }
  return out;
}

struct FaceRecord {
  int dim = 0;
  std::vector<int> vertexSet;  // sorted indices into VertexSet.coords
  std::vector<int> facetSet;   // sorted half-space indices tight on the face
  QVector barycenter;
};

// Faces by descending dimension: levels[i] holds the faces of dimension
// spaceDim - 1 - i, each sorted by vertexSet. children[i][j] lists, for face
// j of level i, the indices of its codimension-one subfaces in level i + 1.
struct FaceLattice {
  int spaceDim = 0;
  int downToDim = 0;
  std::vector<std::vector<FaceRecord>> levels;
  std::vector<std::vector<std::vector<int>>> children;

  bool hasDim(int dim) const {
    return dim <= spaceDim - 1 && dim >= spaceDim - static_cast<int>(levels.size());
  }
  int levelOfDim(int dim) const { return spaceDim - 1 - dim; }
  const std::vector<FaceRecord>& facesOfDim(int dim) const {
    return levels[static_cast<std::size_t>(levelOfDim(dim))];
  }
};

namespace detail {

inline QVector vertexAverage(const VertexSet& verts, const std::vector<int>& vertexSet) {
  QVector sum(verts.coords[0].size(), Rational(0));
  for (int i : vertexSet) {
    sum = addVec(sum, verts.coords[static_cast<std::size_t>(i)]);
  }
  return scaleVec(sum, Rational(1) / Rational(static_cast<long long>(vertexSet.size())));
}

inline std::size_t affineDimOfVertexSet(const VertexSet& verts, const std::vector<int>& vs) {
  std::vector<QVector> pts;
  pts.reserve(vs.size());
  for (int i : vs) {
    pts.push_back(verts.coords[static_cast<std::size_t>(i)]);
  }
  return affineDimension(pts);
}

inline std::vector<int> facetsContaining(const VertexSet& verts, const std::vector<int>& vs,
                                         std::size_t numHalfSpaces) {
  TightSet common;
  common.set();
  for (int i : vs) {
    common &= verts.tight[static_cast<std::size_t>(i)];
  }
  std::vector<int> out;
  for (std::size_t j = 0; j < numHalfSpaces; ++j) {
    if (common.test(j)) {
      out.push_back(static_cast<int>(j));
    }
  }
  return out;
}

}  // namespace detail

// Face lattice from dimension spaceDim - 1 down to downToDim. Facets come
// straight from the tight sets; each lower level is produced by intersecting
// the previous level's vertex sets with facet vertex sets, keeping the
// intersections of the right affine dimension, deduplicated by vertex set.
// For a polytope every face of dimension k arises this way from some face of
// dimension k + 1.
inline FaceLattice faceLattice(const VertexSet& verts, const std::vector<HalfSpace>& hrep,
                               int downToDim) {
  const int d = static_cast<int>(hrep.empty() ? 0 : hrep[0].gradient.size());
  if (verts.coords.empty()) {
    throw Error(Error::Kind::Internal, "faceLattice: empty vertex set");
  }
  if (downToDim < 0 || downToDim > d - 1) {
    throw Error(Error::Kind::Internal, "faceLattice: downToDim out of range");
  }
  FaceLattice lattice;
  lattice.spaceDim = d;
  lattice.downToDim = downToDim;

  std::vector<std::vector<int>> facetVertexSets(hrep.size());
  for (std::size_t j = 0; j < hrep.size(); ++j) {
    for (std::size_t i = 0; i < verts.coords.size(); ++i) {
      if (verts.tight[i].test(j)) {
        facetVertexSets[j].push_back(static_cast<int>(i));
      }
    }
  }

  std::vector<FaceRecord> facets;
  for (std::size_t j = 0; j < hrep.size(); ++j) {
    const std::vector<int>& vs = facetVertexSets[j];
    if (vs.empty() || detail::affineDimOfVertexSet(verts, vs) != static_cast<std::size_t>(d - 1)) {
      throw Error(Error::Kind::Internal,
                  "faceLattice: half-space " + std::to_string(j) + " does not support a facet");
    }
    FaceRecord f;
    f.dim = d - 1;
    f.vertexSet = vs;
    f.facetSet = detail::facetsContaining(verts, vs, hrep.size());
    f.barycenter = detail::vertexAverage(verts, vs);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const FaceRecord& a, const FaceRecord& b) { return a.vertexSet < b.vertexSet; });
  lattice.levels.push_back(std::move(facets));

  for (int dim = d - 2; dim >= downToDim; --dim) {
    const std::vector<FaceRecord>& upper = lattice.levels.back();
    std::map<std::vector<int>, FaceRecord> found;
    for (const FaceRecord& f : upper) {
      for (std::size_t j = 0; j < hrep.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(f.vertexSet.begin(), f.vertexSet.end(),
                              facetVertexSets[j].begin(), facetVertexSets[j].end(),
                              std::back_inserter(inter));
        if (inter.size() < static_cast<std::size_t>(dim) + 1 || inter == f.vertexSet) {
          continue;
        }
        if (found.contains(inter)) {
          continue;
        }
        if (detail::affineDimOfVertexSet(verts, inter) != static_cast<std::size_t>(dim)) {
          continue;
        }
        FaceRecord g;
        g.dim = dim;
        g.vertexSet = inter;
        g.facetSet = detail::facetsContaining(verts, inter, hrep.size());
        g.barycenter = detail::vertexAverage(verts, inter);
        found.emplace(std::move(inter), std::move(g));
      }
    }
    std::vector<FaceRecord> level;
    level.reserve(found.size());
    for (auto& [vs, face] : found) {
      level.push_back(std::move(face));
    }
    lattice.levels.push_back(std::move(level));
  }

  lattice.children.resize(lattice.levels.size());
  for (std::size_t lvl = 0; lvl + 1 < lattice.levels.size(); ++lvl) {
    lattice.children[lvl].resize(lattice.levels[lvl].size());
    const std::vector<FaceRecord>& lower = lattice.levels[lvl + 1];
    for (std::size_t f = 0; f < lattice.levels[lvl].size(); ++f) {
      const std::vector<int>& vs = lattice.levels[lvl][f].vertexSet;
      for (std::size_t g = 0; g < lower.size(); ++g) {
        if (std::includes(vs.begin(), vs.end(), lower[g].vertexSet.begin(),
                          lower[g].vertexSet.end())) {
          lattice.children[lvl][f].push_back(static_cast<int>(g));
        }
      }
    }
  }
  return lattice;
}

// Exact Lebesgue volume in lattice coordinates: each facet is triangulated by
// pulling from its lexicographically least vertex down the face lattice, and
// the facet simplices are coned to the origin. Needs the lattice down to
// dimension 1.
inline Rational cellVolume(const VertexSet& verts, const FaceLattice& lattice) {
  const int d = lattice.spaceDim;
  if (!lattice.hasDim(1)) {
    throw Error(Error::Kind::Internal, "cellVolume: face lattice must reach dimension 1");
  }
  const int edgeLevel = lattice.levelOfDim(1);
  // simplices[lvl][face] = vertex-index tuples triangulating that face
  std::vector<std::vector<std::vector<std::vector<int>>>> simplices(
      static_cast<std::size_t>(edgeLevel) + 1);
  simplices[static_cast<std::size_t>(edgeLevel)].reserve(
      lattice.levels[static_cast<std::size_t>(edgeLevel)].size());
  for (const FaceRecord& e : lattice.levels[static_cast<std::size_t>(edgeLevel)]) {
    simplices[static_cast<std::size_t>(edgeLevel)].push_back({e.vertexSet});
  }
  for (int dim = 2; dim <= d - 1; ++dim) {
    const int lvl = lattice.levelOfDim(dim);
    const auto& faces = lattice.levels[static_cast<std::size_t>(lvl)];
    simplices[static_cast<std::size_t>(lvl)].resize(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const int apex = faces[f].vertexSet.front();
      for (int childIdx : lattice.children[static_cast<std::size_t>(lvl)][f]) {
        const FaceRecord& child =
            lattice.levels[static_cast<std::size_t>(lvl) + 1][static_cast<std::size_t>(childIdx)];
        if (std::binary_search(child.vertexSet.begin(), child.vertexSet.end(), apex)) {
          continue;
        }
        for (const std::vector<int>& s :
             simplices[static_cast<std::size_t>(lvl) + 1][static_cast<std::size_t>(childIdx)]) {
          std::vector<int> extended = s;
          extended.push_back(apex);
          simplices[static_cast<std::size_t>(lvl)][f].push_back(std::move(extended));
        }
      }
    }
  }
  Rational volume(0);
  for (const std::vector<std::vector<int>>& facetSimplices : simplices[0]) {
    for (const std::vector<int>& s : facetSimplices) {
      QMatrix mat(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        const QVector& p = verts.coords[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
        for (int j = 0; j < d; ++j) {
          mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p[static_cast<std::size_t>(j)];
        }
      }
      Rational det = determinant(std::move(mat));
      volume += det < 0 ? -det : det;
    }
  }
  Rational factorial(1);
  for (int i = 2; i <= d; ++i) {
    factorial *= i;
  }
  return volume / factorial;
}

// Convenience path used by validation: the full chain from a form.
inline Rational cellVolume(const QuadraticForm& q) {
  std::vector<HalfSpace> hrep = buildHRep(q, relevantVectors(q));
  VertexSet verts = enumerateVertices(hrep);
  FaceLattice lattice = faceLattice(verts, hrep, 1);
  return cellVolume(verts, lattice);
}

}  // namespace venkov

#endif  // VENKOV_VORONOI_CELL_HPP
