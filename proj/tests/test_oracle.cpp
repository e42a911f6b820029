#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "venkov/brute_oracle.hpp"
#include "venkov/voronoi_cell.hpp"
#include "venkov/dual_cells.hpp"

using namespace venkov;
using namespace venkov::testing;

namespace {

std::vector<LatticeVector> symmetrized(const std::vector<LatticeVector>& reps) {
  std::vector<LatticeVector> out;
  out.reserve(2 * reps.size());
  for (const LatticeVector& v : reps) {
    out.push_back(v);
    out.push_back(negLat(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> facetsWithGrowingBox(const QuadraticForm& q) {
  for (long long radius : {2LL, 4LL, 8LL, 16LL}) {
    try {
      return bruteVoronoiFacets(q, BoxSpec{radius});
    } catch (const BoxTooSmall&) {
    }
  }
  return bruteVoronoiFacets(q, BoxSpec{32});
}

EnumerationResult cosetWithGrowingBox(const QuadraticForm& q, const ParityClass& c) {
  for (long long radius : {2LL, 4LL, 8LL, 16LL}) {
    try {
      return bruteShortestInCoset(q, c, BoxSpec{radius});
    } catch (const BoxTooSmall&) {
    }
  }
  return bruteShortestInCoset(q, c, BoxSpec{32});
}

std::vector<LatticeVector> dualWithGrowingBox(const QuadraticForm& q, const QVector& b) {
  for (long long radius : {2LL, 4LL, 8LL, 16LL}) {
    try {
      return bruteDualCell(q, b, BoxSpec{radius});
    } catch (const BoxTooSmall&) {
    }
  }
  return bruteDualCell(q, b, BoxSpec{32});
}

}  // namespace

TEST_CASE("brute coset scan on known forms") {
  const QuadraticForm i2(QMatrix::identity(2));
  const auto e1 = bruteShortestInCoset(i2, parityOf({1, 0}), BoxSpec{2});
  CHECK(e1.minNorm == Rational(1));
  CHECK(e1.minimizers == std::vector<LatticeVector>{{-1, 0}, {1, 0}});

  const QuadraticForm hexagon(makeMatrix({{2, 1}, {1, 2}}));
  const auto diag = bruteShortestInCoset(hexagon, parityOf({1, 1}), BoxSpec{2});
  CHECK(diag.minNorm == Rational(2));
  CHECK(diag.minimizers == std::vector<LatticeVector>{{-1, 1}, {1, -1}});
}

TEST_CASE("a box that cannot certify its minimum is refused") {
  // The short vectors of this coset sit at (1, 2) and (-1, -2), outside the
  // radius-1 box, and the certificate for the radius-1 scan demands more.
  const QuadraticForm skew(makeMatrix({{5, -3}, {-3, 2}}));
  CHECK_THROWS_AS(bruteShortestInCoset(skew, parityOf({1, 0}), BoxSpec{1}), BoxTooSmall);
  const auto fixed = bruteShortestInCoset(skew, parityOf({1, 0}), BoxSpec{4});
  CHECK(fixed.minNorm == Rational(1));
  CHECK(fixed.minimizers == std::vector<LatticeVector>{{-1, -2}, {1, 2}});
}

TEST_CASE("brute facet scan on known forms") {
  const QuadraticForm i2(QMatrix::identity(2));
  CHECK(bruteVoronoiFacets(i2, BoxSpec{2}) ==
        std::vector<LatticeVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});

  const QuadraticForm hexagon(makeMatrix({{2, 1}, {1, 2}}));
  CHECK(bruteVoronoiFacets(hexagon, BoxSpec{2}).size() == 6);

  const QuadraticForm i3(QMatrix::identity(3));
  CHECK(bruteVoronoiFacets(i3, BoxSpec{2}).size() == 6);
}

TEST_CASE("brute dual cell scan on known forms") {
  const QuadraticForm i2(QMatrix::identity(2));
  const auto corner = bruteDualCell(i2, makeVecQ({"1/2", "1/2"}), BoxSpec{2});
  CHECK(corner == std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto onPoint = bruteDualCell(i2, makeVec({2, -3}), BoxSpec{2});
  CHECK(onPoint == std::vector<LatticeVector>{{2, -3}});
}

TEST_CASE("enumeration agrees with the brute oracle on random planar forms") {
  std::mt19937 rng(7401);
  for (int trial = 0; trial < 20; ++trial) {
    const QuadraticForm q(randomPdGram(rng, 2, 5));
    for (unsigned bits = 1; bits < 4; ++bits) {
      const ParityClass c{2, bits};
      const auto fast = shortestVectorsInCoset(q, c);
      const auto brute = cosetWithGrowingBox(q, c);
      CHECK(fast.minNorm == brute.minNorm);
      CHECK(fast.minimizers == brute.minimizers);
    }
    CHECK(symmetrized(relevantVectors(q)) == facetsWithGrowingBox(q));
  }
}

TEST_CASE("enumeration agrees with the brute oracle on random spatial forms") {
  std::mt19937 rng(7402);
  for (int trial = 0; trial < 4; ++trial) {
    const QuadraticForm q(randomPdGram(rng, 3, 3));
    for (unsigned bits = 1; bits < 8; ++bits) {
      const ParityClass c{3, bits};
      const auto fast = shortestVectorsInCoset(q, c);
      const auto brute = cosetWithGrowingBox(q, c);
      CHECK(fast.minNorm == brute.minNorm);
      CHECK(fast.minimizers == brute.minimizers);
    }
    CHECK(symmetrized(relevantVectors(q)) == facetsWithGrowingBox(q));
  }
}

TEST_CASE("dual cells agree with the brute oracle at face barycenters") {
  std::mt19937 rng(7403);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const QuadraticForm q(randomPdGram(rng, d, 3));
    const auto hrep = buildHRep(q, relevantVectors(q));
    const auto verts = enumerateVertices(hrep);
    const auto lattice = faceLattice(verts, hrep, 0);
    for (const auto& level : lattice.levels) {
      for (const FaceRecord& face : level) {
        const DualCell cell = dualCellOfFace(q, face);
        CHECK(cell.points == dualWithGrowingBox(q, face.barycenter));
      }
    }
  }
}
