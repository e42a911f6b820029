#ifndef VENKOV_BRUTE_ORACLE_HPP
#define VENKOV_BRUTE_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/lattice_enum.hpp"
#include "venkov/matrix.hpp"
#include "venkov/quadratic_form.hpp"
#include "venkov/rational.hpp"

namespace venkov {

// Test-only exhaustive scans over coordinate boxes. Every result is checked
// against an exact sufficiency bound: a point of norm at most B satisfies
// |x_i| <= sqrt(B * (Q^-1)_ii), so a box covering that radius provably holds
// every minimizer. A box that cannot certify its answer raises BoxTooSmall;
// it is never silently truncated. (Rescanning at twice the radius and
// comparing is not enough: a skewed form can keep its far minimizers outside
// both boxes, agreeing on a wrong answer.)
struct BoxSpec {
  long long radius = 1;  // |x_i| <= radius
};

namespace detail {

inline bool advanceBoxPoint(LatticeVector& v, const LatticeVector& center, long long radius) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < center[i] + radius) {
      ++v[i];
      for (std::size_t j = 0; j < i; ++j) {
        v[j] = center[j] - radius;
      }
      return true;
    }
  }
  return false;
}

inline LatticeVector boxStart(const LatticeVector& center, long long radius) {
  LatticeVector v(center.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = center[i] - radius;
  }
  return v;
}

// Smallest integer n >= 0 with n * n >= bound.
inline long long ceilSqrt(const Rational& bound) {
  if (bound <= 0) {
    return 0;
  }
  const Integer num = boost::multiprecision::numerator(bound);
  const Integer den = boost::multiprecision::denominator(bound);
  const Integer quotient = num / den;
  Integer n = boost::multiprecision::sqrt(quotient);
  while (n * n * den < num) {
    ++n;
  }
  return n.convert_to<long long>();
}

// Radius that provably contains every x with qNorm(x) <= bound, from the
// Cauchy-Schwarz coordinate bound |x_i| <= sqrt(bound * (Q^-1)_ii).
inline long long certifiedRadius(const QMatrix& inv, const Rational& bound) {
  long long radius = 0;
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    radius = std::max(radius, ceilSqrt(bound * inv(i, i)));
  }
  return radius;
}

inline EnumerationResult scanShortestInCoset(const QuadraticForm& q, const ParityClass& c,
                                             long long radius) {
  EnumerationResult out;
  bool found = false;
  const LatticeVector center(q.dim(), 0);
  LatticeVector v = boxStart(center, radius);
  do {
    if (!(parityOf(v) == c)) {
      continue;
    }
    const Rational norm = qNormLat(q, v);
    if (!found || norm < out.minNorm) {
      found = true;
      out.minNorm = norm;
      out.minimizers.clear();
      out.minimizers.push_back(v);
    } else if (norm == out.minNorm) {
      out.minimizers.push_back(v);
    }
  } while (advanceBoxPoint(v, center, radius));
  if (!found) {
    throw Error(Error::Kind::Internal, "bruteShortestInCoset: empty coset scan");
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

inline std::vector<LatticeVector> scanVoronoiFacets(const QuadraticForm& q, long long radius,
                                                    const QMatrix& inv) {
  const LatticeVector zero(q.dim(), 0);
  std::vector<LatticeVector> facets;
  LatticeVector t = boxStart(zero, radius);
  do {
    if (t == zero) {
      continue;
    }
    // t supports a facet iff its midpoint is strictly closer to 0 and t than
    // to every other lattice point.
    const QVector mid = scaleVec(toRational(t), Rational(1, 2));
    const Rational own = qNorm(q, mid);
    LatticeVector probe(q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) {
      probe[i] = roundRational(mid[i]).convert_to<long long>();
    }
    // The rounded midpoint is the likeliest competitor; testing it first
    // rejects almost every non-facet before the certified competitor scan.
    if (probe != zero && probe != t && qNorm(q, subVec(mid, toRational(probe))) <= own) {
      continue;
    }
    // Any beating competitor z has qNorm(mid - z) <= own, so it lies within
    // the certified radius of mid; +1 absorbs the rounding of the center.
    const long long competitorRadius = certifiedRadius(inv, own) + 1;
    bool facet = true;
    LatticeVector s = boxStart(probe, competitorRadius);
    do {
      if (s == zero || s == t) {
        continue;
      }
      if (qNorm(q, subVec(mid, toRational(s))) <= own) {
        facet = false;
        break;
      }
    } while (advanceBoxPoint(s, probe, competitorRadius));
    if (facet) {
      facets.push_back(t);
    }
  } while (advanceBoxPoint(t, zero, radius));
  std::sort(facets.begin(), facets.end());
  return facets;
}

inline std::vector<LatticeVector> scanDualCell(const QuadraticForm& q, const QVector& barycenter,
                                               long long radius) {
  LatticeVector center(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    center[i] = roundRational(barycenter[i]).convert_to<long long>();
  }
  std::vector<LatticeVector> best;
  Rational bestNorm;
  bool found = false;
  LatticeVector s = boxStart(center, radius);
  do {
    const Rational norm = qNorm(q, subVec(barycenter, toRational(s)));
    if (!found || norm < bestNorm) {
      found = true;
      bestNorm = norm;
      best.clear();
      best.push_back(s);
    } else if (norm == bestNorm) {
      best.push_back(s);
    }
  } while (advanceBoxPoint(s, center, radius));
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace detail

inline EnumerationResult bruteShortestInCoset(const QuadraticForm& q, const ParityClass& c,
                                              const BoxSpec& box) {
  if (c.bits == 0) {
    throw Error(Error::Kind::Internal, "bruteShortestInCoset: zero parity class");
  }
  EnumerationResult result = detail::scanShortestInCoset(q, c, box.radius);
  const long long needed = detail::certifiedRadius(inverse(q.gram()), result.minNorm);
  if (box.radius < needed) {
    throw BoxTooSmall("bruteShortestInCoset: radius " + std::to_string(box.radius) +
                      " cannot certify the minimum, minimizers may reach radius " +
                      std::to_string(needed));
  }
  return result;
}

inline std::vector<LatticeVector> bruteVoronoiFacets(const QuadraticForm& q, const BoxSpec& box) {
  if (q.dim() > 4) {
    throw Error(Error::Kind::Internal, "bruteVoronoiFacets: oracle limited to dimension <= 4");
  }
  const QMatrix inv = inverse(q.gram());
  // A relevant vector is minimal in its parity class, so its norm is at most
  // the largest class minimum seen over the box (an overestimate of the true
  // class minimum is still an upper bound for the relevant vector).
  Rational maxClassMin(0);
  for (unsigned bits = 1; bits < (1u << q.dim()); ++bits) {
    const EnumerationResult classMin =
        detail::scanShortestInCoset(q, ParityClass{static_cast<int>(q.dim()), bits}, box.radius);
    maxClassMin = std::max(maxClassMin, classMin.minNorm);
  }
  const long long needed = detail::certifiedRadius(inv, maxClassMin);
  if (box.radius < needed) {
    throw BoxTooSmall("bruteVoronoiFacets: radius " + std::to_string(box.radius) +
                      " cannot certify the facet list, relevant vectors may reach radius " +
                      std::to_string(needed));
  }
  return detail::scanVoronoiFacets(q, box.radius, inv);
}

inline std::vector<LatticeVector> bruteDualCell(const QuadraticForm& q, const QVector& barycenter,
                                                const BoxSpec& box) {
  if (q.dim() > 4) {
    throw Error(Error::Kind::Internal, "bruteDualCell: oracle limited to dimension <= 4");
  }
  if (barycenter.size() != q.dim()) {
    throw DimensionMismatch("bruteDualCell: barycenter dimension does not match the form");
  }
  std::vector<LatticeVector> best = detail::scanDualCell(q, barycenter, box.radius);
  const Rational bestNorm = qNorm(q, subVec(barycenter, toRational(best.front())));
  // +1 absorbs the offset between the barycenter and the box center.
  const long long needed = detail::certifiedRadius(inverse(q.gram()), bestNorm) + 1;
  if (box.radius < needed) {
    throw BoxTooSmall("bruteDualCell: radius " + std::to_string(box.radius) +
                      " cannot certify the nearest points, minimizers may reach radius " +
                      std::to_string(needed));
  }
  return best;
}

}  // namespace venkov

#endif  // VENKOV_BRUTE_ORACLE_HPP
