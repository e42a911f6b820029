#ifndef VENKOV_LATTICE_ENUM_HPP
#define VENKOV_LATTICE_ENUM_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/quadratic_form.hpp"

namespace venkov {

using LatticeVector = std::vector<long long>;

inline QVector toRational(const LatticeVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = Rational(v[i]);
  }
  return r;
}

inline LatticeVector addLat(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
  }
  return r;
}

inline LatticeVector subLat(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
  }
  return r;
}

inline LatticeVector negLat(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = -a[i];
  }
  return r;
}

// First nonzero coordinate positive; used to pick one representative of a
// {v, -v} pair.
inline bool lexPositive(const LatticeVector& v) {
  for (long long c : v) {
    if (c != 0) {
      return c > 0;
    }
  }
  return false;
}

inline Rational qNormLat(const QuadraticForm& q, const LatticeVector& v) {
  return qNorm(q, toRational(v));
}

// An element of Lambda / 2 Lambda, the d-bit label alphabet. Ordering is
// lexicographic on the bit string read coordinate 0 first; every sorted
// container and orientation convention in the complex machinery relies on it.
struct ParityClass {
  int dim = 0;
  unsigned bits = 0;  // bit i = coordinate i mod 2

  bool operator==(const ParityClass&) const = default;

  bool operator<(const ParityClass& o) const {
    for (int i = 0; i < dim; ++i) {
      const unsigned a = (bits >> i) & 1u;
      const unsigned b = (o.bits >> i) & 1u;
      if (a != b) {
        return a < b;
      }
    }
    return false;
  }

  bool isZero() const { return bits == 0; }

  std::string str() const {
    std::string s(static_cast<std::size_t>(dim), '0');
    for (int i = 0; i < dim; ++i) {
      if ((bits >> i) & 1u) {
        s[static_cast<std::size_t>(i)] = '1';
      }
    }
    return s;
  }
};

inline ParityClass parityOf(const LatticeVector& v) {
  ParityClass c;
  c.dim = static_cast<int>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] & 1LL) {
      c.bits |= 1u << i;
    }
  }
  return c;
}

struct EnumerationResult {
  Rational minNorm;
  std::vector<LatticeVector> minimizers;  // sorted lexicographically
};

namespace detail {

// Complete branch-and-bound enumeration of t in (residue + step * Z^d)
// minimizing qNorm(Q, t - target). The LDL^T factorization turns the norm
// into sum_k diag_k * (y_k + c_k)^2 with y = t - target, where c_k depends
// only on coordinates fixed after k. Coordinates are fixed from the last to
// the first; each level scans outward from the real-valued center until the
// accumulated norm exceeds the best bound, so completeness needs no square
// roots. The initial bound comes from a nearest-plane rounding pass.
class ClosestPointSearch {
 public:
  ClosestPointSearch(const QuadraticForm& q, const QVector& target, long long step,
                     const std::vector<long long>& residue)
      : q_(q),
        target_(target),
        step_(step),
        residue_(residue),
        d_(static_cast<int>(q.dim())),
        center_(q.dim(), Rational(0)),
        current_(q.dim(), 0) {}

  EnumerationResult run() {
    best_ = seedNorm();
    search(d_ - 1, Rational(0));
    std::sort(minimizers_.begin(), minimizers_.end());
    return EnumerationResult{best_, std::move(minimizers_)};
  }

 private:
  // c_k = sum_{j > k} L(j, k) * (t_j - target_j)
  Rational levelCenter(int k) const { return target_[static_cast<std::size_t>(k)] - center_[static_cast<std::size_t>(k)]; }

  long long nearestAdmissible(int k, const Rational& mu) const {
    const Rational offset = (mu - Rational(residue_[static_cast<std::size_t>(k)])) / Rational(step_);
    const Integer n = roundRational(offset);
    return residue_[static_cast<std::size_t>(k)] + step_ * n.convert_to<long long>();
  }

  Rational seedNorm() {
    QVector savedCenter = center_;
    LatticeVector t(static_cast<std::size_t>(d_), 0);
    for (int k = d_ - 1; k >= 0; --k) {
      const Rational mu = levelCenter(k);
      t[static_cast<std::size_t>(k)] = nearestAdmissible(k, mu);
      pushFixed(k, t[static_cast<std::size_t>(k)]);
    }
    center_ = std::move(savedCenter);
    QVector y = subVec(toRational(t), target_);
    return qNorm(q_, y);
  }

  void pushFixed(int k, long long tk) {
    const Rational y = Rational(tk) - target_[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) {
      center_[static_cast<std::size_t>(j)] += q_.ldlLower()(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) * y;
    }
  }

  void popFixed(int k, long long tk) {
    const Rational y = Rational(tk) - target_[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) {
      center_[static_cast<std::size_t>(j)] -= q_.ldlLower()(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) * y;
    }
  }

  // Returns false when this value already exceeds the bound, which ends the
  // scan on its side of the center.
  bool tryValue(int k, long long tk, const Rational& mu, const Rational& accum) {
    const Rational y = Rational(tk) - mu;
    const Rational total = accum + q_.ldlDiag()[static_cast<std::size_t>(k)] * y * y;
    if (total > best_) {
      return false;
    }
    current_[static_cast<std::size_t>(k)] = tk;
    pushFixed(k, tk);
    search(k - 1, total);
    popFixed(k, tk);
    return true;
  }

  void search(int k, const Rational& accum) {
    if (k < 0) {
      if (accum < best_) {
        best_ = accum;
        minimizers_.clear();
      }
      minimizers_.push_back(current_);
      return;
    }
    const Rational mu = levelCenter(k);
    const long long t0 = nearestAdmissible(k, mu);
    for (long long t = t0;; t += step_) {
      if (!tryValue(k, t, mu, accum)) {
        break;
      }
    }
    for (long long t = t0 - step_;; t -= step_) {
      if (!tryValue(k, t, mu, accum)) {
        break;
      }
    }
  }

  const QuadraticForm& q_;
  const QVector& target_;
  long long step_;
  const std::vector<long long>& residue_;
  int d_;
  QVector center_;
  LatticeVector current_;
  Rational best_;
  std::vector<LatticeVector> minimizers_;
};

}  // namespace detail

inline EnumerationResult enumerateClosest(const QuadraticForm& q, const QVector& target,
                                          long long step, const std::vector<long long>& residue) {
  if (target.size() != q.dim() || residue.size() != q.dim()) {
    throw DimensionMismatch("enumerateClosest: target or residue dimension mismatch");
  }
  detail::ClosestPointSearch search(q, target, step, residue);
  return search.run();
}

// All vectors of minimal positive Q-norm in the parity coset c + 2 Z^d,
// c != 0. The result is closed under negation.
inline EnumerationResult shortestVectorsInCoset(const QuadraticForm& q, const ParityClass& c) {
  if (c.dim != static_cast<int>(q.dim())) {
    throw DimensionMismatch("shortestVectorsInCoset: parity class dimension mismatch");
  }
  if (c.isZero()) {
    throw Error(Error::Kind::Internal, "shortestVectorsInCoset: zero parity class");
  }
  QVector target(q.dim(), Rational(0));
  std::vector<long long> residue(q.dim(), 0);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    residue[i] = (c.bits >> i) & 1u;
  }
  return enumerateClosest(q, target, 2, residue);
}

// All lattice points minimizing the squared Q-distance to b.
inline EnumerationResult closestLatticePoints(const QuadraticForm& q, const QVector& b) {
  std::vector<long long> residue(q.dim(), 0);
  return enumerateClosest(q, b, 1, residue);
}

// One representative per facet-vector pair of the Voronoi cell: v is kept iff
// the minimizers of its parity coset are exactly {v, -v} (Voronoi's
// criterion). Representatives are the lexicographically positive members,
// output sorted.
inline std::vector<LatticeVector> relevantVectors(const QuadraticForm& q) {
  const int d = static_cast<int>(q.dim());
  std::vector<LatticeVector> out;
  for (unsigned bits = 1; bits < (1u << d); ++bits) {
    ParityClass c{d, bits};
    EnumerationResult res = shortestVectorsInCoset(q, c);
    if (res.minimizers.size() != 2) {
      continue;
    }
    if (res.minimizers[0] != negLat(res.minimizers[1])) {
      throw Error(Error::Kind::Internal,
                  "shortestVectorsInCoset: a two-element minimizer set must be a +/- pair");
    }
    out.push_back(lexPositive(res.minimizers[0]) ? res.minimizers[0] : res.minimizers[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace venkov

#endif  // VENKOV_LATTICE_ENUM_HPP
