#ifndef VENKOV_QUADRATIC_FORM_HPP
#define VENKOV_QUADRATIC_FORM_HPP

#include <cstddef>
#include <utility>

#include "venkov/errors.hpp"
#include "venkov/matrix.hpp"

namespace venkov {

// A positive definite rational quadratic form on Z^d, 2 <= d <= 6. The lattice
// is always Z^d in these coordinates; the form carries all the geometry.
// Construction validates symmetry and positive definiteness and caches the
// LDL^T factorization used by the enumeration kernels.
class QuadraticForm {
 public:
  explicit QuadraticForm(QMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) {
      throw NotSymmetric("quadratic form matrix is not square");
    }
    if (gram_.rows() < 2 || gram_.rows() > 6) {
      throw UnsupportedDimension();
    }
    ldl_ = ldlDecompose(gram_);
  }

  std::size_t dim() const { return gram_.rows(); }
  const QMatrix& gram() const { return gram_; }
  const QMatrix& ldlLower() const { return ldl_.lower; }
  const QVector& ldlDiag() const { return ldl_.diag; }

 private:
  QMatrix gram_;
  LdlDecomposition ldl_;
};

// x^T Q x, exact.
inline Rational qNorm(const QuadraticForm& q, const QVector& x) {
  if (x.size() != q.dim()) {
    throw DimensionMismatch("qNorm: vector dimension does not match the form");
  }
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      s += x[i] * q.gram()(i, j) * x[j];
    }
  }
  return s;
}

}  // namespace venkov

#endif  // VENKOV_QUADRATIC_FORM_HPP
