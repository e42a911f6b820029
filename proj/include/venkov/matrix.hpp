#ifndef VENKOV_MATRIX_HPP
#define VENKOV_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/rational.hpp"

namespace venkov {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = T(1);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swapRows(std::size_t i, std::size_t j) {
    if (i == j) {
      return;
    }
    for (std::size_t k = 0; k < cols_; ++k) {
      std::swap((*this)(i, k), (*this)(j, k));
    }
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

inline Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dot: vector sizes differ");
  }
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

inline QVector addVec(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("addVec: vector sizes differ");
  }
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
  }
  return r;
}

inline QVector subVec(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("subVec: vector sizes differ");
  }
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
  }
  return r;
}

inline QVector scaleVec(const QVector& a, const Rational& s) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] * s;
  }
  return r;
}

inline QVector matVec(const QMatrix& m, const QVector& x) {
  if (m.cols() != x.size()) {
    throw DimensionMismatch("matVec: shape mismatch");
  }
  QVector r(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r[i] += m(i, j) * x[j];
    }
  }
  return r;
}

// Exact rank over the rationals by fraction-free (Bareiss) elimination.
// Pivots are the first nonzero entry of each column scanned left to right, so
// the elimination path is deterministic, and intermediate values stay
// integral whenever the input is integral.
inline std::size_t rank(Matrix<Rational> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational prev(1);
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m(piv, col) == 0) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    m.swapRows(piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
      }
      m(i, col) = 0;
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

inline std::size_t rankOfRows(const std::vector<QVector>& rows) {
  if (rows.empty()) {
    return 0;
  }
  Matrix<Rational> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw DimensionMismatch("rankOfRows: row sizes differ");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return rank(std::move(m));
}

// Dimension of the affine hull of a nonempty point set: the rank of the
// difference matrix against the first point.
inline std::size_t affineDimension(const std::vector<QVector>& points) {
  if (points.empty()) {
    throw DimensionMismatch("affineDimension: empty point set");
  }
  std::vector<QVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != points[0].size()) {
      throw DimensionMismatch("affineDimension: point dimensions differ");
    }
    diffs.push_back(subVec(points[i], points[0]));
  }
  return rankOfRows(diffs);
}

struct LdlDecomposition {
  QMatrix lower;  // unit lower triangular
  QVector diag;   // strictly positive pivots
};

// Exact Q = L D L^T. Positive pivots certify positive definiteness; a pivot
// <= 0 is reported as NotPositiveDefinite.
inline LdlDecomposition ldlDecompose(const QMatrix& q) {
  const std::size_t n = q.rows();
  if (q.cols() != n) {
    throw NotSymmetric("ldlDecompose: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q(i, j) != q(j, i)) {
        throw NotSymmetric();
      }
    }
  }
  LdlDecomposition out{QMatrix::identity(n), QVector(n, Rational(0))};
  for (std::size_t k = 0; k < n; ++k) {
    Rational dk = q(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      dk -= out.lower(k, j) * out.lower(k, j) * out.diag[j];
    }
    if (dk <= 0) {
      throw NotPositiveDefinite("pivot " + std::to_string(k) + " is not positive");
    }
    out.diag[k] = dk;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational v = q(i, k);
      for (std::size_t j = 0; j < k; ++j) {
        v -= out.lower(i, j) * out.lower(k, j) * out.diag[j];
      }
      out.lower(i, k) = v / dk;
    }
  }
  return out;
}

// One exact solution of A x = b when consistent, with non-pivot variables
// fixed to zero; nullopt when inconsistent.
inline std::optional<QVector> solveLinear(const QMatrix& a, const QVector& b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) {
    throw DimensionMismatch("solveLinear: right-hand side size mismatch");
  }
  Matrix<Rational> aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      aug(i, j) = a(i, j);
    }
    aug(i, cols) = b[i];
  }
  std::vector<std::size_t> pivotCol;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && aug(piv, col) == 0) {
      ++piv;
    }
    if (piv == rows) {
      continue;
    }
    aug.swapRows(piv, r);
    const Rational inv = Rational(1) / aug(r, col);
    for (std::size_t j = col; j <= cols; ++j) {
      aug(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug(i, col) == 0) {
        continue;
      }
      const Rational f = aug(i, col);
      for (std::size_t j = col; j <= cols; ++j) {
        aug(i, j) -= f * aug(r, j);
      }
    }
    pivotCol.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (aug(i, cols) != 0) {
      return std::nullopt;
    }
  }
  QVector x(cols, Rational(0));
  for (std::size_t k = 0; k < r; ++k) {
    x[pivotCol[k]] = aug(k, cols);
  }
  return x;
}

// Exact determinant by fraction-free elimination.
inline Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw DimensionMismatch("determinant: matrix is not square");
  }
  if (n == 0) {
    return Rational(1);
  }
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) {
      ++piv;
    }
    if (piv == n) {
      return Rational(0);
    }
    if (piv != k) {
      m.swapRows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Exact inverse; the argument must be square and nonsingular.
inline QMatrix inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) {
    throw DimensionMismatch("inverse: matrix is not square");
  }
  QMatrix out(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    QVector e(n, Rational(0));
    e[col] = 1;
    auto x = solveLinear(a, e);
    if (!x) {
      throw DimensionMismatch("inverse: matrix is singular");
    }
    for (std::size_t i = 0; i < n; ++i) {
      out(i, col) = (*x)[i];
    }
  }
  return out;
}

}  // namespace venkov

#endif  // VENKOV_MATRIX_HPP
