#ifndef VENKOV_TESTS_HELPERS_HPP
#define VENKOV_TESTS_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/matrix.hpp"
#include "venkov/quadratic_form.hpp"
#include "venkov/rational.hpp"

namespace venkov::testing {

inline QMatrix makeMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) {
      m(i, j) = Rational(v);
      ++j;
    }
    ++i;
  }
  return m;
}

// Entries given as rational strings, for non-integer fixtures.
inline QMatrix makeMatrixQ(std::initializer_list<std::initializer_list<const char*>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* v : row) {
      m(i, j) = *parseRational(v);
      ++j;
    }
    ++i;
  }
  return m;
}

inline QVector makeVec(std::initializer_list<long long> entries) {
  QVector v;
  for (long long e : entries) {
    v.emplace_back(e);
  }
  return v;
}

inline QVector makeVecQ(std::initializer_list<const char*> entries) {
  QVector v;
  for (const char* e : entries) {
    v.push_back(*parseRational(e));
  }
  return v;
}

// Random integral PD form with |entries| <= maxEntry, by rejection on the
// LDL^T positivity certificate.
inline QMatrix randomPdGram(std::mt19937& rng, std::size_t d, long long maxEntry = 5) {
  std::uniform_int_distribution<long long> off(-maxEntry, maxEntry);
  std::uniform_int_distribution<long long> diag(1, maxEntry);
  for (;;) {
    QMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      m(i, i) = Rational(diag(rng));
      for (std::size_t j = i + 1; j < d; ++j) {
        const long long v = off(rng);
        m(i, j) = Rational(v);
        m(j, i) = Rational(v);
      }
    }
    try {
      ldlDecompose(m);
      return m;
    } catch (const NotPositiveDefinite&) {
    }
  }
}

}  // namespace venkov::testing

#endif  // VENKOV_TESTS_HELPERS_HPP
