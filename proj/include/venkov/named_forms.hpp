#ifndef VENKOV_NAMED_FORMS_HPP
#define VENKOV_NAMED_FORMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/matrix.hpp"
#include "venkov/rational.hpp"

namespace venkov {

namespace detail {

inline QMatrix identityGram(std::size_t d) { return QMatrix::identity(d); }

// Path diagram: 2 on the diagonal, -1 between consecutive basis vectors.
inline QMatrix rootGramA(std::size_t d) {
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = Rational(2);
    if (i + 1 < d) {
      m(i, i + 1) = Rational(-1);
      m(i + 1, i) = Rational(-1);
    }
  }
  return m;
}

// Fork diagram: a path on the first d - 1 vectors, the last vector attached
// to the (d-2)nd. For d = 3 this is A3 with relabeled nodes.
inline QMatrix rootGramD(std::size_t d) {
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = Rational(2);
  }
  for (std::size_t i = 0; i + 2 < d; ++i) {
    m(i, i + 1) = Rational(-1);
    m(i + 1, i) = Rational(-1);
  }
  m(d - 1, d - 3) = Rational(-1);
  m(d - 3, d - 1) = Rational(-1);
  return m;
}

}  // namespace detail

// Gram matrices of the standard lattices Z^d, A_d, A_d*, D_d, D_d* for
// 2 <= d <= 6 (D requires d >= 3). Dual forms are the exact inverses of the
// root-basis Grams. Star names accept both "A5*" and "A5star".
inline QMatrix namedGram(const std::string& name) {
  std::string base = name;
  bool dual = false;
  if (base.size() >= 1 && base.back() == '*') {
    dual = true;
    base.pop_back();
  } else if (base.size() > 4 && base.substr(base.size() - 4) == "star") {
    dual = true;
    base = base.substr(0, base.size() - 4);
  }
  if (base.size() != 2 || base[1] < '2' || base[1] > '6') {
    throw UnknownNamedForm(name);
  }
  const std::size_t d = static_cast<std::size_t>(base[1] - '0');
  QMatrix gram;
  switch (base[0]) {
    case 'Z':
      if (dual) {
        throw UnknownNamedForm(name);
      }
      gram = detail::identityGram(d);
      break;
    case 'A':
      gram = detail::rootGramA(d);
      break;
    case 'D':
      if (d < 3) {
        throw UnknownNamedForm(name);
      }
      gram = detail::rootGramD(d);
      break;
    default:
      throw UnknownNamedForm(name);
  }
  if (dual) {
    gram = inverse(gram);
  }
  return gram;
}

inline std::vector<std::string> namedFormCatalog() {
  std::vector<std::string> names;
  for (char d = '2'; d <= '6'; ++d) {
    names.push_back(std::string("Z") + d);
    names.push_back(std::string("A") + d);
    names.push_back(std::string("A") + d + "*");
    if (d >= '3') {
      names.push_back(std::string("D") + d);
      names.push_back(std::string("D") + d + "*");
    }
  }
  return names;
}

// File-system-safe spelling: the trailing '*' becomes "star".
inline std::string formFileStem(const std::string& name) {
  if (!name.empty() && name.back() == '*') {
    return name.substr(0, name.size() - 1) + "star";
  }
  return name;
}

// Form-file text for a named lattice, in the grammar the parser accepts.
inline std::string formFileText(const std::string& name) {
  QMatrix gram = namedGram(name);
  std::string text = "# " + name + "\n" + std::to_string(gram.rows()) + "\n";
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (j > 0) {
        text += ' ';
      }
      text += toString(gram(i, j));
    }
    text += '\n';
  }
  return text;
}

}  // namespace venkov

#endif  // VENKOV_NAMED_FORMS_HPP
