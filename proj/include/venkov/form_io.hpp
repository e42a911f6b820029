#ifndef VENKOV_FORM_IO_HPP
#define VENKOV_FORM_IO_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "venkov/errors.hpp"
#include "venkov/matrix.hpp"
#include "venkov/quadratic_form.hpp"
#include "venkov/rational.hpp"

namespace venkov {

struct FormFile {
  std::string id;
  std::string path;
  std::size_t dim = 0;
  QMatrix gram;
};

namespace detail {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;  // 1-based
};

// Whitespace-separated tokens of the non-comment, non-blank lines. A line
// whose first non-space character is '#' is a comment.
inline std::vector<std::vector<Token>> tokenizeFormText(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (tokens.empty() && line[i] == '#') {
        tokens.clear();
        break;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      tokens.push_back({line.substr(start, i - start), lineNo, static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
    }
  }
  return lines;
}

}  // namespace detail

// Grammar: first data line is the dimension d; the next d data lines carry d
// rationals each ("p/q" or plain integer). Validation instantiates the form,
// so symmetry and positive definiteness errors propagate from there.
inline FormFile parseFormFile(const std::string& text, const std::string& id = "",
                              const std::string& path = "") {
  const auto lines = detail::tokenizeFormText(text);
  if (lines.empty()) {
    throw ParseError(1, 1, "expected a dimension line");
  }
  const detail::Token& dimTok = lines[0][0];
  long long d = 0;
  try {
    std::size_t used = 0;
    d = std::stoll(dimTok.text, &used);
    if (used != dimTok.text.size()) {
      throw std::invalid_argument(dimTok.text);
    }
  } catch (const std::exception&) {
    throw ParseError(dimTok.line, dimTok.column, "dimension is not an integer: " + dimTok.text);
  }
  if (lines[0].size() > 1) {
    const detail::Token& extra = lines[0][1];
    throw ParseError(extra.line, extra.column, "unexpected token after the dimension");
  }
  if (d < 2 || d > 6) {
    throw UnsupportedDimension("dimension " + std::to_string(d) + " is outside 2..6");
  }
  const std::size_t dim = static_cast<std::size_t>(d);
  if (lines.size() < dim + 1) {
    const auto& lastLine = lines.back();
    const detail::Token& last = lastLine.back();
    throw ParseError(last.line + 1, 1,
                     "expected " + std::to_string(dim) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));
  }
  if (lines.size() > dim + 1) {
    const detail::Token& extra = lines[dim + 1][0];
    throw ParseError(extra.line, extra.column, "unexpected content after the matrix");
  }
  QMatrix gram(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::vector<detail::Token>& row = lines[i + 1];
    if (row.size() != dim) {
      const detail::Token& anchor = row.size() > dim ? row[dim] : row.back();
      const int col = row.size() > dim ? anchor.column
                                       : anchor.column + static_cast<int>(anchor.text.size());
      throw ParseError(anchor.line, col,
                       "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(dim));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const auto value = parseRational(row[j].text);
      if (!value) {
        throw ParseError(row[j].line, row[j].column, "not a rational: " + row[j].text);
      }
      gram(i, j) = *value;
    }
  }
  [[maybe_unused]] QuadraticForm validated(gram);
  FormFile out;
  out.id = id;
  out.path = path;
  out.dim = dim;
  out.gram = std::move(gram);
  return out;
}

inline std::string fileStem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  return name;
}

inline FormFile loadFormFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Error::Kind::Input, "cannot open form file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseFormFile(buf.str(), fileStem(path), path);
}

}  // namespace venkov

#endif  // VENKOV_FORM_IO_HPP
