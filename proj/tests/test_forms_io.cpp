#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "venkov/form_io.hpp"
#include "venkov/named_forms.hpp"

using namespace venkov;
using namespace venkov::testing;

TEST_CASE("grams of the named root lattices") {
  CHECK(namedGram("Z5") == QMatrix::identity(5));
  CHECK(namedGram("A2") == makeMatrix({{2, -1}, {-1, 2}}));
  CHECK(namedGram("A2*") == makeMatrixQ({{"2/3", "1/3"}, {"1/3", "2/3"}}));
  CHECK(namedGram("A2star") == namedGram("A2*"));
  CHECK(namedGram("D3") == makeMatrix({{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}));
  CHECK(namedGram("D4") ==
        makeMatrix({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));

  // Discriminants: det A_d = d + 1, det D_d = 4, duals are reciprocal.
  for (std::size_t d = 2; d <= 6; ++d) {
    const std::string ad = "A" + std::to_string(d);
    CHECK(determinant(namedGram(ad)) == Rational(static_cast<long long>(d + 1)));
    CHECK(determinant(namedGram(ad + "*")) ==
          Rational(1) / Rational(static_cast<long long>(d + 1)));
  }
  for (std::size_t d = 3; d <= 6; ++d) {
    const std::string dd = "D" + std::to_string(d);
    CHECK(determinant(namedGram(dd)) == Rational(4));
    CHECK(determinant(namedGram(dd + "*")) == Rational(1) / Rational(4));
  }
}

TEST_CASE("unknown form names are rejected") {
  for (const char* name : {"B3", "A1", "A7", "D2", "Z2*", "E6", "A", "", "Astar", "Q5"}) {
    CHECK_THROWS_AS(namedGram(name), UnknownNamedForm);
  }
}

TEST_CASE("the catalog instantiates as valid forms") {
  const auto names = namedFormCatalog();
  CHECK(names.size() == 23);
  for (const std::string& name : names) {
    const QMatrix gram = namedGram(name);
    CHECK_NOTHROW(QuadraticForm(gram));
  }
}

TEST_CASE("file stems replace the star suffix") {
  CHECK(formFileStem("A5*") == "A5star");
  CHECK(formFileStem("Z4") == "Z4");
  CHECK(fileStem("/some/dir/A5star.form") == "A5star");
  CHECK(fileStem("plain.form") == "plain");
  CHECK(fileStem("noext") == "noext");
}

TEST_CASE("form file text round-trips through the parser") {
  for (const std::string& name : namedFormCatalog()) {
    const FormFile parsed = parseFormFile(formFileText(name), name);
    CHECK(parsed.id == name);
    CHECK(parsed.gram == namedGram(name));
  }
}

TEST_CASE("form files accept comments, blank lines, and rationals") {
  const std::string text =
      "# hexagonal lattice\n"
      "\n"
      "2\n"
      "  2 1\n"
      "# rows may be separated by comments\n"
      "1 2\n";
  const FormFile f = parseFormFile(text, "hex");
  CHECK(f.dim == 2);
  CHECK(f.gram == makeMatrix({{2, 1}, {1, 2}}));

  const FormFile dual = parseFormFile("2\n2/3 1/3\n1/3 2/3\n");
  CHECK(dual.gram == namedGram("A2*"));
}

TEST_CASE("form file grammar errors carry positions") {
  try {
    parseFormFile("x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 1);
  }

  try {
    parseFormFile("2\n1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);  // the missing row is reported after the last line
  }

  try {
    parseFormFile("2\n1 0 0\n0 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 5);
  }

  try {
    parseFormFile("2\n1 0\n0 1\nextra\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }

  try {
    parseFormFile("2\n1 zebra\n0 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }

  CHECK_THROWS_AS(parseFormFile("7\n"), UnsupportedDimension);
  CHECK_THROWS_AS(parseFormFile("1\n1\n"), UnsupportedDimension);
  CHECK_THROWS_AS(parseFormFile("2\n1 2\n2 1\n"), NotPositiveDefinite);
  CHECK_THROWS_AS(parseFormFile("2\n1 2\n0 1\n"), NotSymmetric);
  CHECK_THROWS_AS(parseFormFile(""), ParseError);
  CHECK_THROWS_AS(parseFormFile("# only a comment\n"), ParseError);
}

TEST_CASE("loading a missing file is an input error") {
  try {
    loadFormFile("/nonexistent/path/to.form");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Input);
  }
}
