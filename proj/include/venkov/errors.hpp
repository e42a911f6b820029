#ifndef VENKOV_ERRORS_HPP
#define VENKOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace venkov {

// Failure taxonomy mirrored by the CLI exit codes: input errors (exit 2) mean
// the user's data is malformed or not a valid form; internal errors (exit 3)
// mean a mathematical invariant failed, which indicates a bug rather than bad
// input and must never be downgraded to a soft failure.
class Error : public std::runtime_error {
 public:
  enum class Kind { Input, Internal };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what)
      : Error(Kind::Input, "parse error at line " + std::to_string(line_) + ", column " +
                               std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& what = "matrix is not symmetric")
      : Error(Kind::Input, what) {}
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what = "form is not positive definite")
      : Error(Kind::Input, what) {}
};

struct UnsupportedDimension : Error {
  explicit UnsupportedDimension(const std::string& what = "dimension must be between 2 and 6")
      : Error(Kind::Input, what) {}
};

struct UnknownNamedForm : Error {
  explicit UnknownNamedForm(const std::string& name)
      : Error(Kind::Input, "unknown named form: " + name) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : Error(Kind::Internal, what) {}
};

struct UnboundedPolytope : Error {
  explicit UnboundedPolytope(const std::string& what =
                                 "half-space intersection is unbounded; relevant vectors "
                                 "cannot be a complete facet set")
      : Error(Kind::Internal, what) {}
};

struct DualDimensionMismatch : Error {
  explicit DualDimensionMismatch(const std::string& what)
      : Error(Kind::Internal, what) {}
};

struct MinkowskiVenkovViolation : Error {
  explicit MinkowskiVenkovViolation(const std::string& what)
      : Error(Kind::Internal, what) {}
};

struct UnclassifiableDual3Cell : Error {
  explicit UnclassifiableDual3Cell(const std::string& what)
      : Error(Kind::Internal, what) {}
};

struct RedBlueConflict : Error {
  explicit RedBlueConflict(const std::string& what) : Error(Kind::Internal, what) {}
};

struct DegenerateTriple : Error {
  explicit DegenerateTriple(const std::string& what) : Error(Kind::Internal, what) {}
};

struct MissingRedEdge : Error {
  explicit MissingRedEdge(const std::string& what) : Error(Kind::Internal, what) {}
};

struct DimensionTooSmall : Error {
  explicit DimensionTooSmall(const std::string& what =
                                 "the Venkov complex is defined for dimension >= 4")
      : Error(Kind::Internal, what) {}
};

struct BoxTooSmall : Error {
  explicit BoxTooSmall(const std::string& what =
                           "brute-force box too small: doubling the radius changed the result")
      : Error(Kind::Internal, what) {}
};

}  // namespace venkov

#endif  // VENKOV_ERRORS_HPP
