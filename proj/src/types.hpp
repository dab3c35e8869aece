#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie {

enum class Err {
  InvalidType,
  NonDominant,
  DimensionCapExceeded,
  IncompatibleShapes,
  NotASimpleSystem,
  NonIntegerIndex,
  UnresolvedMechanism,
  IncompatibleChain,
  UnsupportedModel,
  UnclassifiableDiagram,
  UnknownRealForm,
  UnsupportedCase,
  ParseError,
  UnresolvedReference,
  DuplicateRow,
  MissingAnnotation,
};

const char* err_name(Err e);

// Domain errors carry a stable case name so callers (and the CLI) can
// report which contract was violated.
class LieError : public std::runtime_error {
 public:
  LieError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw LieError(code, what);
}

// Simple complex Lie algebra type. B2=C2 is canonicalized to B2, D3 to A3,
// and the rank-1 coincidences B1/C1/D1 to A1, so types compare by value.
struct SimpleTypeId {
  char family = 'A';
  int rank = 0;

  static SimpleTypeId make(char family, int rank);
  static SimpleTypeId parse(const std::string& token);

  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  int dimension() const;
  int root_count() const { return dimension() - rank; }

  auto operator<=>(const SimpleTypeId&) const = default;
};

// Ordered list of simple factors of a complex semisimple algebra,
// canonically sorted by (family, rank).
struct ComplexSemisimpleDesc {
  std::vector<SimpleTypeId> factors;

  static ComplexSemisimpleDesc of(std::vector<SimpleTypeId> fs);
  std::string str() const;
  int total_rank() const;

  auto operator<=>(const ComplexSemisimpleDesc&) const = default;
};

}  // namespace lie
