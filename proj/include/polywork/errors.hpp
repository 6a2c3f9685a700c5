#pragma once

#include <stdexcept>
#include <string>

namespace polywork {

// Broad classes used by the CLI to pick an exit code.
enum class ErrorKind {
  Input,   // malformed or inconsistent input data
  Domain,  // precondition violated by a structurally valid input
  Budget,  // configured search budget exhausted
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

#define POLYWORK_DEFINE_ERROR(Name, Kind)                               \
  class Name : public Error {                                           \
  public:                                                               \
    explicit Name(const std::string& what = "")                        \
        : Error(ErrorKind::Kind, #Name, what) {}                        \
  }

POLYWORK_DEFINE_ERROR(EmptyPolyhedron, Domain);
POLYWORK_DEFINE_ERROR(NotBounded, Domain);
POLYWORK_DEFINE_ERROR(DimensionMismatch, Input);
POLYWORK_DEFINE_ERROR(RankDeficient, Input);
POLYWORK_DEFINE_ERROR(LowerDimensional, Domain);
POLYWORK_DEFINE_ERROR(SearchBudgetExceeded, Budget);
POLYWORK_DEFINE_ERROR(NotRegular, Input);
POLYWORK_DEFINE_ERROR(InconsistentOracle, Input);
POLYWORK_DEFINE_ERROR(DegenerateWeights, Input);
POLYWORK_DEFINE_ERROR(NotUSO, Input);
POLYWORK_DEFINE_ERROR(NotPure, Input);
POLYWORK_DEFINE_ERROR(AxiomViolation, Input);
POLYWORK_DEFINE_ERROR(UnsupportedParameter, Input);
POLYWORK_DEFINE_ERROR(InputError, Input);

#undef POLYWORK_DEFINE_ERROR

}  // namespace polywork
