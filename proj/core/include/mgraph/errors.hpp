#pragma once

#include <stdexcept>
#include <string>

namespace mgraph {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MGRAPH_DEFINE_ERROR(Name)                         \
  class Name : public Error {                             \
   public:                                                \
    explicit Name(const std::string& msg) : Error(msg) {} \
  }

MGRAPH_DEFINE_ERROR(DisconnectedGraph);
MGRAPH_DEFINE_ERROR(NonpositiveLength);
MGRAPH_DEFINE_ERROR(UnknownVertex);
MGRAPH_DEFINE_ERROR(UnknownEdge);
MGRAPH_DEFINE_ERROR(EmptyGraph);
MGRAPH_DEFINE_ERROR(DuplicateId);
MGRAPH_DEFINE_ERROR(PointIsVertex);
MGRAPH_DEFINE_ERROR(BadPoint);
MGRAPH_DEFINE_ERROR(DiscontinuousFunction);
MGRAPH_DEFINE_ERROR(NonzeroMass);
MGRAPH_DEFINE_ERROR(DegreeMinusTwo);
MGRAPH_DEFINE_ERROR(NonUnitLength);
MGRAPH_DEFINE_ERROR(DegreeMismatch);
MGRAPH_DEFINE_ERROR(PropositionA3Violation);
MGRAPH_DEFINE_ERROR(HypothesisViolated);
MGRAPH_DEFINE_ERROR(GenusTooSmall);
MGRAPH_DEFINE_ERROR(NegativeDelta);
MGRAPH_DEFINE_ERROR(BadResidueCardinality);
MGRAPH_DEFINE_ERROR(IndexOutOfRange);
MGRAPH_DEFINE_ERROR(SingularSystem);

#undef MGRAPH_DEFINE_ERROR

/// Parse failure with the 1-based line number of the offending directive.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mgraph
