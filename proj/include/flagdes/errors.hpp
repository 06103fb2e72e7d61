#pragma once

#include <stdexcept>
#include <string>

namespace flagdes {

enum class Err {
  NotPrime,
  ReduciblePolynomial,
  BadDegree,
  ZeroInverse,
  ZeroArgument,
  FieldMismatch,
  SingularMatrix,
  DimensionMismatch,
  CapExceeded,
  SingularGenerator,
  ParseError,
  UnboundLabel,
  TrivialBlock,
  NotResolvable,
  NotTwoDesign,
  PreconditionViolated,
  ParameterMismatch,
  BadCongruence,
  BadDivisor,
  OddDegree,
  SpreadAssemblyFailed,
  SubgroupSearchFailed,
  BadInput,
};

class Error : public std::runtime_error {
public:
  Err code;
  Error(Err c, const std::string &msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string &msg) { throw Error(c, msg); }

} // namespace flagdes
