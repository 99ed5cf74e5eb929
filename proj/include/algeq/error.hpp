#pragma once

#include <stdexcept>
#include <string>

namespace algeq {

enum class ErrorKind {
  ModulusMismatch,
  ZeroInverse,
  DenominatorVanishes,
  NotPrime,
  DimensionMismatch,
  IndexOutOfRange,
  InvalidArgument,
  Singular,
  CyclicGraph,
  NotBAP,
  NotDAG,
  NodeCountMismatch,
  NoNonadjacentPair,
  NTooSmall,
  TooLarge,
  ParseError,
  UnknownNode,
  DuplicateEdge,
  SelfLoop,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind lets callers (and tests) distinguish preconditions without parsing
// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace algeq
