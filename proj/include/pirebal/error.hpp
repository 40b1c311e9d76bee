#pragma once

#include <stdexcept>
#include <string>

namespace pirebal {

enum class ErrorKind {
  Io,
  Parse,
  BadParameters,
  DuplicateVertex,
  UnknownEndpoint,
  NegativeLength,
  DisconnectedGraph,
  AsymmetricInput,
  NegativeEntry,
  InvalidMatrix,
  UnknownVertex,
  InvalidInstance,
  EmptyMemberSet,
  UnbalancedClassification,
  InconsistentFlow,
  ResourceLimit,
  InvalidGrain,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace pirebal
