#pragma once

#include <stdexcept>
#include <string>

namespace gc {

enum class ErrorKind {
  NonTrivalent,
  Disconnected,
  WrongEdgeCount,
  LoopContraction,
  ResourceLimit,
  PrimeDisagreement,
  WrongK,
  NotAComplex,
  NotAcyclic,
  DegreeMismatch,
  InvalidDecoration,
  NonIntegerOrbit,
  IoFailure,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type. The CLI
// maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gc
