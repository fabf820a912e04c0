#pragma once

#include <stdexcept>
#include <string>

namespace mintri {

enum class ErrorKind {
  kInvalidArgument,
  kInvolution,
  kSelfGluing,
  kNotClosed,
  kDisconnected,
  kMalformedSignature,
  kInapplicableMove,
  kZeroCocycle,
  kDependentCocycles,
  kBrokenInvariant,
  kInadmissibleSurface,
  kBadWord,
  kLayering,
};

const char* to_string(ErrorKind kind);

class TriangulationError : public std::runtime_error {
 public:
  TriangulationError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mintri
