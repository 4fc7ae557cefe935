#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace origami {

enum class ErrorCode {
  // surface
  Syntax,
  DuplicateSquare,
  MissingSquare,
  BadFlip,
  NonFilling,
  Disconnected,
  // curves
  InconsistentTraversal,
  NotTransverse,
  Degenerate,
  // homology
  RankMismatch,
  // twists
  UnknownCurve,
  BadWord,
  // flux
  ClassNotInvariant,
  NotNullhomologous,
  // io
  Io,
};

/// Name of the error code, qualified by the module that raises it,
/// e.g. "surface.MISSING_SQUARE".
std::string qualified_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace origami
