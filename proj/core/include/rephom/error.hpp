#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rephom {

enum class ErrorKind {
  CompositionNonzero,
  DimensionMismatch,
  MixedAlgebras,
  NonHomogeneous,
  InfiniteSlice,
  CutoffExceeded,
  NotReductive,
  ActionNotChainMap,
  NoInvariantForm,
  NoRegularSequence,
  UnsupportedForExactHomology,
  NotReduced,
  UnsupportedCoefficients,
  UnsupportedGroup,
  IncompatibleRoute,
  NoOverlap,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Hard failure. Soft conditions (Gröbner budget, truncation) are reported in
// result values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace rephom
