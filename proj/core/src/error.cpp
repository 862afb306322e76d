#include "rephom/error.hpp"

namespace rephom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::InfiniteSlice: return "InfiniteSlice";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::NotReductive: return "NotReductive";
    case ErrorKind::ActionNotChainMap: return "ActionNotChainMap";
    case ErrorKind::NoInvariantForm: return "NoInvariantForm";
    case ErrorKind::NoRegularSequence: return "NoRegularSequence";
    case ErrorKind::UnsupportedForExactHomology: return "UnsupportedForExactHomology";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::UnsupportedCoefficients: return "UnsupportedCoefficients";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::IncompatibleRoute: return "IncompatibleRoute";
    case ErrorKind::NoOverlap: return "NoOverlap";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rephom
