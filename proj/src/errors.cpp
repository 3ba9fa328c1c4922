#include "witt/errors.hpp"

namespace witt {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotDivisorClosed: return "NotDivisorClosed";
    case Errc::DescriptorMismatch: return "DescriptorMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::InvalidRing: return "InvalidRing";
    case Errc::NotFinite: return "NotFinite";
    case Errc::NotGhostIntegral: return "NotGhostIntegral";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSubset: return "NotSubset";
    case Errc::IndexOutsideS: return "IndexOutsideS";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::WrongRing: return "WrongRing";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TableLimit: return "TableLimit";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

NotDivisorClosedError::NotDivisorClosedError(std::uint64_t witness, std::uint64_t missing)
    : Error(Errc::NotDivisorClosed, "truncation set is not divisor-closed: " + std::to_string(witness) +
                                        " is present but its divisor " + std::to_string(missing) +
                                        " is missing"),
      witness_(witness),
      missing_(missing) {}

}  // namespace witt
