#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace witt {

/// Domain error categories. Each maps to a stable name used in CLI error objects.
enum class Errc {
  NotDivisorClosed,
  DescriptorMismatch,
  NotDivisible,
  InvalidRing,
  NotFinite,
  NotGhostIntegral,
  ShapeMismatch,
  NotSubset,
  IndexOutsideS,
  NotCoprime,
  WrongRing,
  TooLarge,
  TableLimit,
  AmbientMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

/// Recoverable error caused by the input data (bad truncation set, ring mismatch, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

class NotDivisorClosedError : public Error {
 public:
  NotDivisorClosedError(std::uint64_t witness, std::uint64_t missing);
  std::uint64_t witness() const { return witness_; }
  std::uint64_t missing() const { return missing_; }

 private:
  std::uint64_t witness_;
  std::uint64_t missing_;
};

/// A broken internal invariant, e.g. an inexact division while building the
/// universal polynomial tables. Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define WITT_ASSERT(cond, msg)                                      \
  do {                                                              \
    if (!(cond)) throw ::witt::InternalError(std::string(msg));     \
  } while (0)

}  // namespace witt
