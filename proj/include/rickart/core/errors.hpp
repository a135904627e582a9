#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rickart {

/// Precondition failures raised by library operations.
enum class ErrorKind {
  NotHermitian,
  NotPositive,
  NotBounded,
  DominationViolated,
  SeriesDiverges,
  NotIncreasing,
  NotDominated,
  BadPartition,
  NoStates,
  DimensionMismatch,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::DominationViolated: return "DominationViolated";
    case ErrorKind::SeriesDiverges: return "SeriesDiverges";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::NoStates: return "NoStates";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rickart
