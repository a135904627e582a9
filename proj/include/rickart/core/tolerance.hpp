#pragma once

#include <cstddef>

#include "rickart/core/errors.hpp"

namespace rickart {

/// Numerical slack shared by every comparison in the library.
///
/// `eps_eq` bounds entrywise (or probewise) equality, `eps_psd` bounds how
/// negative an eigenvalue / pointwise value may be while still counting as
/// nonnegative. `probe_count` is the number of reserved tail points
/// p_n = 1/(n+2), n = 1..probe_count, on which tail-bearing step functions are
/// compared and ordered.
struct Tolerance {
  double eps_eq = 1e-9;
  double eps_psd = 1e-8;
  std::size_t probe_count = 64;

  bool valid() const {
    return eps_eq > 0 && eps_psd > 0 && probe_count > 0 && eps_eq <= eps_psd;
  }

  const Tolerance& checked() const {
    if (!valid()) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive with eps_eq <= eps_psd");
    return *this;
  }
};

}  // namespace rickart
