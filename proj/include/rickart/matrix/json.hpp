#pragma once

#include <nlohmann/json.hpp>

#include "rickart/matrix/element.hpp"

namespace rickart::matrix {

/// {"kind": "matrix", "n": n, "entries": [[re, im], ...]} in row-major order.
inline nlohmann::json to_json(const MatrixElement& x) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const Complex v = x(i, j);
      entries.push_back({v.real(), v.imag()});
    }
  return {{"kind", "matrix"}, {"n", x.dim()}, {"entries", std::move(entries)}};
}

}  // namespace rickart::matrix
