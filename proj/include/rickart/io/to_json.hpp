#pragma once

#include <nlohmann/json.hpp>

#include "rickart/matrix/json.hpp"
#include "rickart/stepfn/json.hpp"

namespace rickart {

inline nlohmann::json element_json(const matrix::MatrixElement& x) { return matrix::to_json(x); }
inline nlohmann::json element_json(const stepfn::StepFunction& x) { return stepfn::to_json(x); }

}  // namespace rickart
