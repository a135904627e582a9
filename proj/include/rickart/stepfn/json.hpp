#pragma once

#include <nlohmann/json.hpp>

#include "rickart/stepfn/step_function.hpp"

namespace rickart::stepfn {

inline nlohmann::json complex_json(Complex v) { return nlohmann::json::array({v.real(), v.imag()}); }

/// {"kind": "stepfn", "default": [re, im], "exceptions": {label: [re, im]}, "tail": expr | null}
inline nlohmann::json to_json(const StepFunction& f) {
  nlohmann::json exc = nlohmann::json::object();
  for (const auto& [t, v] : f.exceptions()) exc[t.label()] = complex_json(v);
  nlohmann::json out = {{"kind", "stepfn"}, {"default", complex_json(f.default_value())}, {"exceptions", exc}};
  out["tail"] = f.tail() ? nlohmann::json(f.tail()->to_string()) : nlohmann::json(nullptr);
  return out;
}

}  // namespace rickart::stepfn
