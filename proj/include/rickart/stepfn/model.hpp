#pragma once

#include "rickart/stepfn/cocountable_set.hpp"
#include "rickart/stepfn/json.hpp"
#include "rickart/stepfn/point.hpp"
#include "rickart/stepfn/step_function.hpp"
#include "rickart/stepfn/tail_expr.hpp"
#include "rickart/stepfn/witness.hpp"
