#pragma once

#include "rickart/audit.hpp"
#include "rickart/core/algebra.hpp"
#include "rickart/core/errors.hpp"
#include "rickart/core/report.hpp"
#include "rickart/core/series.hpp"
#include "rickart/core/tolerance.hpp"
#include "rickart/io/to_json.hpp"
#include "rickart/lattice/positive_part.hpp"
#include "rickart/lattice/riemann.hpp"
#include "rickart/lattice/spectral_family.hpp"
#include "rickart/lattice/sup_increasing.hpp"
#include "rickart/matrix/model.hpp"
#include "rickart/models.hpp"
#include "rickart/norm/order_norm.hpp"
#include "rickart/norm/states.hpp"
#include "rickart/random.hpp"
#include "rickart/stepfn/model.hpp"
