#pragma once

#include "rickart/matrix/commutant.hpp"
#include "rickart/matrix/cone.hpp"
#include "rickart/matrix/eig.hpp"
#include "rickart/matrix/element.hpp"
#include "rickart/matrix/json.hpp"
#include "rickart/matrix/masa.hpp"
#include "rickart/matrix/projection.hpp"
#include "rickart/matrix/sqrt.hpp"
