#pragma once

#include "newtoric/feasibility.hpp"
#include "newtoric/geometry.hpp"
#include "newtoric/groebner.hpp"
#include "newtoric/matrix.hpp"
#include "newtoric/membership.hpp"
#include "newtoric/newton.hpp"
#include "newtoric/numbers.hpp"
#include "newtoric/polynomial.hpp"
#include "newtoric/presentation.hpp"
#include "newtoric/report.hpp"
#include "newtoric/toric.hpp"
