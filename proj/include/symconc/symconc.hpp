#pragma once

#include "symconc/linalg.hpp"
#include "symconc/collective.hpp"
#include "symconc/pair_reduction.hpp"
#include "symconc/concurrence.hpp"
#include "symconc/states.hpp"
#include "symconc/thermal.hpp"
#include "symconc/epr.hpp"
