#pragma once

// Everything except io.hpp, which additionally needs nlohmann/json.

#include "traceforge/error.hpp"
#include "traceforge/field.hpp"
#include "traceforge/matrix.hpp"
#include "traceforge/semigroup.hpp"
#include "traceforge/semigroup_tree.hpp"
#include "traceforge/laurent.hpp"
#include "traceforge/fractional_ideal.hpp"
#include "traceforge/subspace.hpp"
#include "traceforge/trace.hpp"
#include "traceforge/artin.hpp"
