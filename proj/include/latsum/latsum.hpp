#pragma once

#include "latsum/closed_form.hpp"
#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"
#include "latsum/lattice_functions.hpp"
#include "latsum/numeric.hpp"
#include "latsum/recurrence.hpp"
#include "latsum/singular.hpp"
#include "latsum/special.hpp"
#include "latsum/symbolic.hpp"
#include "latsum/tables.hpp"
#include "latsum/trig_series.hpp"

namespace latsum {

// one method; throws PreconditionError where the method does not apply
SumValue compute_sum(const SumIndex& idx, const LatticeSpec& lat, Method method);

// oracle | fast | recurrence | symbolic
Method parse_method(const std::string& name);

}  // namespace latsum
