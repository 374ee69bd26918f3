#pragma once

#include "phl/model.hpp"
#include "phl/perverse.hpp"
#include "phl/report.hpp"

namespace phl {

/// Every check on a model: validation, weight axioms of L_β and L_σ̄, the
/// Hodge cross-check, bigradedness and purity of P, then the cube checks,
/// commutator nilpotency with the antidiagonal identity, and so(6).
CheckReport run_check_suite(const GradedAlgebraModel& model);

/// The checks that only need a cube: P=F, symmetries, bounds, support.
CheckReport run_cube_suite(const PerverseHodgeCube& cube);

}  // namespace phl
