#pragma once

#include <stdexcept>
#include <string>

namespace tunnellab {

// Base for every failure the numerics can raise deliberately.  Callers that
// want to distinguish "bad input" from "algorithm gave up" catch the concrete
// types; the CLI maps any NumericalError to exit code 2.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested at or beyond a pole of the analytically continued drive.
struct SingularityError : NumericalError {
  using NumericalError::NumericalError;
};

// Square-root or logarithm branch could not be followed continuously along the
// requested path (step refinement hit its depth cap, or a node sits on top of
// a branch point).
struct BranchTrackingError : NumericalError {
  using NumericalError::NumericalError;
};

// Damped Newton iteration for a stationary point did not converge.
struct SaddleNotFoundError : NumericalError {
  using NumericalError::NumericalError;
};

// A scalar root requested by bracketing was not found in the scan interval.
struct NoRootError : NumericalError {
  using NumericalError::NumericalError;
};

// Energy sits above the barrier top: no classically forbidden region.
struct NoBarrierError : NumericalError {
  using NumericalError::NumericalError;
};

// Shooting iteration for the driven instanton left the configured trust
// region or exhausted its iteration budget.
struct ShootingDivergedError : NumericalError {
  using NumericalError::NumericalError;
};

// Equipotential extraction found the wrong number of allowed regions.
struct TopologyError : NumericalError {
  using NumericalError::NumericalError;
};

// Path relaxation stopped making progress before reaching tolerance.
struct MinimizationStalledError : NumericalError {
  using NumericalError::NumericalError;
};

// Transverse confinement level has no turning points at the requested energy.
struct NoRootsError : NumericalError {
  using NumericalError::NumericalError;
};

// Turning points came back in an unusable order (no forbidden belt between).
struct RootOrderError : NumericalError {
  using NumericalError::NumericalError;
};

// Sign-change bracket for the resonance sweep never materialised.
struct NoSignChangeError : NumericalError {
  using NumericalError::NumericalError;
};

// Short class name for reports (summary.json, logs).
const char* error_name(const std::exception& e);

}  // namespace tunnellab
