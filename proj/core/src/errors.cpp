#include "tunnellab/errors.hpp"

namespace tunnellab {

const char* error_name(const std::exception& e) {
  if (dynamic_cast<const SingularityError*>(&e)) return "SingularityError";
  if (dynamic_cast<const BranchTrackingError*>(&e)) return "BranchTrackingError";
  if (dynamic_cast<const SaddleNotFoundError*>(&e)) return "SaddleNotFoundError";
  if (dynamic_cast<const NoRootError*>(&e)) return "NoRootError";
  if (dynamic_cast<const NoBarrierError*>(&e)) return "NoBarrierError";
  if (dynamic_cast<const ShootingDivergedError*>(&e)) return "ShootingDivergedError";
  if (dynamic_cast<const TopologyError*>(&e)) return "TopologyError";
  if (dynamic_cast<const MinimizationStalledError*>(&e)) return "MinimizationStalledError";
  if (dynamic_cast<const NoRootsError*>(&e)) return "NoRootsError";
  if (dynamic_cast<const RootOrderError*>(&e)) return "RootOrderError";
  if (dynamic_cast<const NoSignChangeError*>(&e)) return "NoSignChangeError";
  if (dynamic_cast<const NumericalError*>(&e)) return "NumericalError";
  return "error";
}

}  // namespace tunnellab
