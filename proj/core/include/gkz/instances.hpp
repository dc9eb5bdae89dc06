#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkz/nef_partition.hpp"

namespace gkz {

/// Declarative description of a problem instance: either a fan with ray-index
/// parts, or a dual polytope with the parts given as groups of its nonzero
/// lattice points (the fan is then the canonical MPCP refinement, with rays
/// indexed in the order the groups list them).
struct InstanceSpec {
  std::string name;
  std::optional<Fan> fan;
  std::vector<std::vector<size_t>> parts;
  std::optional<LatticePolytope> delta_dual;
  std::vector<std::vector<IVec>> parts_points;
  long degmax = -1;  // -1: use the default rule
  unsigned long seed = 1;
};

std::vector<std::string> builtin_instance_names();
bool is_builtin_instance(const std::string& name);
InstanceSpec builtin_instance(const std::string& name);

/// Builds and validates the nef-partition the instance describes.
NefPartitionData realize_instance(const InstanceSpec& spec);

/// degmax from the instance, defaulting to 4 for torus dimension <= 2 and 2
/// otherwise.
long effective_degmax(const InstanceSpec& spec, const NefPartitionData& npd);

}  // namespace gkz
