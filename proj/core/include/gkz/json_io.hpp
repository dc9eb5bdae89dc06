#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gkz/instances.hpp"
#include "gkz/series.hpp"

namespace gkz {

using json = nlohmann::json;

json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j, const std::string& path);

json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j, const std::string& path);

json nef_partition_to_json(const NefPartitionData& npd);

InstanceSpec instance_from_json(const json& j);

json gkz_report_json(const GkzSystem& g, const NonResonanceCertificate& cert, const Int& rank);

json solutions_to_json(const SolutionBasis& sols);

std::string rat_str(const Rat& r);

}  // namespace gkz
