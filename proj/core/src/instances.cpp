#include "gkz/instances.hpp"

#include <algorithm>

namespace gkz {

namespace {

IVec iv(std::initializer_list<long> v) {
  IVec r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

InstanceSpec p1_elliptic() {
  InstanceSpec spec;
  spec.name = "p1-elliptic";
  spec.delta_dual = LatticePolytope::from_points(1, {iv({-1}), iv({1})});
  spec.parts_points = {{iv({1}), iv({-1})}};
  return spec;
}

InstanceSpec p3_8planes() {
  InstanceSpec spec;
  spec.name = "p3-8planes";
  spec.parts_points = {
      {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})},
      {iv({-1, 0, 0}), iv({-1, 1, 0}), iv({-1, 0, 1})},
      {iv({0, -1, 0}), iv({1, -1, 0}), iv({0, -1, 1})},
      {iv({0, 0, -1}), iv({1, 0, -1}), iv({0, 1, -1})},
  };
  std::vector<IVec> pts;
  for (const auto& grp : spec.parts_points)
    for (const auto& v : grp) pts.push_back(v);
  spec.delta_dual = LatticePolytope::from_points(3, pts);
  return spec;
}

}  // namespace

std::vector<std::string> builtin_instance_names() { return {"p1-elliptic", "p3-8planes"}; }

bool is_builtin_instance(const std::string& name) {
  auto names = builtin_instance_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

InstanceSpec builtin_instance(const std::string& name) {
  if (name == "p1-elliptic") return p1_elliptic();
  if (name == "p3-8planes") return p3_8planes();
  throw Error("unknown built-in instance: " + name);
}

NefPartitionData realize_instance(const InstanceSpec& spec) {
  if (spec.fan) {
    if (spec.parts.empty()) throw Error("instance: a fan input requires ray-index parts");
    return validate_nef_partition(*spec.fan, spec.parts);
  }
  if (!spec.delta_dual) throw Error("instance: needs either a fan or a dual polytope");
  if (spec.parts_points.empty()) throw Error("instance: a polytope input requires parts_points");

  // preferred ray order: the groups in order, then any remaining lattice points
  std::vector<IVec> preferred;
  for (const auto& grp : spec.parts_points)
    for (const auto& v : grp) preferred.push_back(v);
  LatticePolytope delta = spec.delta_dual->dual_polytope();
  {
    std::vector<IVec> rest;
    std::vector<IVec> known = preferred;
    std::sort(known.begin(), known.end(), lex_less);
    for (const auto& p : spec.delta_dual->lattice_points()) {
      if (is_zero(p)) continue;
      if (!std::binary_search(known.begin(), known.end(), p, lex_less)) rest.push_back(p);
    }
    preferred.insert(preferred.end(), rest.begin(), rest.end());
  }
  Fan fan = mpcp_fan(delta, InsertionOrder::Lex, 0, &preferred);

  std::vector<std::vector<size_t>> parts;
  size_t idx = 0;
  for (const auto& grp : spec.parts_points) {
    std::vector<size_t> part;
    for (size_t t = 0; t < grp.size(); ++t) part.push_back(idx++);
    parts.push_back(std::move(part));
  }
  if (idx != fan.rays.size())
    throw Error("instance: parts_points do not cover the dual polytope's nonzero lattice points");
  return validate_nef_partition(fan, parts);
}

long effective_degmax(const InstanceSpec& spec, const NefPartitionData& npd) {
  if (spec.degmax >= 0) return spec.degmax;
  return npd.fan.dim <= 2 ? 4 : 2;
}

}  // namespace gkz
