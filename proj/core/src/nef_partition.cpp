#include "gkz/nef_partition.hpp"

#include <algorithm>
#include <set>

#include "gkz/matrix.hpp"

namespace gkz {

NefPartitionData validate_nef_partition(const Fan& f, const std::vector<std::vector<size_t>>& parts) {
  NefPartitionData npd;
  npd.fan = f;
  npd.parts = parts;

  auto pred = fan_predicates(f);
  if (!pred.complete) throw Error("validate_nef_partition: fan is not complete");
  if (!pred.simplicial) throw Error("validate_nef_partition: fan is not simplicial");
  npd.fan_smooth = pred.smooth;
  npd.rays_generate_lattice = generates_full_lattice(IntMatrix::from_columns(f.rays));

  std::vector<int> owner(f.rays.size(), -1);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error("validate_nef_partition: empty part " + std::to_string(i + 1));
    for (size_t idx : parts[i]) {
      if (idx >= f.rays.size()) throw Error("validate_nef_partition: ray index out of range");
      if (owner[idx] != -1)
        throw Error("validate_nef_partition: ray " + to_string(f.rays[idx]) + " appears in two parts");
      owner[idx] = (int)i;
    }
  }
  for (size_t idx = 0; idx < f.rays.size(); ++idx)
    if (owner[idx] == -1)
      throw Error("partition not exhaustive: ray " + to_string(f.rays[idx]) + " belongs to no part");

  for (size_t i = 0; i < parts.size(); ++i) {
    ToricDivisor e{IVec(f.rays.size(), Int(0))};
    for (size_t idx : parts[i]) e.coeffs[idx] = 1;
    CartierData cd;
    try {
      cd = cartier_data(f, e);
    } catch (const Error& err) {
      throw Error("E_" + std::to_string(i + 1) + " not Cartier: " + err.what());
    }
    bool nef = true;
    IVec witness_ray;
    for (const auto& m : cd.per_cone) {
      for (size_t ri = 0; ri < f.rays.size() && nef; ++ri)
        if (dot(m, f.rays[ri]) < -e.coeffs[ri]) {
          nef = false;
          witness_ray = f.rays[ri];
        }
      if (!nef) break;
    }
    if (!nef)
      throw Error("E_" + std::to_string(i + 1) + " not nef: support function fails convexity at ray " +
                  to_string(witness_ray));
    npd.divisors.push_back(std::move(e));
    npd.cartier.push_back(std::move(cd));
    npd.delta_parts.push_back(divisor_polytope(f, npd.divisors.back()));
  }

  npd.delta = divisor_polytope(f, anticanonical_divisor(f));
  LatticePolytope sum = npd.delta_parts[0];
  for (size_t i = 1; i < npd.delta_parts.size(); ++i) sum = minkowski_sum(sum, npd.delta_parts[i]);
  if (!(sum == npd.delta))
    throw Error("validate_nef_partition: Minkowski sum of the divisor polytopes is not the anticanonical polytope");
  if (!npd.delta.is_reflexive())
    throw Error("validate_nef_partition: anticanonical polytope is not reflexive");
  npd.delta_dual = npd.delta.dual_polytope();

  std::set<IVec> ray_set(f.rays.begin(), f.rays.end());
  std::set<IVec> point_set;
  for (const auto& p : npd.delta_dual.lattice_points())
    if (!is_zero(p)) point_set.insert(p);
  if (ray_set != point_set)
    throw Error("validate_nef_partition: fan rays are not the nonzero lattice points of the dual polytope");

  // refinement of F(Δ^∨): every maximal cone sits inside one facet cone
  for (const auto& cone : f.max_cones) {
    bool inside_some = false;
    for (const auto& facet : npd.delta_dual.facet_description()) {
      bool on = true;
      for (size_t i : cone)
        if (dot(facet.normal, f.rays[i]) != -facet.offset) on = false;
      if (on) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some)
      throw Error("validate_nef_partition: fan does not refine the face fan of the dual polytope");
  }

  IVec zero(f.dim, Int(0));
  std::vector<IVec> all_nabla_pts = {zero};
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<IVec> pts = {zero};
    for (size_t idx : parts[i]) pts.push_back(f.rays[idx]);
    npd.nabla_parts.push_back(LatticePolytope::from_points(f.dim, pts));
    for (size_t idx : parts[i]) all_nabla_pts.push_back(f.rays[idx]);
  }
  if (!(LatticePolytope::from_points(f.dim, all_nabla_pts) == npd.delta_dual))
    throw Error("validate_nef_partition: Conv(nabla_1,...,nabla_r) differs from the dual polytope");

  return npd;
}

NefPartitionData dual_nef_partition(const NefPartitionData& npd) {
  LatticePolytope nabla = npd.nabla_parts[0];
  for (size_t i = 1; i < npd.nabla_parts.size(); ++i) nabla = minkowski_sum(nabla, npd.nabla_parts[i]);
  if (!nabla.is_reflexive())
    throw Error("dual_nef_partition: Minkowski sum of the nabla summands is not reflexive");

  Fan dual_fan = mpcp_fan(nabla);
  std::vector<std::vector<size_t>> dual_parts(npd.r());
  for (size_t ri = 0; ri < dual_fan.rays.size(); ++ri) {
    int found = -1;
    for (size_t i = 0; i < npd.r(); ++i) {
      if (!npd.delta_parts[i].contains(dual_fan.rays[ri])) continue;
      if (found != -1)
        throw Error("dual_nef_partition: dual ray " + to_string(dual_fan.rays[ri]) +
                    " lies in two divisor polytopes");
      found = (int)i;
    }
    if (found == -1)
      throw Error("dual_nef_partition: dual ray " + to_string(dual_fan.rays[ri]) +
                  " lies in no divisor polytope");
    dual_parts[found].push_back(ri);
  }
  return validate_nef_partition(dual_fan, dual_parts);
}

LatticeCoverResult check_lattice_cover(const NefPartitionData& npd) {
  for (const auto& p : npd.delta_dual.lattice_points()) {
    bool covered = false;
    for (const auto& nab : npd.nabla_parts)
      if (nab.contains(p)) {
        covered = true;
        break;
      }
    if (!covered) return LatticeCoverResult{false, p};
  }
  return LatticeCoverResult{true, std::nullopt};
}

size_t minimal_face_part(const NefPartitionData& npd, const IVec& nu) {
  if (is_zero(nu)) throw Error("minimal_face_part: 0 is an interior point, not on a face");
  if (!npd.delta_dual.contains(nu))
    throw Error("minimal_face_part: point " + to_string(nu) + " is not in the dual polytope");

  std::vector<const Facet*> active;
  for (const auto& f : npd.delta_dual.facet_description())
    if (dot(f.normal, nu) == -f.offset) active.push_back(&f);
  if (active.empty())
    throw Error("minimal_face_part: point " + to_string(nu) + " is interior to the dual polytope");

  // vertices of the minimal face: on every facet through nu
  std::vector<IVec> face_verts;
  for (const auto& v : npd.delta_dual.vertices()) {
    bool on_all = true;
    for (const auto* f : active)
      if (dot(f->normal, v) != -f->offset) on_all = false;
    if (on_all) face_verts.push_back(v);
  }
  for (size_t i = 0; i < npd.r(); ++i) {
    std::set<IVec> part_rays;
    for (size_t idx : npd.parts[i]) part_rays.insert(npd.fan.rays[idx]);
    bool all_in = true;
    for (const auto& v : face_verts)
      if (!part_rays.count(v)) all_in = false;
    if (all_in) return i;
  }
  throw Error("minimal_face_part: no part contains all vertices of the minimal face of " + to_string(nu));
}

}  // namespace gkz
