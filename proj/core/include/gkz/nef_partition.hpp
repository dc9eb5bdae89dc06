#pragma once

#include <optional>
#include <vector>

#include "gkz/fan.hpp"

namespace gkz {

/// A validated nef-partition on an MPCP fan: the ray partition J_1 ⊔ … ⊔ J_r,
/// the part divisors E_i with their Cartier data, the divisor polytopes Δ_i,
/// the summand polytopes ∇_i = Conv(J_i ∪ {0}), and the ambient reflexive
/// pair Δ / Δ^∨.
struct NefPartitionData {
  Fan fan;
  std::vector<std::vector<size_t>> parts;
  std::vector<ToricDivisor> divisors;
  std::vector<CartierData> cartier;
  std::vector<LatticePolytope> delta_parts;  // Δ_i
  std::vector<LatticePolytope> nabla_parts;  // ∇_i
  LatticePolytope delta;
  LatticePolytope delta_dual;
  bool fan_smooth = false;             // the Assumption regime
  bool rays_generate_lattice = false;  // the weakened regime

  size_t r() const { return parts.size(); }
  size_t part_size(size_t i) const { return parts[i].size(); }
};

/// Checks every nef-partition invariant and assembles the derived data:
/// parts partition the rays, each E_i is Cartier and nef, ΣΔ_i = Δ, Δ is
/// reflexive, the fan is a refinement of F(Δ^∨) with rays Δ^∨∩N∖{0}, and
/// Conv(∇_1,…,∇_r) = Δ^∨.
NefPartitionData validate_nef_partition(const Fan& f, const std::vector<std::vector<size_t>>& parts);

/// Batyrev–Borisov dual: builds ∇ = Σ∇_i, takes the canonical MPCP fan on
/// the dual side, and partitions its rays by membership in the Δ_i. The
/// result is itself validated; part order matches the input.
NefPartitionData dual_nef_partition(const NefPartitionData& npd);

struct LatticeCoverResult {
  bool covered = false;
  std::optional<IVec> witness;  // an uncovered point, when !covered
};

/// N ∩ Δ^∨ = ∪_i (∇_i ∩ N).
LatticeCoverResult check_lattice_cover(const NefPartitionData& npd);

/// The part i whose rays contain every vertex of the minimal face of Δ^∨
/// containing ν. Vertices of Δ^∨ return the part that owns them. Throws for
/// interior points, points outside Δ^∨, and (invalid) data where the minimal
/// face's vertices cross parts.
size_t minimal_face_part(const NefPartitionData& npd, const IVec& nu);

}  // namespace gkz
