#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gkz/matrix.hpp"
#include "gkz/nef_partition.hpp"

namespace gkz {

/// The Cayley GKZ data of a nef-partition: the (r+n) x (r+p) matrix with
/// double-indexed columns mu_{i,j} = (e_i, rho_{i,j}) (rho_{i,0} = 0) and the
/// half-integer exponent beta = (-1/2,...,-1/2, 0,...,0).
struct GkzSystem {
  size_t r = 0;  // parts
  size_t n = 0;  // torus dimension
  IntMatrix a;
  QVec beta;
  std::vector<std::pair<size_t, size_t>> column_labels;  // (i, j), i >= 1, j >= 0
  std::vector<size_t> ray_column;  // fan ray index -> column index of its lift

  size_t cols() const { return a.cols(); }
  size_t rows() const { return a.rows(); }
  size_t column_of(size_t i, size_t j) const;
};

/// x_{i,j} d_{i,j} Euler operator row: sum_{(k,l)} coeff * x dx - constant.
struct EulerOperator {
  size_t index;  // row, 0-based
  IVec coeffs;
  Rat constant;
};

/// Box (binomial) operator d^{nu_plus} - d^{nu_minus} with A nu+ = A nu-.
struct BoxOperator {
  IVec nu_plus;
  IVec nu_minus;
};

struct FacetPairing {
  IVec normal;
  Rat pairing;  // <normal, beta>
  bool integral;
};

struct NonResonanceCertificate {
  bool non_resonant = false;
  std::vector<FacetPairing> pairings;
};

struct UnionConesReport {
  bool ok = false;
  Int cone_volume_sum;
  Int hull_volume;
  std::vector<std::string> failures;
};

/// Builds A and beta from a validated nef-partition. Requires the fan to be
/// smooth or at least lattice-generating (the weakened regime); verifies the
/// construction invariants (block rows, full lattice generation, homogeneity).
GkzSystem build_cayley_gkz(const NefPartitionData& npd);

std::vector<EulerOperator> euler_operators(const GkzSystem& g);

/// All box operators with |nu+|_1 <= degmax, each kernel vector listed once
/// (the lexicographically larger side is nu+).
std::vector<BoxOperator> box_operators_up_to(const GkzSystem& g, long degmax);

/// Primitive facet normals of R+A. Each must have the structural form
/// (e_j, m) with m integral; anything else throws "facet classification
/// violated".
std::vector<IVec> facet_normals_RA(const GkzSystem& g);

/// Pairs every primitive facet normal with beta. For a primitive normal h,
/// <h, beta> in Z is equivalent to beta in C*F + Z^(r+n) for the facet
/// hyperplane F: the columns of A generate the full lattice, so <h, Z^(r+n)>
/// = Z, and C*F = ker<h,.>. Non-resonant iff no pairing is an integer.
NonResonanceCertificate non_resonance_check(const GkzSystem& g);

/// Normalized volume of Conv(columns(A) ∪ {0}), cross-checked against the
/// number of maximal fan cones; throws "union-cones violated" on mismatch.
Int holonomic_rank(const GkzSystem& g, const NefPartitionData& npd);

/// Checks Conv(A ∪ {0}) = union of the cone simplices Poly(sigma-hat):
/// containment of every simplex vertex, the volume sum, sigma-hat inside
/// R+A, and every column of A inside some sigma-hat.
UnionConesReport verify_union_cones(const GkzSystem& g, const NefPartitionData& npd);

/// (-phi_1(u),...,-phi_r(u), u) for u in the given maximal cone, verified
/// against the sum of lifted ray generators.
QVec lift_to_cayley(const NefPartitionData& npd, size_t cone_index, const QVec& u);

}  // namespace gkz
