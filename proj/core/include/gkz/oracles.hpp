#pragma once

#include <map>
#include <vector>

#include "gkz/gamma_jet.hpp"
#include "gkz/nef_partition.hpp"
#include "gkz/polytope.hpp"

namespace gkz {

/// One factor of the branch-divisor product: the section sum over the
/// lattice points of a Minkowski summand, with a formal coefficient per
/// exponent (the j = 0 slot carries the constant exponent 0).
struct LaurentSection {
  size_t part_index = 0;
  std::vector<IVec> exponents;  // exponents[0] must be the zero vector
};

std::vector<LaurentSection> sections_from_partition(const NefPartitionData& npd);

/// Constant-in-t coefficient of prod_k s_k^(-1/2), expanded binomially around
/// the constant terms and truncated at total degree degmax in the non-constant
/// coefficients. Keys are kernel points in the (i,j) column layout (the j = 0
/// entries close each block); values are exact rationals. This is the
/// torus-cycle period series, computed with no reference to Gamma-jets or
/// kernel enumeration.
std::map<IVec, Rat> binomial_period(const std::vector<LaurentSection>& sections, long degmax);

/// Normalized volume via a placing triangulation of the vertex set in a
/// seeded random insertion order; an independent path to normalized_volume.
Int independent_volume(const LatticePolytope& p, unsigned long seed);

/// 50-digit (or better) numeric values of the formal constants, as exact
/// rationals read back from MPFR.
Rat numeric_const_gamma(long digits);
Rat numeric_const_log2(long digits);
Rat numeric_const_zeta(unsigned k, long digits);

/// Finite-difference jet of 1/Gamma(a + eps*u) (or Gamma(a + eps*u)/Gamma(1/2)
/// when half_ratio) in u at 0: returns estimates of the N^k coefficients,
/// k < ord. Computed at high MPFR precision; retries once at quadruple
/// precision and throws if the two runs disagree.
std::vector<Rat> numeric_gamma_jet(const Rat& a, size_t ord, const Rat& eps, bool half_ratio,
                                   long digits);

/// The symbolic jet with its constants substituted by `digits`-digit values.
std::vector<Rat> jet_numeric_values(const Jet& jet, long digits);

}  // namespace gkz
