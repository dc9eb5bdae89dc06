#pragma once

#include <map>
#include <vector>

#include "gkz/gkz_system.hpp"
#include "gkz/nef_partition.hpp"

namespace gkz {

/// A cohomology class in basis coordinates (exact rationals).
using CohomClass = QVec;

/// An integral curve-class lift: a vector in ker(A) indexed by the (i,j)
/// columns, with l_{i,0} = -sum_{j>=1} l_{i,j}.
using CurveClassLift = IVec;

/// H^*(X, Q) of a smooth complete simplicial toric variety, presented as the
/// quotient of Q[x_rho] by the Stanley-Reisner ideal and the linear relations
/// sum_rho <m, rho> x_rho. The basis consists of square-free face monomials
/// surviving degree-by-degree Gaussian elimination, graded by degree; the
/// dimension equals the number of maximal cones.
class CohomRing {
 public:
  static CohomRing build(const Fan& fan);

  size_t dimension() const { return basis_.size(); }
  size_t top_degree() const { return fan_.dim; }
  const Fan& fan() const { return fan_; }

  /// Basis face monomials as sorted ray-index tuples (degree = tuple size).
  const std::vector<std::vector<size_t>>& basis() const { return basis_; }
  size_t basis_degree(size_t b) const { return basis_[b].size(); }
  std::string basis_label(size_t b) const;

  CohomClass zero() const { return CohomClass(basis_.size(), Rat(0)); }
  CohomClass unit() const;
  CohomClass divisor_class(size_t ray) const;

  CohomClass mul(const CohomClass& a, const CohomClass& b) const;
  CohomClass add(const CohomClass& a, const CohomClass& b) const;
  CohomClass scale(const Rat& c, const CohomClass& a) const;
  /// Product of the i-th and j-th basis elements, in basis coordinates.
  const CohomClass& table_entry(size_t i, size_t j) const { return table_[i][j]; }

  /// Least k with a^k = 0 (at most dim + 1 for degree >= 1 classes).
  size_t nilpotency_order(const CohomClass& a) const;

  bool is_zero_class(const CohomClass& a) const;

  /// Reduction of an arbitrary ray-index monomial (repeats allowed).
  CohomClass reduce_monomial(const std::vector<size_t>& rays) const;

 private:
  Fan fan_;
  std::vector<std::vector<size_t>> basis_;
  std::map<std::vector<size_t>, CohomClass> face_coords_;
  std::vector<std::vector<CohomClass>> table_;

  std::map<std::vector<size_t>, Rat> ray_times_face(size_t ray, const std::vector<size_t>& face) const;
  friend CohomRing build_ring_impl(const Fan& fan);
};

/// D_{i,0} = -sum_{j>=1} D_{i,j}; its negative is the class of the nef E_i.
CohomClass part_zero_class(const CohomRing& ring, const NefPartitionData& npd, size_t part);

/// Wall curve classes, lifted to ker(A): for every ridge shared by two
/// maximal cones, the primitive relation on the n+1 involved rays with
/// positive coefficients on the two off-wall rays, extended by zeros and
/// closed up with l_{i,0} = -sum_j l_{i,j}. Deduplicated, sorted.
std::vector<CurveClassLift> mori_generators(const CohomRing& ring, const NefPartitionData& npd);

}  // namespace gkz
