#pragma once

#include <vector>

#include "gkz/polytope.hpp"

namespace gkz {

/// Rational polyhedral fan given by its rays (primitive integer vectors) and
/// maximal cones (sets of ray indices).
struct Fan {
  size_t dim = 0;
  std::vector<IVec> rays;
  std::vector<std::vector<size_t>> max_cones;

  size_t ray_index(const IVec& r) const;
};

struct FanPredicates {
  bool complete = false;
  bool simplicial = false;
  bool smooth = false;
};

/// Torus-invariant divisor sum a_rho D_rho, one coefficient per fan ray.
struct ToricDivisor {
  IVec coeffs;
};

/// Cartier data {m_sigma}: one lattice vector per maximal cone, satisfying
/// <m_sigma, rho> = -a_rho on the rays of sigma.
struct CartierData {
  std::vector<IVec> per_cone;
};

/// complete: every ridge of every maximal cone is shared by exactly two
/// maximal cones and the adjacency graph is connected (all cones full-dim).
/// simplicial: every maximal cone has exactly dim independent rays.
/// smooth: simplicial with |det| = 1 on every maximal cone.
FanPredicates fan_predicates(const Fan& f);

/// Inner-normal fan: one maximal cone per vertex, spanned by the normals of
/// the facets through that vertex. Requires P full-dimensional.
Fan normal_fan(const LatticePolytope& p);

/// Cones over the proper faces of P. Requires 0 in the interior.
Fan face_fan(const LatticePolytope& p);

ToricDivisor anticanonical_divisor(const Fan& f);

/// { m : <m, rho> >= -a_rho for all rays }, by exact basic-solution
/// enumeration. Requires the result to be bounded (complete fan) and a
/// lattice polytope.
LatticePolytope divisor_polytope(const Fan& f, const ToricDivisor& d);

CartierData cartier_data(const Fan& f, const ToricDivisor& d);

/// Support-function convexity test: <m_sigma, rho> >= -a_rho globally.
bool is_nef(const Fan& f, const ToricDivisor& d);

enum class InsertionOrder { Lex, RevLex, Seeded };

/// MPCP refinement of the normal fan of a reflexive polytope: rays are all
/// nonzero lattice points of the dual polytope, and every facet of the dual
/// is refined by a placing triangulation of its lattice points. Smoothness is
/// NOT required for return; callers check fan_predicates.
///
/// `preferred_rays`, when given, must be a permutation of the computed ray
/// set and fixes the ray indexing (the triangulation itself stays canonical).
Fan mpcp_fan(const LatticePolytope& delta, InsertionOrder order = InsertionOrder::Lex,
             unsigned long seed = 0, const std::vector<IVec>* preferred_rays = nullptr);

}  // namespace gkz
