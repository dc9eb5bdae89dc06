#pragma once

#include <vector>

#include "gkz/matrix.hpp"
#include "gkz/numbers.hpp"

namespace gkz {

/// Cone given by generators (V-form): { sum c_i g_i : c_i >= 0 }.
struct ConeV {
  size_t dim = 0;
  std::vector<IVec> generators;
};

/// Cone given by inequalities (H-form): { v : <h, v> >= 0 for all h }.
struct ConeH {
  size_t dim = 0;
  std::vector<IVec> normals;
};

/// Irredundant primitive facet normals of cone(generators).
///
/// Supporting hyperplanes are enumerated over (dim-1)-subsets of generators:
/// a subset spanning a hyperplane contributes its normal when all generators
/// lie weakly on one side, and the normal is kept when the generators on the
/// hyperplane span dim-1 dimensions (a genuine facet). Exhaustive but exact;
/// intended for desk-scale generator counts.
ConeH cone_facets(const ConeV& c);

/// Extreme rays of an H-cone; the inverse enumeration of cone_facets.
/// Requires the cone to be pointed (no nonzero v with v and -v feasible).
ConeV cone_generators_from_facets(const ConeH& c);

bool cone_contains(const ConeH& c, const QVec& v);
bool cone_contains(const ConeH& c, const IVec& v);

/// Exact feasibility of { x >= 0 : a x = b } by phase-1 simplex with Bland's
/// rule (terminating, no cycling). Column count of `a` is the variable count.
bool lp_feasible(const std::vector<QVec>& a, const QVec& b);

/// Whether v lies in the cone generated by the given vectors (c >= 0 with
/// generators * c = v), via exact LP feasibility.
bool in_cone_hull(const std::vector<IVec>& generators, const IVec& v);

/// Whether p lies in the convex hull of the given points (adds sum c_i = 1).
bool in_convex_hull(const std::vector<IVec>& points, const QVec& p);

}  // namespace gkz
