#pragma once

#include <optional>
#include <vector>

#include "gkz/numbers.hpp"

namespace gkz {

/// One half-space of an H-description: { u : <normal, u> >= -offset },
/// with the normal primitive and pointing inward.
struct Facet {
  IVec normal;
  Int offset;
};

/// Full-dimensional lattice polytope, stored by its exact vertex set with a
/// lazily computed irredundant facet description.
class LatticePolytope {
 public:
  LatticePolytope() : dim_(0) {}

  /// Convex hull of the given lattice points; non-extreme points are dropped.
  static LatticePolytope from_points(size_t dim, std::vector<IVec> points);

  size_t dim() const { return dim_; }
  const std::vector<IVec>& vertices() const { return vertices_; }

  /// Irredundant H-description. Requires the polytope to be full-dimensional;
  /// otherwise throws, reporting the affine hull dimension.
  const std::vector<Facet>& facet_description() const;

  /// Affine dimension of the vertex set.
  size_t affine_dim() const;

  /// Whether 0 is an interior point (every facet offset strictly positive).
  bool has_interior_origin() const;

  /// Polar dual vertices, one per facet: normal / offset. Exact rationals.
  std::vector<QVec> dual_vertices_rational() const;

  /// Polar dual polytope. Requires 0 interior; throws when the dual is not a
  /// lattice polytope (use is_reflexive / dual_vertices_rational to probe).
  LatticePolytope dual_polytope() const;

  /// All facet offsets equal to 1 (equivalently: the dual has lattice vertices).
  bool is_reflexive() const;

  /// Z^dim ∩ P in lexicographic order, by bounding-box scan with facet filter.
  std::vector<IVec> lattice_points() const;

  bool contains(const IVec& p) const;
  bool contains(const QVec& p) const;

  /// dim()! times the Euclidean volume, exact. Triangulates every facet not
  /// containing the lexicographically smallest vertex and sums pyramid
  /// determinants over that apex.
  Int normalized_volume() const;

  bool operator==(const LatticePolytope& rhs) const {
    return dim_ == rhs.dim_ && vertices_ == rhs.vertices_;
  }

 private:
  size_t dim_;
  std::vector<IVec> vertices_;              // sorted lexicographically
  mutable std::optional<std::vector<Facet>> facets_;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

}  // namespace gkz
