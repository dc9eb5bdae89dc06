#include "gkz/polytope.hpp"

#include <algorithm>
#include <map>

#include "gkz/cone.hpp"
#include "gkz/matrix.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

namespace {

template <typename F>
void for_each_subset(size_t n, size_t k, F&& fn) {
  if (k > n || k == 0) return;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

size_t affine_rank(const std::vector<IVec>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IVec> rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  return rank(IntMatrix::from_rows(rows));
}

// Facet enumeration over d-subsets of the point set. Each affinely
// independent d-subset spans a candidate hyperplane; it is a facet when all
// points lie weakly on one side and the points on it have affine rank d-1.
std::vector<Facet> facets_of_points(size_t d, const std::vector<IVec>& pts) {
  std::map<std::pair<IVec, Int>, bool> seen;
  std::vector<Facet> facets;
  for_each_subset(pts.size(), d, [&](const std::vector<size_t>& idx) {
    std::vector<IVec> rows;
    for (size_t i = 1; i < d; ++i) rows.push_back(sub(pts[idx[i]], pts[idx[0]]));
    IVec h;
    if (d == 1) {
      h = IVec{Int(1)};
    } else {
      auto ker = integer_kernel_basis(IntMatrix::from_rows(rows));
      if (ker.size() != 1) return;
      h = primitive(ker[0]);
    }
    Int c = dot(h, pts[idx[0]]);
    int side = 0;
    std::vector<IVec> on;
    for (const auto& p : pts) {
      Int s = dot(h, p) - c;
      if (s == 0) {
        on.push_back(p);
        continue;
      }
      int sg = s > 0 ? 1 : -1;
      if (side == 0)
        side = sg;
      else if (side != sg) {
        side = 2;
        break;
      }
    }
    if (side == 2 || side == 0) return;
    if (side < 0) {
      for (auto& x : h) x = -x;
      c = -c;
    }
    // inner form <h, u> >= c, i.e. offset = -c
    if (affine_rank(on) != d - 1) return;
    if (seen.emplace(std::make_pair(h, c), true).second) facets.push_back(Facet{h, -c});
  });
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return a.normal != b.normal ? lex_less(a.normal, b.normal) : a.offset < b.offset;
  });
  return facets;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(size_t dim, std::vector<IVec> points) {
  if (dim == 0) throw Error("LatticePolytope: dimension must be positive");
  for (const auto& p : points)
    if (p.size() != dim) throw Error("LatticePolytope: point dimension mismatch");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw Error("LatticePolytope: no points");

  LatticePolytope poly;
  poly.dim_ = dim;
  if (points.size() == 1 || affine_rank(points) < dim) {
    // lower-dimensional: keep extreme points only; facet_description refuses later
    std::vector<IVec> verts;
    for (size_t i = 0; i < points.size(); ++i) {
      std::vector<IVec> others;
      for (size_t j = 0; j < points.size(); ++j)
        if (j != i) others.push_back(points[j]);
      if (others.empty() || !in_convex_hull(others, to_rational(points[i])))
        verts.push_back(points[i]);
    }
    poly.vertices_ = std::move(verts);
    return poly;
  }

  auto facets = facets_of_points(dim, points);
  // a point is a vertex iff its active facet normals span the ambient space
  std::vector<IVec> verts;
  for (const auto& p : points) {
    std::vector<IVec> active;
    for (const auto& f : facets)
      if (dot(f.normal, p) == -f.offset) active.push_back(f.normal);
    if (!active.empty() && rank(IntMatrix::from_rows(active)) == dim) verts.push_back(p);
  }
  poly.vertices_ = std::move(verts);
  poly.facets_ = std::move(facets);
  return poly;
}

const std::vector<Facet>& LatticePolytope::facet_description() const {
  if (!facets_) {
    size_t ar = affine_dim();
    if (ar < dim_)
      throw Error("facet_description: polytope is not full-dimensional (affine hull has dimension " +
                  std::to_string(ar) + " in R^" + std::to_string(dim_) + ")");
    facets_ = facets_of_points(dim_, vertices_);
  }
  return *facets_;
}

size_t LatticePolytope::affine_dim() const { return affine_rank(vertices_); }

bool LatticePolytope::has_interior_origin() const {
  for (const auto& f : facet_description())
    if (f.offset <= 0) return false;
  return true;
}

std::vector<QVec> LatticePolytope::dual_vertices_rational() const {
  if (!has_interior_origin()) throw Error("dual polytope: 0 is not an interior point");
  std::vector<QVec> verts;
  for (const auto& f : facet_description()) {
    QVec v(dim_);
    for (size_t i = 0; i < dim_; ++i) v[i] = Rat(f.normal[i]) / Rat(f.offset);
    verts.push_back(std::move(v));
  }
  return verts;
}

LatticePolytope LatticePolytope::dual_polytope() const {
  std::vector<IVec> verts;
  for (const auto& v : dual_vertices_rational()) {
    if (!is_integral(v)) throw Error("dual polytope is not a lattice polytope");
    verts.push_back(to_integral(v));
  }
  return from_points(dim_, std::move(verts));
}

bool LatticePolytope::is_reflexive() const {
  if (!has_interior_origin()) return false;
  for (const auto& f : facet_description())
    if (f.offset != 1) return false;
  return true;
}

std::vector<IVec> LatticePolytope::lattice_points() const {
  bool full_dim = affine_dim() == dim_;
  const std::vector<Facet>* facets = full_dim ? &facet_description() : nullptr;
  IVec lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_)
    for (size_t i = 0; i < dim_; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  std::vector<IVec> out;
  IVec p = lo;
  while (true) {
    bool inside;
    if (facets) {
      inside = true;
      for (const auto& f : *facets)
        if (dot(f.normal, p) < -f.offset) {
          inside = false;
          break;
        }
    } else {
      inside = in_convex_hull(vertices_, to_rational(p));
    }
    if (inside) out.push_back(p);
    size_t i = dim_;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (size_t j = i + 1; j < dim_; ++j) p[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

bool LatticePolytope::contains(const IVec& p) const { return contains(to_rational(p)); }

bool LatticePolytope::contains(const QVec& p) const {
  if (affine_dim() < dim_) return in_convex_hull(vertices_, p);
  for (const auto& f : facet_description())
    if (dot(f.normal, p) < Rat(-f.offset)) return false;
  return true;
}

Int LatticePolytope::normalized_volume() const {
  const auto& facets = facet_description();
  const IVec& apex = vertices_[0];  // lex-min vertex
  Int vol = 0;
  for (const auto& f : facets) {
    if (dot(f.normal, apex) == -f.offset) continue;  // apex on facet: flat pyramid
    std::vector<IVec> fverts;
    for (const auto& v : vertices_)
      if (dot(f.normal, v) == -f.offset) fverts.push_back(v);
    std::vector<IVec> coords = affine_lattice_coordinates(fverts);
    auto simplices = placing_triangulation(coords, lex_insertion_order(coords));
    for (const auto& s : simplices) {
      std::vector<IVec> rows;
      for (size_t i : s) rows.push_back(sub(fverts[i], apex));
      Int d = determinant(IntMatrix::from_rows(rows));
      vol += abs(d);
    }
  }
  return vol;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim()) throw Error("minkowski_sum: dimension mismatch");
  std::vector<IVec> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return LatticePolytope::from_points(p.dim(), std::move(sums));
}

}  // namespace gkz
