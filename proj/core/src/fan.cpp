#include "gkz/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkz/cone.hpp"
#include "gkz/matrix.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

size_t Fan::ray_index(const IVec& r) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == r) return i;
  throw Error("ray not in fan: " + to_string(r));
}

namespace {

std::vector<IVec> cone_rays(const Fan& f, const std::vector<size_t>& cone) {
  std::vector<IVec> v;
  v.reserve(cone.size());
  for (size_t i : cone) {
    if (i >= f.rays.size()) throw Error("max cone references ray out of range");
    v.push_back(f.rays[i]);
  }
  return v;
}

}  // namespace

FanPredicates fan_predicates(const Fan& f) {
  FanPredicates pred;
  if (f.max_cones.empty() || f.rays.empty()) return pred;

  pred.simplicial = true;
  pred.smooth = true;
  bool all_full_dim = true;
  for (const auto& cone : f.max_cones) {
    auto rays = cone_rays(f, cone);
    size_t r = rank(IntMatrix::from_rows(rays));
    if (r < f.dim) all_full_dim = false;
    if (cone.size() != f.dim || r != f.dim) {
      pred.simplicial = false;
      pred.smooth = false;
      continue;
    }
    if (abs(determinant(IntMatrix::from_rows(rays))) != 1) pred.smooth = false;
  }

  if (!all_full_dim) return pred;

  // ridge = maximal-cone facet, identified by the set of fan rays lying on it
  std::map<std::vector<size_t>, std::vector<size_t>> ridge_cones;
  for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    auto rays = cone_rays(f, f.max_cones[ci]);
    ConeH facets = cone_facets(ConeV{f.dim, rays});
    for (const auto& h : facets.normals) {
      std::vector<size_t> on;
      for (size_t i : f.max_cones[ci])
        if (dot(h, f.rays[i]) == 0) on.push_back(i);
      std::sort(on.begin(), on.end());
      ridge_cones[on].push_back(ci);
    }
  }
  bool ridges_ok = true;
  for (const auto& [ridge, cones] : ridge_cones)
    if (cones.size() != 2) ridges_ok = false;
  if (!ridges_ok) return pred;

  // connectivity of the adjacency graph
  std::vector<std::set<size_t>> adj(f.max_cones.size());
  for (const auto& [ridge, cones] : ridge_cones) {
    adj[cones[0]].insert(cones[1]);
    adj[cones[1]].insert(cones[0]);
  }
  std::vector<bool> seen(f.max_cones.size(), false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    size_t c = stack.back();
    stack.pop_back();
    for (size_t d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        ++count;
        stack.push_back(d);
      }
  }
  pred.complete = (count == f.max_cones.size());
  return pred;
}

Fan normal_fan(const LatticePolytope& p) {
  const auto& facets = p.facet_description();
  Fan f;
  f.dim = p.dim();
  for (const auto& fc : facets) f.rays.push_back(fc.normal);
  for (const auto& v : p.vertices()) {
    std::vector<size_t> cone;
    for (size_t i = 0; i < facets.size(); ++i)
      if (dot(facets[i].normal, v) == -facets[i].offset) cone.push_back(i);
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(cone);
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

Fan face_fan(const LatticePolytope& p) {
  if (!p.has_interior_origin()) throw Error("face_fan: 0 is not an interior point");
  Fan f;
  f.dim = p.dim();
  for (const auto& v : p.vertices()) f.rays.push_back(primitive(v));
  const auto& facets = p.facet_description();
  for (const auto& fc : facets) {
    std::vector<size_t> cone;
    for (size_t i = 0; i < p.vertices().size(); ++i)
      if (dot(fc.normal, p.vertices()[i]) == -fc.offset) cone.push_back(i);
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(cone);
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

ToricDivisor anticanonical_divisor(const Fan& f) {
  return ToricDivisor{IVec(f.rays.size(), Int(1))};
}

LatticePolytope divisor_polytope(const Fan& f, const ToricDivisor& d) {
  if (d.coeffs.size() != f.rays.size()) throw Error("divisor_polytope: coefficient count mismatch");
  size_t n = f.dim;
  // bounded iff the rays positively span R^n
  ConeH support = cone_facets(ConeV{n, f.rays});
  if (rank(IntMatrix::from_rows(f.rays)) < n || !support.normals.empty())
    throw Error("divisor_polytope: unbounded result (fan is not complete)");

  std::vector<QVec> candidates;
  // basic solutions: every vertex is the intersection of n facet hyperplanes
  std::vector<std::vector<size_t>> subsets;
  {
    std::vector<size_t> cur(n);
    for (size_t i = 0; i < n; ++i) cur[i] = i;
    if (f.rays.size() >= n)
      while (true) {
        subsets.push_back(cur);
        size_t i = n;
        bool done = false;
        while (i > 0) {
          --i;
          if (cur[i] != i + f.rays.size() - n) break;
          if (i == 0) done = true;
        }
        if (done) break;
        ++cur[i];
        for (size_t j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
      }
  }
  for (const auto& sub : subsets) {
    IntMatrix m(n, n);
    QVec b(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) m.at(i, j) = f.rays[sub[i]][j];
      b[i] = Rat(-d.coeffs[sub[i]]);
    }
    if (determinant(m) == 0) continue;
    QVec x = solve_rational(m, b);
    bool feasible = true;
    for (size_t i = 0; i < f.rays.size() && feasible; ++i)
      if (dot(f.rays[i], x) < Rat(-d.coeffs[i])) feasible = false;
    if (feasible) candidates.push_back(x);
  }
  if (candidates.empty()) throw Error("divisor_polytope: empty polytope");
  std::vector<IVec> verts;
  std::set<IVec> seen;
  for (const auto& x : candidates) {
    if (!is_integral(x)) {
      std::string s;
      for (const auto& c : x) s += (s.empty() ? "" : ",") + c.get_str();
      throw Error("divisor_polytope: non-lattice vertex (" + s + ")");
    }
    IVec v = to_integral(x);
    if (seen.insert(v).second) verts.push_back(v);
  }
  return LatticePolytope::from_points(n, std::move(verts));
}

CartierData cartier_data(const Fan& f, const ToricDivisor& d) {
  if (d.coeffs.size() != f.rays.size()) throw Error("cartier_data: coefficient count mismatch");
  CartierData cd;
  for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const auto& cone = f.max_cones[ci];
    if (cone.size() != f.dim)
      throw Error("cartier_data: maximal cone #" + std::to_string(ci) + " is not simplicial full-dimensional");
    IntMatrix m(f.dim, f.dim);
    QVec b(f.dim);
    for (size_t i = 0; i < f.dim; ++i) {
      for (size_t j = 0; j < f.dim; ++j) m.at(i, j) = f.rays[cone[i]][j];
      b[i] = Rat(-d.coeffs[cone[i]]);
    }
    QVec x = solve_rational(m, b);
    if (!is_integral(x)) throw Error("not Cartier at cone #" + std::to_string(ci));
    cd.per_cone.push_back(to_integral(x));
  }
  return cd;
}

bool is_nef(const Fan& f, const ToricDivisor& d) {
  CartierData cd = cartier_data(f, d);
  for (const auto& m : cd.per_cone)
    for (size_t i = 0; i < f.rays.size(); ++i)
      if (dot(m, f.rays[i]) < -d.coeffs[i]) return false;
  return true;
}

Fan mpcp_fan(const LatticePolytope& delta, InsertionOrder order, unsigned long seed,
             const std::vector<IVec>* preferred_rays) {
  if (!delta.is_reflexive()) throw Error("mpcp_fan: polytope is not reflexive");
  LatticePolytope dual = delta.dual_polytope();
  std::vector<IVec> rays;
  for (const auto& p : dual.lattice_points())
    if (!is_zero(p)) rays.push_back(p);

  if (preferred_rays) {
    std::set<IVec> a(rays.begin(), rays.end()), b(preferred_rays->begin(), preferred_rays->end());
    if (a != b) throw Error("mpcp_fan: preferred ray order is not a permutation of the dual's lattice points");
    rays = *preferred_rays;
  }

  Fan f;
  f.dim = delta.dim();
  f.rays = rays;

  for (const auto& facet : dual.facet_description()) {
    std::vector<size_t> on;
    for (size_t i = 0; i < rays.size(); ++i)
      if (dot(facet.normal, rays[i]) == -facet.offset) on.push_back(i);
    std::vector<IVec> pts;
    for (size_t i : on) pts.push_back(rays[i]);
    auto coords = affine_lattice_coordinates(pts);
    if (coords[0].empty()) {
      // zero-dimensional facet (dim 1 ambient): the ray itself is the cone
      f.max_cones.push_back({on[0]});
      continue;
    }
    std::vector<size_t> ins;
    switch (order) {
      case InsertionOrder::Lex: ins = lex_insertion_order(pts); break;
      case InsertionOrder::RevLex: ins = reverse_lex_insertion_order(pts); break;
      case InsertionOrder::Seeded: ins = seeded_insertion_order(pts, seed); break;
    }
    for (const auto& simplex : placing_triangulation(coords, ins)) {
      std::vector<size_t> cone;
      for (size_t local : simplex) cone.push_back(on[local]);
      std::sort(cone.begin(), cone.end());
      f.max_cones.push_back(cone);
    }
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

}  // namespace gkz
