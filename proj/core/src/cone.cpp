#include "gkz/cone.hpp"

#include <algorithm>
#include <map>

namespace gkz {

namespace {

// All k-subsets of {0,...,n-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(size_t n, size_t k, F&& fn) {
  if (k > n) return;
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

// Primitive normal of the hyperplane spanned by the chosen vectors, or the
// empty vector when they do not span a hyperplane.
IVec hyperplane_normal(const std::vector<IVec>& vecs, const std::vector<size_t>& idx) {
  std::vector<IVec> rows;
  rows.reserve(idx.size());
  for (size_t i : idx) rows.push_back(vecs[i]);
  auto ker = integer_kernel_basis(IntMatrix::from_rows(rows));
  if (ker.size() != 1) return {};
  return primitive(ker[0]);
}

size_t rank_of(const std::vector<IVec>& vecs) {
  if (vecs.empty()) return 0;
  return rank(IntMatrix::from_rows(vecs));
}

}  // namespace

ConeH cone_facets(const ConeV& c) {
  std::vector<IVec> gens;
  for (const auto& g : c.generators)
    if (!is_zero(g)) gens.push_back(g);
  if (gens.empty()) throw Error("empty cone");
  size_t d = c.dim;
  if (d == 0) throw Error("cone_facets: ambient dimension must be positive");

  std::map<IVec, bool> seen;
  std::vector<IVec> normals;
  if (d == 1) {
    // facets of a ray or a line in R^1
    bool pos = false, negv = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : negv) = true;
    if (pos && negv) return ConeH{d, {}};  // whole line, no facets
    normals.push_back({Int(pos ? 1 : -1)});
    return ConeH{d, normals};
  }

  for_each_subset(gens.size(), d - 1, [&](const std::vector<size_t>& idx) {
    IVec h = hyperplane_normal(gens, idx);
    if (h.empty()) return;
    int side = 0;
    bool valid = true;
    std::vector<IVec> on;
    for (const auto& g : gens) {
      Int s = dot(h, g);
      if (s == 0) {
        on.push_back(g);
        continue;
      }
      int sg = s > 0 ? 1 : -1;
      if (side == 0)
        side = sg;
      else if (side != sg) {
        valid = false;
        break;
      }
    }
    if (!valid || side == 0) return;  // not supporting, or all generators on it
    if (side < 0)
      for (auto& x : h) x = -x;
    if (rank_of(on) != d - 1) return;  // supports a lower face only
    if (seen.emplace(h, true).second) normals.push_back(h);
  });
  std::sort(normals.begin(), normals.end(), lex_less);
  return ConeH{d, normals};
}

ConeV cone_generators_from_facets(const ConeH& c) {
  size_t d = c.dim;
  if (d == 0) throw Error("cone_generators_from_facets: ambient dimension must be positive");
  if (c.normals.empty()) throw Error("cone_generators_from_facets: cone is all of space");
  if (d == 1) {
    ConeV v;
    v.dim = 1;
    v.generators.push_back({Int(c.normals[0][0] > 0 ? 1 : -1)});
    return v;
  }
  std::map<IVec, bool> seen;
  std::vector<IVec> rays;
  for_each_subset(c.normals.size(), d - 1, [&](const std::vector<size_t>& idx) {
    IVec r = hyperplane_normal(c.normals, idx);
    if (r.empty()) return;
    auto feasible = [&](const IVec& v) {
      for (const auto& h : c.normals)
        if (dot(h, v) < 0) return false;
      return true;
    };
    IVec cand;
    if (feasible(r))
      cand = r;
    else {
      IVec nr = neg(r);
      if (feasible(nr)) cand = nr;
    }
    if (cand.empty()) return;
    // extreme ray: active normals must cut the candidate down to a single line
    std::vector<IVec> active;
    for (const auto& h : c.normals)
      if (dot(h, cand) == 0) active.push_back(h);
    if (rank_of(active) != d - 1) return;
    if (seen.emplace(cand, true).second) rays.push_back(cand);
  });
  std::sort(rays.begin(), rays.end(), lex_less);
  return ConeV{d, rays};
}

bool cone_contains(const ConeH& c, const QVec& v) {
  if (v.size() != c.dim) throw Error("cone_contains: dimension mismatch");
  for (const auto& h : c.normals)
    if (dot(h, v) < 0) return false;
  return true;
}

bool cone_contains(const ConeH& c, const IVec& v) { return cone_contains(c, to_rational(v)); }

bool lp_feasible(const std::vector<QVec>& a_in, const QVec& b_in) {
  size_t m = a_in.size();
  if (b_in.size() != m) throw Error("lp_feasible: dimension mismatch");
  size_t n = m == 0 ? 0 : a_in[0].size();
  if (m == 0) return true;

  // tableau with artificial basis; minimize the sum of artificials
  std::vector<QVec> t(m + 1, QVec(n + m + 1, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    bool flip = b_in[i] < 0;
    for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -a_in[i][j] : a_in[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? -b_in[i] : b_in[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;
  // phase-1 reduced costs: sum of constraint rows, with the (basic)
  // artificial columns zeroed so the basis has zero reduced cost
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n + m; ++j) t[m][j] += t[i][j];
  for (size_t i = 0; i < m; ++i) t[m][n + i] = 0;

  while (true) {
    // Bland's rule: entering = lowest-index column with positive reduced cost
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j)
      if (t[m][j] > 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction in phase 1 cannot occur, but stay safe
    Rat inv = 1 / t[leave][enter];
    for (size_t j = 0; j <= n + m; ++j) t[leave][j] *= inv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[m][n + m] == 0;
}

bool in_cone_hull(const std::vector<IVec>& generators, const IVec& v) {
  if (generators.empty()) return is_zero(v);
  size_t d = v.size();
  std::vector<QVec> a(d, QVec(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != d) throw Error("in_cone_hull: dimension mismatch");
    for (size_t i = 0; i < d; ++i) a[i][j] = Rat(generators[j][i]);
  }
  return lp_feasible(a, to_rational(v));
}

bool in_convex_hull(const std::vector<IVec>& points, const QVec& p) {
  if (points.empty()) return false;
  size_t d = p.size();
  std::vector<QVec> a(d + 1, QVec(points.size()));
  for (size_t j = 0; j < points.size(); ++j) {
    for (size_t i = 0; i < d; ++i) a[i][j] = Rat(points[j][i]);
    a[d][j] = 1;
  }
  QVec b = p;
  b.push_back(Rat(1));
  return lp_feasible(a, b);
}

}  // namespace gkz
