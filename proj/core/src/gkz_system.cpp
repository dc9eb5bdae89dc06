#include "gkz/gkz_system.hpp"

#include <algorithm>
#include <set>

#include "gkz/cone.hpp"

namespace gkz {

size_t GkzSystem::column_of(size_t i, size_t j) const {
  for (size_t c = 0; c < column_labels.size(); ++c)
    if (column_labels[c].first == i && column_labels[c].second == j) return c;
  throw Error("no column labeled (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

GkzSystem build_cayley_gkz(const NefPartitionData& npd) {
  if (!npd.fan_smooth && !npd.rays_generate_lattice)
    throw Error("build_cayley_gkz: fan is not smooth and its rays do not generate the full lattice");

  GkzSystem g;
  g.r = npd.r();
  g.n = npd.fan.dim;
  size_t p = npd.fan.rays.size();
  g.a = IntMatrix(g.r + g.n, g.r + p);
  g.ray_column.assign(p, 0);

  size_t c = 0;
  for (size_t i = 0; i < g.r; ++i) {
    g.a.at(i, c) = 1;  // mu_{i,0} = e_i x 0
    g.column_labels.emplace_back(i + 1, 0);
    ++c;
    for (size_t j = 0; j < npd.parts[i].size(); ++j) {
      size_t ray = npd.parts[i][j];
      g.a.at(i, c) = 1;
      for (size_t k = 0; k < g.n; ++k) g.a.at(g.r + k, c) = npd.fan.rays[ray][k];
      g.column_labels.emplace_back(i + 1, j + 1);
      g.ray_column[ray] = c;
      ++c;
    }
  }

  g.beta.assign(g.r + g.n, Rat(0));
  for (size_t i = 0; i < g.r; ++i) g.beta[i] = Rat(-1, 2);

  // construction invariants
  for (size_t i = 0; i < g.r; ++i)
    for (size_t col = 0; col < g.cols(); ++col)
      if (g.a.at(i, col) != Int(g.column_labels[col].first == i + 1 ? 1 : 0))
        throw Error("build_cayley_gkz: block indicator rows violated");
  if (!generates_full_lattice(g.a))
    throw Error("build_cayley_gkz: columns do not generate the full lattice");
  // homogeneity: (1,...,1) equals the sum of the first r rows
  for (size_t col = 0; col < g.cols(); ++col) {
    Int s = 0;
    for (size_t i = 0; i < g.r; ++i) s += g.a.at(i, col);
    if (s != 1) throw Error("build_cayley_gkz: homogeneity violated");
  }
  return g;
}

std::vector<EulerOperator> euler_operators(const GkzSystem& g) {
  std::vector<EulerOperator> ops;
  for (size_t i = 0; i < g.rows(); ++i) ops.push_back(EulerOperator{i, g.a.row(i), g.beta[i]});
  return ops;
}

namespace {

// DFS over columns; block-row sums must close to zero at each block boundary.
void box_dfs(const GkzSystem& g, size_t col, long budget, IVec& nu, IVec& row_accum,
             std::set<IVec>& out, long degmax) {
  if (col == g.cols()) {
    for (size_t i = 0; i < g.rows(); ++i)
      if (row_accum[i] != 0) return;
    if (is_zero(nu)) return;
    IVec pos(nu.size(), Int(0)), negv(nu.size(), Int(0));
    long pos_l1 = 0;
    for (size_t k = 0; k < nu.size(); ++k) {
      if (nu[k] > 0) {
        pos[k] = nu[k];
        pos_l1 += nu[k].get_si();
      } else
        negv[k] = -nu[k];
    }
    if (pos_l1 == 0 || pos_l1 > degmax) return;
    // sign convention: nu+ is the colexicographically larger side, which is
    // what makes the P^1 instance come out as d1 d2 - d0^2
    bool keep = false;
    for (size_t k = nu.size(); k > 0; --k) {
      if (pos[k - 1] != negv[k - 1]) {
        keep = pos[k - 1] > negv[k - 1];
        break;
      }
    }
    out.insert(keep ? nu : neg(nu));
    return;
  }
  size_t block = g.column_labels[col].first - 1;  // 0-based block of this column
  bool block_ends = (col + 1 == g.cols()) || (g.column_labels[col + 1].first - 1 != block);
  for (long v = -budget; v <= budget; ++v) {
    nu[col] = v;
    for (size_t i = 0; i < g.rows(); ++i) row_accum[i] += Int(v) * g.a.at(i, col);
    bool feasible = !(block_ends && row_accum[block] != 0);
    if (feasible) box_dfs(g, col + 1, budget - std::abs(v), nu, row_accum, out, degmax);
    for (size_t i = 0; i < g.rows(); ++i) row_accum[i] -= Int(v) * g.a.at(i, col);
  }
  nu[col] = 0;
}

}  // namespace

std::vector<BoxOperator> box_operators_up_to(const GkzSystem& g, long degmax) {
  if (degmax < 1) throw Error("box_operators_up_to: degmax must be >= 1");
  std::set<IVec> found;
  IVec nu(g.cols(), Int(0));
  IVec accum(g.rows(), Int(0));
  box_dfs(g, 0, 2 * degmax, nu, accum, found, degmax);
  std::vector<BoxOperator> ops;
  for (const auto& v : found) {
    BoxOperator op;
    op.nu_plus.assign(v.size(), Int(0));
    op.nu_minus.assign(v.size(), Int(0));
    for (size_t k = 0; k < v.size(); ++k)
      (v[k] > 0 ? op.nu_plus[k] : op.nu_minus[k]) = abs(v[k]);
    if (!is_zero(sub(g.a.mul(op.nu_plus), g.a.mul(op.nu_minus))))
      throw Error("box_operators_up_to: internal soundness failure");
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<IVec> facet_normals_RA(const GkzSystem& g) {
  std::vector<IVec> cols;
  for (size_t c = 0; c < g.cols(); ++c) cols.push_back(g.a.col(c));
  ConeH facets = cone_facets(ConeV{g.rows(), cols});
  for (const auto& h : facets.normals) {
    size_t ones = 0, nonzero = 0;
    for (size_t i = 0; i < g.r; ++i) {
      if (h[i] != 0) ++nonzero;
      if (h[i] == 1) ++ones;
    }
    if (nonzero != 1 || ones != 1)
      throw Error("facet classification violated: normal " + to_string(h) +
                  " is not of the form (e_j, m)");
  }
  return facets.normals;
}

NonResonanceCertificate non_resonance_check(const GkzSystem& g) {
  NonResonanceCertificate cert;
  cert.non_resonant = true;
  for (const auto& h : facet_normals_RA(g)) {
    Rat pairing = dot(h, g.beta);
    bool integral = pairing.get_den() == 1;
    if (integral) cert.non_resonant = false;
    cert.pairings.push_back(FacetPairing{h, pairing, integral});
  }
  return cert;
}

namespace {

LatticePolytope cayley_hull(const GkzSystem& g) {
  std::vector<IVec> pts = {IVec(g.rows(), Int(0))};
  for (size_t c = 0; c < g.cols(); ++c) pts.push_back(g.a.col(c));
  return LatticePolytope::from_points(g.rows(), pts);
}

// generators of sigma-hat: lifted rays of the cone plus the r unit vectors
std::vector<IVec> sigma_hat_generators(const GkzSystem& g, const NefPartitionData& npd, size_t ci) {
  std::vector<IVec> gens;
  for (size_t ray : npd.fan.max_cones[ci]) gens.push_back(g.a.col(g.ray_column[ray]));
  for (size_t l = 0; l < g.r; ++l) {
    IVec e(g.rows(), Int(0));
    e[l] = 1;
    gens.push_back(e);
  }
  return gens;
}

}  // namespace

Int holonomic_rank(const GkzSystem& g, const NefPartitionData& npd) {
  Int vol = cayley_hull(g).normalized_volume();
  if (vol != Int(npd.fan.max_cones.size()))
    throw Error("union-cones violated: normalized volume " + vol.get_str() + " != max cone count " +
                std::to_string(npd.fan.max_cones.size()));
  return vol;
}

UnionConesReport verify_union_cones(const GkzSystem& g, const NefPartitionData& npd) {
  UnionConesReport rep;
  LatticePolytope hull = cayley_hull(g);
  rep.hull_volume = hull.normalized_volume();
  rep.cone_volume_sum = 0;

  std::vector<IVec> cols;
  for (size_t c = 0; c < g.cols(); ++c) cols.push_back(g.a.col(c));
  ConeH ra = cone_facets(ConeV{g.rows(), cols});

  for (size_t ci = 0; ci < npd.fan.max_cones.size(); ++ci) {
    auto gens = sigma_hat_generators(g, npd, ci);
    // (a) Poly(sigma-hat) ⊆ Conv(A ∪ {0}): check the simplex vertices
    for (const auto& v : gens)
      if (!hull.contains(v))
        rep.failures.push_back("cone " + std::to_string(ci) + ": vertex " + to_string(v) +
                               " escapes Conv(A ∪ {0})");
    // (b) volume contribution
    rep.cone_volume_sum += abs(determinant(IntMatrix::from_rows(gens)));
    // (c) sigma-hat ⊆ R+A
    for (const auto& v : gens)
      if (!cone_contains(ra, v))
        rep.failures.push_back("cone " + std::to_string(ci) + ": generator " + to_string(v) +
                               " escapes R+A");
  }
  if (rep.cone_volume_sum != rep.hull_volume)
    rep.failures.push_back("volume sum " + rep.cone_volume_sum.get_str() + " != hull volume " +
                           rep.hull_volume.get_str());

  // every column of A lies in some sigma-hat
  for (size_t c = 0; c < g.cols(); ++c) {
    IVec col = g.a.col(c);
    bool inside = false;
    for (size_t ci = 0; ci < npd.fan.max_cones.size() && !inside; ++ci) {
      auto gens = sigma_hat_generators(g, npd, ci);
      IntMatrix m = IntMatrix::from_rows(gens).transpose();
      if (determinant(m) == 0) continue;  // degenerate simplex cannot contain it
      QVec coeff = solve_rational(m, to_rational(col));
      inside = true;
      for (const auto& x : coeff)
        if (x < 0) inside = false;
    }
    if (!inside)
      rep.failures.push_back("column " + to_string(col) + " lies in no sigma-hat");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

QVec lift_to_cayley(const NefPartitionData& npd, size_t cone_index, const QVec& u) {
  const auto& cone = npd.fan.max_cones.at(cone_index);
  size_t n = npd.fan.dim;
  if (u.size() != n) throw Error("lift_to_cayley: dimension mismatch");
  std::vector<IVec> rays;
  for (size_t ray : cone) rays.push_back(npd.fan.rays[ray]);
  QVec coeff = solve_rational(IntMatrix::from_rows(rays).transpose(), u);
  for (const auto& x : coeff)
    if (x < 0) throw Error("lift_to_cayley: point is not in the cone");

  size_t r = npd.r();
  QVec lifted(r + n, Rat(0));
  for (size_t i = 0; i < r; ++i) {
    // phi_i(u) = <m_sigma^i, u>
    Rat phi = 0;
    for (size_t k = 0; k < n; ++k) phi += Rat(npd.cartier[i].per_cone[cone_index][k]) * u[k];
    lifted[i] = -phi;
  }
  for (size_t k = 0; k < n; ++k) lifted[r + k] = u[k];

  // cross-check against sum of lifted generators
  QVec check(r + n, Rat(0));
  for (size_t t = 0; t < cone.size(); ++t) {
    size_t ray = cone[t];
    size_t part = 0;
    for (size_t i = 0; i < r; ++i)
      for (size_t idx : npd.parts[i])
        if (idx == ray) part = i;
    check[part] += coeff[t];
    for (size_t k = 0; k < n; ++k) check[r + k] += coeff[t] * Rat(npd.fan.rays[ray][k]);
  }
  for (size_t k = 0; k < r + n; ++k)
    if (check[k] != lifted[k]) throw Error("lift_to_cayley: lifting identity violated");
  return lifted;
}

}  // namespace gkz
