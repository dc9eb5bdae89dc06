#include "gkz/cohomology.hpp"

#include <algorithm>
#include <set>

namespace gkz {

namespace {

// All sorted ray-index subsets of maximal cones (the faces of the fan,
// including the empty face). Keyed by size for the graded elimination.
std::vector<std::vector<std::vector<size_t>>> enumerate_faces(const Fan& fan) {
  std::set<std::vector<size_t>> faces;
  for (const auto& cone : fan.max_cones) {
    size_t k = cone.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<size_t> face;
      for (size_t t = 0; t < k; ++t)
        if (mask & (size_t{1} << t)) face.push_back(cone[t]);
      std::sort(face.begin(), face.end());
      faces.insert(face);
    }
  }
  std::vector<std::vector<std::vector<size_t>>> by_degree(fan.dim + 1);
  for (const auto& f : faces)
    if (f.size() <= fan.dim) by_degree[f.size()].push_back(f);
  for (auto& v : by_degree) std::sort(v.begin(), v.end());
  return by_degree;
}

}  // namespace

std::map<std::vector<size_t>, Rat> CohomRing::ray_times_face(size_t ray,
                                                             const std::vector<size_t>& face) const {
  std::map<std::vector<size_t>, Rat> out;
  if (!std::binary_search(face.begin(), face.end(), ray)) {
    std::vector<size_t> bigger = face;
    bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), ray), ray);
    for (const auto& cone : fan_.max_cones)
      if (std::includes(cone.begin(), cone.end(), bigger.begin(), bigger.end())) {
        out[bigger] = 1;
        return out;
      }
    return out;  // not a face: Stanley-Reisner kills it
  }
  // repeated ray: rewrite x_ray by a linear relation supported away from a
  // maximal cone containing the face
  const std::vector<size_t>* sigma = nullptr;
  for (const auto& cone : fan_.max_cones)
    if (std::includes(cone.begin(), cone.end(), face.begin(), face.end())) {
      sigma = &cone;
      break;
    }
  if (!sigma) throw Error("cohomology: face not contained in a maximal cone");
  // m with <m, ray> = 1 and <m, rho> = 0 on the other rays of sigma
  IntMatrix mat(fan_.dim, fan_.dim);
  QVec rhs(fan_.dim, Rat(0));
  for (size_t t = 0; t < fan_.dim; ++t) {
    for (size_t k = 0; k < fan_.dim; ++k) mat.at(t, k) = fan_.rays[(*sigma)[t]][k];
    if ((*sigma)[t] == ray) rhs[t] = 1;
  }
  QVec m = solve_rational(mat, rhs);
  if (!is_integral(m)) throw Error("cohomology: fan is not smooth (dual vector is fractional)");
  IVec mi = to_integral(m);
  for (size_t gamma = 0; gamma < fan_.rays.size(); ++gamma) {
    if (std::binary_search(sigma->begin(), sigma->end(), gamma)) continue;
    Int coeff = dot(mi, fan_.rays[gamma]);
    if (coeff == 0) continue;
    for (auto& [mono, val] : ray_times_face(gamma, face)) {
      Rat& slot = out[mono];
      slot -= Rat(coeff) * val;
      if (slot == 0) out.erase(mono);
    }
  }
  return out;
}

CohomClass CohomRing::reduce_monomial(const std::vector<size_t>& rays) const {
  // fold ray by ray over face-monomial expansions, then map faces to basis
  std::map<std::vector<size_t>, Rat> acc;
  acc[{}] = 1;
  for (size_t ray : rays) {
    std::map<std::vector<size_t>, Rat> next;
    for (const auto& [face, coeff] : acc)
      for (const auto& [mono, val] : ray_times_face(ray, face)) {
        Rat& slot = next[mono];
        slot += coeff * val;
        if (slot == 0) next.erase(mono);
      }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  CohomClass out = zero();
  for (const auto& [face, coeff] : acc) {
    auto it = face_coords_.find(face);
    if (it == face_coords_.end()) throw Error("cohomology: unreduced face monomial");
    for (size_t b = 0; b < basis_.size(); ++b) out[b] += coeff * it->second[b];
  }
  return out;
}

CohomRing CohomRing::build(const Fan& fan) {
  auto pred = fan_predicates(fan);
  if (!pred.complete || !pred.simplicial || !pred.smooth)
    throw Error("CohomRing: fan must be smooth, complete, and simplicial");

  CohomRing ring;
  ring.fan_ = fan;
  auto faces = enumerate_faces(fan);

  // degree 0: the unit
  ring.basis_.push_back({});

  for (size_t d = 1; d <= fan.dim; ++d) {
    const auto& degree_faces = faces[d];
    std::map<std::vector<size_t>, size_t> col_of;
    for (size_t c = 0; c < degree_faces.size(); ++c) col_of[degree_faces[c]] = c;

    // relations: L_k * (face of degree d-1), expanded over degree-d faces
    std::vector<QVec> rels;
    for (const auto& t : faces[d - 1]) {
      for (size_t k = 0; k < fan.dim; ++k) {
        QVec rel(degree_faces.size(), Rat(0));
        bool nonzero = false;
        for (size_t rho = 0; rho < fan.rays.size(); ++rho) {
          Int coeff = fan.rays[rho][k];
          if (coeff == 0) continue;
          for (const auto& [mono, val] : ring.ray_times_face(rho, t)) {
            rel[col_of.at(mono)] += Rat(coeff) * val;
            nonzero = true;
          }
        }
        if (nonzero) rels.push_back(std::move(rel));
      }
    }

    // Gaussian elimination; pivots consume monomials, survivors form the basis
    size_t ncols = degree_faces.size();
    std::vector<long> pivot_of_col(ncols, -1);
    std::vector<QVec> echelon;
    for (auto& rel : rels) {
      for (size_t pass = 0; pass < echelon.size(); ++pass) {
        const QVec& e = echelon[pass];
        size_t pc = 0;
        while (pc < ncols && e[pc] == 0) ++pc;
        if (pc < ncols && rel[pc] != 0) {
          Rat f = rel[pc] / e[pc];
          for (size_t j = pc; j < ncols; ++j) rel[j] -= f * e[j];
        }
      }
      size_t pc = 0;
      while (pc < ncols && rel[pc] == 0) ++pc;
      if (pc == ncols) continue;
      pivot_of_col[pc] = (long)echelon.size();
      echelon.push_back(rel);
    }
    // back-substitute to reduced row echelon form
    for (size_t i = echelon.size(); i > 0; --i) {
      QVec& e = echelon[i - 1];
      size_t pc = 0;
      while (pc < ncols && e[pc] == 0) ++pc;
      Rat inv = 1 / e[pc];
      for (size_t j = pc; j < ncols; ++j) e[j] *= inv;
      for (size_t t = 0; t + 1 < i; ++t) {
        QVec& other = echelon[t];
        if (other[pc] == 0) continue;
        Rat f = other[pc];
        for (size_t j = pc; j < ncols; ++j) other[j] -= f * e[j];
      }
    }

    std::vector<size_t> basis_cols;
    for (size_t c = 0; c < ncols; ++c)
      if (pivot_of_col[c] == -1) basis_cols.push_back(c);

    size_t base_index = ring.basis_.size();
    std::map<size_t, size_t> basis_index_of_col;
    for (size_t bi = 0; bi < basis_cols.size(); ++bi) {
      basis_index_of_col[basis_cols[bi]] = base_index + bi;
      ring.basis_.push_back(degree_faces[basis_cols[bi]]);
    }
    // coordinates of every degree-d face over the global basis
    for (size_t c = 0; c < ncols; ++c) {
      CohomClass coords;  // deferred sizing: basis not final yet, store sparse later
      coords.assign(0, Rat(0));
      ring.face_coords_[degree_faces[c]] = coords;  // placeholder, filled below
    }
    for (size_t c = 0; c < ncols; ++c) {
      std::map<size_t, Rat> expr;  // global basis index -> coeff
      if (pivot_of_col[c] == -1) {
        expr[basis_index_of_col[c]] = 1;
      } else {
        const QVec& e = echelon[pivot_of_col[c]];
        for (size_t j = c + 1; j < ncols; ++j)
          if (e[j] != 0 && pivot_of_col[j] == -1) expr[basis_index_of_col[j]] = -e[j];
      }
      CohomClass coords(ring.basis_.size(), Rat(0));  // grows as degrees are added; fixed below
      ring.face_coords_[degree_faces[c]] = coords;
      // store sparsely for now via direct map; final resize happens at the end
      CohomClass& slot = ring.face_coords_[degree_faces[c]];
      for (const auto& [bi, coeff] : expr) {
        if (bi >= slot.size()) slot.resize(bi + 1, Rat(0));
        slot[bi] = coeff;
      }
    }
  }

  // unify coordinate lengths and add the unit face
  size_t dim = ring.basis_.size();
  ring.face_coords_[{}] = CohomClass(dim, Rat(0));
  ring.face_coords_[{}][0] = 1;
  for (auto& [face, coords] : ring.face_coords_) coords.resize(dim, Rat(0));

  if (dim != fan.max_cones.size())
    throw Error("cohomology dimension mismatch: basis has " + std::to_string(dim) +
                " elements, fan has " + std::to_string(fan.max_cones.size()) + " maximal cones");

  // multiplication table over the basis
  ring.table_.assign(dim, std::vector<CohomClass>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      if (ring.basis_[i].size() + ring.basis_[j].size() > fan.dim) {
        ring.table_[i][j] = ring.zero();
        continue;
      }
      std::vector<size_t> mono = ring.basis_[i];
      mono.insert(mono.end(), ring.basis_[j].begin(), ring.basis_[j].end());
      std::sort(mono.begin(), mono.end());
      ring.table_[i][j] = ring.reduce_monomial(mono);
    }

  // normalization: every maximal cone reduces to the same top class with
  // coefficient 1 (each unimodular cone contributes one point class)
  size_t top = dim;
  for (size_t b = 0; b < dim; ++b)
    if (ring.basis_[b].size() == fan.dim) {
      if (top != dim) throw Error("cohomology: top degree is not one-dimensional");
      top = b;
    }
  if (top == dim) throw Error("cohomology: missing top class");
  for (const auto& cone : fan.max_cones) {
    CohomClass c = ring.reduce_monomial(cone);
    for (size_t b = 0; b < dim; ++b)
      if (c[b] != Rat(b == top ? 1 : 0))
        throw Error("cohomology: top-class normalization failed");
  }
  return ring;
}

std::string CohomRing::basis_label(size_t b) const {
  if (basis_[b].empty()) return "1";
  std::string s;
  for (size_t ray : basis_[b]) {
    if (!s.empty()) s += "*";
    s += "D" + to_string(fan_.rays[ray]);
  }
  return s;
}

CohomClass CohomRing::unit() const {
  CohomClass c = zero();
  c[0] = 1;
  return c;
}

CohomClass CohomRing::divisor_class(size_t ray) const {
  if (ray >= fan_.rays.size()) throw Error("divisor_class: ray out of range");
  return reduce_monomial({ray});
}

CohomClass CohomRing::mul(const CohomClass& a, const CohomClass& b) const {
  CohomClass out = zero();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      Rat f = a[i] * b[j];
      const CohomClass& t = table_[i][j];
      for (size_t k = 0; k < t.size(); ++k)
        if (t[k] != 0) out[k] += f * t[k];
    }
  }
  return out;
}

CohomClass CohomRing::add(const CohomClass& a, const CohomClass& b) const {
  CohomClass out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

CohomClass CohomRing::scale(const Rat& c, const CohomClass& a) const {
  CohomClass out = a;
  for (auto& x : out) x *= c;
  return out;
}

bool CohomRing::is_zero_class(const CohomClass& a) const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

size_t CohomRing::nilpotency_order(const CohomClass& a) const {
  CohomClass p = a;
  for (size_t k = 1; k <= fan_.dim + 1; ++k) {
    if (is_zero_class(p)) return k;
    p = mul(p, a);
  }
  throw Error("nilpotency_order: class is not nilpotent (has a degree-0 part?)");
}

CohomClass part_zero_class(const CohomRing& ring, const NefPartitionData& npd, size_t part) {
  CohomClass acc = ring.zero();
  for (size_t ray : npd.parts.at(part)) acc = ring.add(acc, ring.divisor_class(ray));
  return ring.scale(Rat(-1), acc);
}

std::vector<CurveClassLift> mori_generators(const CohomRing& ring, const NefPartitionData& npd) {
  const Fan& fan = ring.fan();
  size_t n = fan.dim;
  size_t r = npd.r();
  size_t p = fan.rays.size();

  // ridge -> adjacent maximal cones
  std::map<std::vector<size_t>, std::vector<size_t>> walls;
  for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    const auto& cone = fan.max_cones[ci];
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<size_t> ridge;
      for (size_t t = 0; t < cone.size(); ++t)
        if (t != drop) ridge.push_back(cone[t]);
      walls[ridge].push_back(ci);
    }
  }

  // column position of each ray in the (i,j) block layout
  std::vector<size_t> col_of_ray(p, 0);
  std::vector<size_t> part_of_ray(p, 0);
  std::vector<size_t> block_start(r, 0);
  {
    size_t c = 0;
    for (size_t i = 0; i < r; ++i) {
      block_start[i] = c;
      ++c;  // (i,0)
      for (size_t idx : npd.parts[i]) {
        col_of_ray[idx] = c++;
        part_of_ray[idx] = i;
      }
    }
  }

  std::set<IVec> lifts;
  for (const auto& [ridge, cones] : walls) {
    if (cones.size() != 2) throw Error("mori_generators: non-manifold wall");
    std::set<size_t> rays_set(ridge.begin(), ridge.end());
    size_t u = 0, v = 0;
    for (size_t t : fan.max_cones[cones[0]])
      if (!rays_set.count(t)) u = t;
    for (size_t t : fan.max_cones[cones[1]])
      if (!rays_set.count(t)) v = t;
    std::vector<size_t> involved(ridge);
    involved.push_back(u);
    involved.push_back(v);
    std::vector<IVec> cols;
    for (size_t t : involved) cols.push_back(fan.rays[t]);
    auto ker = integer_kernel_basis(IntMatrix::from_columns(cols));
    if (ker.size() != 1) throw Error("mori_generators: wall relation is not unique");
    IVec rel = primitive(ker[0]);
    size_t u_pos = ridge.size(), v_pos = ridge.size() + 1;
    if (rel[u_pos] < 0) rel = neg(rel);
    if (rel[u_pos] <= 0 || rel[v_pos] <= 0)
      throw Error("mori_generators: off-wall coefficients are not positive");

    IVec lift(r + p, Int(0));
    for (size_t t = 0; t < involved.size(); ++t) lift[col_of_ray[involved[t]]] = rel[t];
    for (size_t i = 0; i < r; ++i) {
      Int s = 0;
      for (size_t idx : npd.parts[i]) s += lift[col_of_ray[idx]];
      lift[block_start[i]] = -s;
    }
    // nef pairing nonnegative on effective curves: E_i . l = -l_{i,0} >= 0
    for (size_t i = 0; i < r; ++i)
      if (lift[block_start[i]] > 0)
        throw Error("mori_generators: nef divisor pairs negatively with a wall curve");
    // kernel membership: the last n rows vanish by the wall relation
    IVec weighted(n, Int(0));
    for (size_t idx = 0; idx < p; ++idx)
      for (size_t k = 0; k < n; ++k) weighted[k] += lift[col_of_ray[idx]] * fan.rays[idx][k];
    if (!is_zero(weighted)) throw Error("mori_generators: lift escapes ker(A)");
    lifts.insert(lift);
  }
  return std::vector<CurveClassLift>(lifts.begin(), lifts.end());
}

}  // namespace gkz
