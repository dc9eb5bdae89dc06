#include "gkz/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gkz/matrix.hpp"

namespace gkz {

namespace {

// Sign of the orientation determinant of (f_1, ..., f_k, p) as an affine
// k-simplex: det(f_2 - f_1, ..., f_k - f_1, p - f_1).
int orient_sign(const std::vector<IVec>& pts, const std::vector<size_t>& facet, const IVec& p) {
  size_t k = facet.size();
  std::vector<IVec> rows;
  rows.reserve(k);
  for (size_t i = 1; i < k; ++i) rows.push_back(sub(pts[facet[i]], pts[facet[0]]));
  rows.push_back(sub(p, pts[facet[0]]));
  Int d = determinant(IntMatrix::from_rows(rows));
  return d == 0 ? 0 : (d > 0 ? 1 : -1);
}

bool simplex_contains(const std::vector<IVec>& pts, const std::vector<size_t>& simplex, const IVec& p) {
  // barycentric coordinates from the affine system [v_i; 1] c = [p; 1]
  size_t k = simplex.size() - 1;
  IntMatrix m(k + 1, k + 1);
  for (size_t j = 0; j <= k; ++j) {
    for (size_t i = 0; i < k; ++i) m.at(i, j) = pts[simplex[j]][i];
    m.at(k, j) = 1;
  }
  QVec b(k + 1);
  for (size_t i = 0; i < k; ++i) b[i] = Rat(p[i]);
  b[k] = 1;
  QVec c = solve_rational(m, b);
  for (const auto& x : c)
    if (x < 0) return false;
  return true;
}

}  // namespace

std::vector<size_t> lex_insertion_order(const std::vector<IVec>& points) {
  std::vector<size_t> order(points.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return lex_less(points[a], points[b]); });
  return order;
}

std::vector<size_t> reverse_lex_insertion_order(const std::vector<IVec>& points) {
  auto order = lex_insertion_order(points);
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<size_t> seeded_insertion_order(const std::vector<IVec>& points, unsigned long seed) {
  auto order = lex_insertion_order(points);
  unsigned long state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 33);
  };
  for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[next() % i]);
  return order;
}

std::vector<std::vector<size_t>> placing_triangulation(const std::vector<IVec>& points,
                                                       const std::vector<size_t>& order) {
  if (points.empty()) throw Error("placing_triangulation: no points");
  size_t k = points[0].size();
  if (order.size() != points.size()) throw Error("placing_triangulation: order size mismatch");

  if (k == 0) return {{order[0]}};

  // greedy seed simplex: first k+1 affinely independent points in order
  std::vector<size_t> seed;
  std::vector<bool> used(points.size(), false);
  for (size_t idx : order) {
    std::vector<size_t> trial = seed;
    trial.push_back(idx);
    if (trial.size() >= 2) {
      std::vector<IVec> rows;
      for (size_t i = 1; i < trial.size(); ++i) rows.push_back(sub(points[trial[i]], points[trial[0]]));
      if (rank(IntMatrix::from_rows(rows)) != trial.size() - 1) continue;
    }
    seed = trial;
    used[idx] = true;
    if (seed.size() == k + 1) break;
  }
  if (seed.size() != k + 1) throw Error("placing_triangulation: points do not affinely span R^k");

  std::sort(seed.begin(), seed.end());
  std::vector<std::vector<size_t>> simplices = {seed};

  for (size_t idx : order) {
    if (used[idx]) continue;
    used[idx] = true;
    const IVec& p = points[idx];

    std::vector<size_t> containing;
    for (size_t s = 0; s < simplices.size(); ++s)
      if (simplex_contains(points, simplices[s], p)) containing.push_back(s);

    std::vector<std::vector<size_t>> created;
    if (!containing.empty()) {
      // interior (or face) insertion: star-split every containing simplex
      for (size_t s : containing) {
        const auto& simplex = simplices[s];
        for (size_t drop = 0; drop <= k; ++drop) {
          std::vector<size_t> facet;
          for (size_t j = 0; j <= k; ++j)
            if (j != drop) facet.push_back(simplex[j]);
          if (orient_sign(points, facet, p) == 0) continue;
          facet.push_back(idx);
          std::sort(facet.begin(), facet.end());
          created.push_back(facet);
        }
      }
      std::vector<std::vector<size_t>> next;
      for (size_t s = 0; s < simplices.size(); ++s)
        if (std::find(containing.begin(), containing.end(), s) == containing.end())
          next.push_back(simplices[s]);
      next.insert(next.end(), created.begin(), created.end());
      simplices = std::move(next);
    } else {
      // outside: attach the point to every strictly visible boundary facet
      std::map<std::vector<size_t>, std::vector<size_t>> facet_owner;  // facet -> opposite vertices
      for (const auto& simplex : simplices) {
        for (size_t drop = 0; drop <= k; ++drop) {
          std::vector<size_t> facet;
          for (size_t j = 0; j <= k; ++j)
            if (j != drop) facet.push_back(simplex[j]);
          facet_owner[facet].push_back(simplex[drop]);
        }
      }
      for (const auto& [facet, opposite] : facet_owner) {
        if (opposite.size() != 1) continue;  // interior wall
        int side_p = orient_sign(points, facet, p);
        int side_in = orient_sign(points, facet, points[opposite[0]]);
        if (side_p == 0 || side_p == side_in) continue;
        std::vector<size_t> simplex = facet;
        simplex.push_back(idx);
        std::sort(simplex.begin(), simplex.end());
        created.push_back(simplex);
      }
      if (created.empty())
        throw Error("placing_triangulation: point " + to_string(p) + " saw no boundary facet");
      simplices.insert(simplices.end(), created.begin(), created.end());
    }
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

std::vector<IVec> affine_lattice_coordinates(const std::vector<IVec>& points) {
  if (points.empty()) return {};
  std::vector<IVec> diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  std::vector<IVec> coords(points.size());
  if (diffs.empty() || rank(IntMatrix::from_rows(diffs)) == 0) {
    for (auto& c : coords) c = IVec{};
    return coords;
  }
  HnfResult res = hermite_normal_form(IntMatrix::from_rows(diffs));
  size_t r = res.rank;
  std::vector<IVec> basis_rows;
  for (size_t i = 0; i < r; ++i) basis_rows.push_back(res.h.row(i));
  IntMatrix bt = IntMatrix::from_rows(basis_rows).transpose();  // n x r, full column rank
  coords[0] = IVec(r, Int(0));
  for (size_t i = 1; i < points.size(); ++i) {
    QVec x = solve_full_column_rank(bt, to_rational(diffs[i - 1]));
    coords[i] = to_integral(x);  // HNF basis generates the difference lattice
  }
  return coords;
}

}  // namespace gkz
