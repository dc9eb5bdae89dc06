#include <algorithm>

#include "doctest.h"
#include "data_p3.hpp"
#include "gkz/cone.hpp"
#include "gkz/matrix.hpp"
#include "test_util.hpp"

using namespace gkz;
using namespace gkz_test;

namespace {

// Independent rank oracle: rational row reduction, no HNF involved.
size_t rank_oracle(const IntMatrix& m) {
  std::vector<QVec> a(m.rows(), QVec(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Membership of v in the lattice spanned by the rows of a row-HNF matrix.
bool in_row_lattice(const IntMatrix& h, size_t hrank, IVec v) {
  for (size_t r = 0; r < hrank; ++r) {
    size_t c = 0;
    while (c < h.cols() && h.at(r, c) == 0) ++c;
    if (c == h.cols()) break;
    if (v[c] % h.at(r, c) != 0) return false;
    Int t = v[c] / h.at(r, c);
    for (size_t j = 0; j < h.cols(); ++j) v[j] -= t * h.at(r, j);
  }
  return is_zero(v);
}

IntMatrix random_matrix(Rng& rng, size_t rows, size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(-bound, bound);
  return m;
}

bool is_row_echelon_hermite(const IntMatrix& h, size_t hrank) {
  long prev_pivot = -1;
  for (size_t r = 0; r < h.rows(); ++r) {
    size_t c = 0;
    while (c < h.cols() && h.at(r, c) == 0) ++c;
    if (r >= hrank) {
      if (c != h.cols()) return false;
      continue;
    }
    if (c == h.cols() || (long)c <= prev_pivot) return false;
    if (h.at(r, c) <= 0) return false;
    for (size_t i = 0; i < r; ++i)
      if (h.at(i, c) < 0 || h.at(i, c) >= h.at(r, c)) return false;
    prev_pivot = (long)c;
  }
  return true;
}

}  // namespace

TEST_SUITE("exact_linalg") {

TEST_CASE("hnf identity") {
  auto res = hermite_normal_form(IntMatrix::identity(2));
  CHECK(res.h == IntMatrix::identity(2));
  CHECK(res.u == IntMatrix::identity(2));
  CHECK(res.rank == 2);
}

TEST_CASE("hnf upper triangular example") {
  IntMatrix m = im({{2, 4}, {0, 3}});
  auto res = hermite_normal_form(m);
  CHECK(res.u.mul(m) == res.h);
  CHECK(abs(determinant(res.u)) == 1);
  CHECK(res.h.at(0, 0) == 2);
  CHECK(res.rank == 2);
}

TEST_CASE("hnf p3 cayley matrix rank") {
  IntMatrix a = p3_cayley_matrix();
  auto res = hermite_normal_form(a);
  CHECK(res.rank == 7);
  CHECK(res.rank == rank_oracle(a));
  CHECK(res.u.mul(a) == res.h);
}

TEST_CASE("hnf properties on random matrices") {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    size_t rows = 1 + rng.next() % 5, cols = 1 + rng.next() % 5;
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    auto res = hermite_normal_form(m);
    CHECK(res.u.mul(m) == res.h);
    CHECK(abs(determinant(res.u)) == 1);
    CHECK(is_row_echelon_hermite(res.h, res.rank));
    CHECK(res.rank == rank_oracle(m));
  }
}

TEST_CASE("integer kernel basics") {
  auto k1 = integer_kernel_basis(im({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK((k1[0] == iv({1, -1}) || k1[0] == iv({-1, 1})));

  IntMatrix a = im({{1, 1, 1}, {0, 1, -1}});
  auto k2 = integer_kernel_basis(a);
  REQUIRE(k2.size() == 1);
  IVec v = k2[0];
  if (v[0] > 0) v = neg(v);
  CHECK(v == iv({-2, 1, 1}));
  CHECK(is_zero(a.mul(k2[0])));
}

TEST_CASE("kernel of p3 cayley matrix") {
  IntMatrix a = p3_cayley_matrix();
  auto k = integer_kernel_basis(a);
  CHECK(k.size() == 9);  // 16 columns - rank 7
  for (const auto& v : k) CHECK(is_zero(a.mul(v)));
}

TEST_CASE("kernel properties on random matrices") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    size_t rows = 1 + rng.next() % 4, cols = 1 + rng.next() % 5;
    IntMatrix m = random_matrix(rng, rows, cols, 5);
    auto k = integer_kernel_basis(m);
    CHECK(k.size() == m.cols() - rank(m));
    for (const auto& v : k) CHECK(is_zero(m.mul(v)));
    if (!k.empty()) {
      // basis vectors are primitive as a set: they extend to a basis, so in
      // particular each is nonzero
      for (const auto& v : k) CHECK(!is_zero(v));
    }
  }
}

TEST_CASE("generates_full_lattice") {
  CHECK(generates_full_lattice(IntMatrix::identity(3)));
  CHECK_FALSE(generates_full_lattice(im({{2}})));
  CHECK(generates_full_lattice(p3_cayley_matrix()));
}

TEST_CASE("generates_full_lattice agrees with hnf back-substitution oracle") {
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    size_t rows = 1 + rng.next() % 3, cols = 1 + rng.next() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 4);
    auto res = hermite_normal_form(m.transpose());
    bool oracle = true;
    for (size_t i = 0; i < rows && oracle; ++i) {
      IVec e(rows, Int(0));
      e[i] = 1;
      oracle = in_row_lattice(res.h, res.rank, e);
    }
    CHECK(generates_full_lattice(m) == oracle);
  }
}

TEST_CASE("cone_facets orthant") {
  ConeV c{2, {iv({1, 0}), iv({0, 1})}};
  ConeH h = cone_facets(c);
  REQUIRE(h.normals.size() == 2);
  CHECK(h.normals[0] == iv({0, 1}));
  CHECK(h.normals[1] == iv({1, 0}));
}

TEST_CASE("cone_facets p1 gkz cone") {
  // R+A for A = [[1,1,1],[0,1,-1]]: columns (1,0),(1,1),(1,-1)
  ConeV c{2, {iv({1, 0}), iv({1, 1}), iv({1, -1})}};
  ConeH h = cone_facets(c);
  REQUIRE(h.normals.size() == 2);
  std::vector<IVec> expect = {iv({1, -1}), iv({1, 1})};
  CHECK(h.normals == expect);
}

TEST_CASE("cone_facets rejects empty cone") {
  ConeV c{2, {iv({0, 0})}};
  CHECK_THROWS_WITH_AS(cone_facets(c), "empty cone", Error);
}

TEST_CASE("cone_contains") {
  ConeH orthant{2, {iv({1, 0}), iv({0, 1})}};
  CHECK(cone_contains(orthant, iv({1, 1})));
  CHECK_FALSE(cone_contains(orthant, iv({-1, 0})));
  ConeV c{2, {iv({1, 0}), iv({1, 1}), iv({1, -1})}};
  CHECK(cone_contains(cone_facets(c), iv({1, 1})));
  CHECK_THROWS_AS(cone_contains(orthant, iv({1, 1, 1})), Error);
}

TEST_CASE("cone duality round-trips") {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    size_t d = 2 + rng.next() % 2;
    std::vector<IVec> gens;
    for (int g = 0; g < 4; ++g) {
      IVec v(d);
      v[0] = 1 + rng.uniform(0, 2);  // first coordinate positive: pointed cone
      for (size_t i = 1; i < d; ++i) v[i] = rng.uniform(-2, 2);
      gens.push_back(primitive(v));
    }
    if (rank(IntMatrix::from_rows(gens)) != d) continue;
    ConeH h = cone_facets(ConeV{d, gens});
    ConeV extreme = cone_generators_from_facets(h);
    ConeH h2 = cone_facets(extreme);
    CHECK(h.normals == h2.normals);
    for (const auto& g : gens) CHECK(cone_contains(h, g));
    for (const auto& r : extreme.generators) CHECK(cone_contains(h, r));
  }
}

TEST_CASE("lp_feasible basics") {
  // x + y = 1, x,y >= 0 : feasible
  CHECK(lp_feasible({{Rat(1), Rat(1)}}, {Rat(1)}));
  // x + y = -1, x,y >= 0 : infeasible
  CHECK_FALSE(lp_feasible({{Rat(1), Rat(1)}}, {Rat(-1)}));
  // x - y = 3 with x,y >= 0 : feasible
  CHECK(lp_feasible({{Rat(1), Rat(-1)}}, {Rat(3)}));
  CHECK(in_cone_hull({iv({1, 0}), iv({1, 1})}, iv({3, 2})));
  CHECK_FALSE(in_cone_hull({iv({1, 0}), iv({1, 1})}, iv({0, 1})));
  CHECK(in_convex_hull({iv({0, 0}), iv({2, 0}), iv({0, 2})}, {Rat(1, 2), Rat(1, 2)}));
  CHECK_FALSE(in_convex_hull({iv({0, 0}), iv({2, 0}), iv({0, 2})}, {Rat(2), Rat(2)}));
}

}  // TEST_SUITE
