#include "doctest.h"
#include "data_p3.hpp"
#include "gkz/instances.hpp"
#include "gkz/oracles.hpp"
#include "gkz/series.hpp"
#include "test_util.hpp"

using namespace gkz;
using namespace gkz_test;

namespace {

NefPartitionData p1_npd() {
  Fan f{1, {iv({1}), iv({-1})}, {{0}, {1}}};
  return validate_nef_partition(f, {{0, 1}});
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("binomial period of the p1 instance") {
  auto npd = p1_npd();
  auto sections = sections_from_partition(npd);
  auto series = binomial_period(sections, 4);
  REQUIRE(series.size() == 3);
  CHECK(series.at(iv({0, 0, 0})) == Rat(1));
  CHECK(series.at(iv({-2, 1, 1})) == Rat(3, 4));
  CHECK(series.at(iv({-4, 2, 2})) == Rat(105, 64));

  auto series0 = binomial_period(sections, 0);
  REQUIRE(series0.size() == 1);
  CHECK(series0.at(iv({0, 0, 0})) == Rat(1));
}

TEST_CASE("binomial period rejects a section without constant term") {
  LaurentSection s;
  s.part_index = 0;
  s.exponents = {iv({1})};  // no zero exponent
  CHECK_THROWS_AS(binomial_period({s}, 2), Error);
}

TEST_CASE("binomial period equals the degree-0 series coefficients on p1") {
  auto npd = p1_npd();
  CohomRing ring = CohomRing::build(npd.fan);
  GkzSystem g = build_cayley_gkz(npd);
  auto from_series = degree_zero_coefficients(assemble_B(ring, npd, g, 6));
  auto from_oracle = binomial_period(sections_from_partition(npd), 6);
  CHECK(from_series == from_oracle);
}

TEST_CASE("independent volume") {
  auto simplex = LatticePolytope::from_points(2, {iv({0, 0}), iv({1, 0}), iv({0, 1})});
  for (unsigned long seed : {1UL, 2UL, 3UL, 4UL, 5UL}) CHECK(independent_volume(simplex, seed) == 1);

  auto square = LatticePolytope::from_points(2, {iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})});
  for (unsigned long seed : {1UL, 2UL, 3UL, 4UL, 5UL}) CHECK(independent_volume(square, seed) == 8);

  auto hull = LatticePolytope::from_points(2, {iv({0, 0}), iv({1, 0}), iv({1, 1}), iv({1, -1})});
  for (unsigned long seed : {1UL, 2UL, 3UL, 4UL, 5UL}) {
    CHECK(independent_volume(hull, seed) == 2);
    CHECK(independent_volume(hull, seed) == hull.normalized_volume());
  }
}

TEST_CASE("volume oracle agreement on the p3 dual polytope") {
  std::vector<IVec> pts;
  for (const auto& blk : p3_nabla_blocks())
    for (const auto& v : blk) pts.push_back(v);
  auto dd = LatticePolytope::from_points(3, pts);
  Int expect = dd.normalized_volume();
  for (unsigned long seed = 1; seed <= 5; ++seed) CHECK(independent_volume(dd, seed) == expect);
}

TEST_CASE("numeric constants have stable leading digits") {
  auto close = [](const Rat& a, const Rat& b) {
    Rat d = a - b;
    if (d < 0) d = -d;
    return d < Rat(1, 1000000000L);
  };
  // gamma = 0.5772156649..., log 2 = 0.6931471805..., zeta(3) = 1.2020569031...
  CHECK(close(numeric_const_gamma(50), Rat(5772156649L, 10000000000L)));
  CHECK(close(numeric_const_log2(50), Rat(6931471805L, 10000000000L)));
  CHECK(close(numeric_const_zeta(3, 50), Rat(12020569031L, 10000000000L)));
}

TEST_CASE("numeric gamma jet leading behavior") {
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, 35);
  Rat eps(Int(1), d);
  // 1/Gamma(eps u) ~ eps u: the constant term vanishes, the N-coefficient is 1
  auto jet = numeric_gamma_jet(Rat(0), 3, eps, false, 50);
  Rat tol(Int(1), Int(10) << 96);
  Rat c0 = jet[0] < 0 ? Rat(-jet[0]) : jet[0];
  CHECK(c0 < tol);
  Rat c1 = jet[1] - 1;
  if (c1 < 0) c1 = -c1;
  CHECK(c1 < tol);
}

}  // TEST_SUITE
