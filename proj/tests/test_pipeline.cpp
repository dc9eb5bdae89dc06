// End-to-end pipeline runs on instances shaped differently from the two
// built-ins: a two-part product geometry, a surface with crepant walls, and
// a unimodular change of coordinates.

#include <set>

#include "doctest.h"
#include "data_p3.hpp"
#include "gkz/instances.hpp"
#include "gkz/oracles.hpp"
#include "gkz/series.hpp"
#include "test_util.hpp"

using namespace gkz;
using namespace gkz_test;

namespace {

struct Run {
  NefPartitionData npd;
  GkzSystem g;
  CohomRing ring;
  CohomSeries series;
  SolutionBasis sols;
};

Run run_pipeline(const Fan& fan, const std::vector<std::vector<size_t>>& parts, long degmax) {
  Run r{validate_nef_partition(fan, parts), {}, {}, {}, {}};
  r.g = build_cayley_gkz(r.npd);
  r.ring = CohomRing::build(r.npd.fan);
  r.series = assemble_B(r.ring, r.npd, r.g, degmax);
  r.sols = extract_solutions(r.ring, r.npd, r.g, r.series);
  return r;
}

NefPartitionData p1xp1_npd() {
  auto square = LatticePolytope::from_points(
      2, {iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})});
  Fan f = mpcp_fan(square);
  std::vector<size_t> horizontal, vertical;
  for (size_t i = 0; i < f.rays.size(); ++i)
    (f.rays[i][0] != 0 ? horizontal : vertical).push_back(i);
  return validate_nef_partition(f, {horizontal, vertical});
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("two-part product geometry on P1 x P1") {
  auto npd = p1xp1_npd();
  Run r = run_pipeline(npd.fan, npd.parts, 4);

  CHECK(r.g.r == 2);
  CHECK(r.g.n == 2);
  CHECK(r.g.cols() == 6);
  CHECK(holonomic_rank(r.g, r.npd) == 4);
  CHECK(r.ring.dimension() == 4);
  CHECK(verify_union_cones(r.g, r.npd).ok);

  auto cert = non_resonance_check(r.g);
  CHECK(cert.non_resonant);
  for (const auto& p : cert.pairings) CHECK(p.pairing == Rat(-1, 2));

  // the power-series solution factors into two P^1 series
  auto deg0 = degree_zero_coefficients(r.series);
  IVec l10(6, Int(0)), l01(6, Int(0)), l11(6, Int(0));
  size_t b1 = r.g.column_of(1, 0), b2 = r.g.column_of(2, 0);
  l10[b1] = -2; l10[b1 + 1] = 1; l10[b1 + 2] = 1;
  l01[b2] = -2; l01[b2 + 1] = 1; l01[b2 + 2] = 1;
  l11 = add(l10, l01);
  CHECK(deg0.at(IVec(6, Int(0))) == Rat(1));
  CHECK(deg0.at(l10) == Rat(3, 4));
  CHECK(deg0.at(l01) == Rat(3, 4));
  CHECK(deg0.at(l11) == Rat(9, 16));

  CHECK(deg0 == binomial_period(sections_from_partition(r.npd), 4));

  CHECK(r.sols.solutions.size() == 4);
  CHECK(series_gamma_degree(r.series) == 0);
  auto rep = verify_annihilation(r.sols, r.g, 4);
  CHECK(rep.ok);
  CHECK(rep.interior_cancellations > 0);

  // Batyrev-Borisov double dual returns the same Minkowski decomposition
  auto dd = dual_nef_partition(dual_nef_partition(r.npd));
  REQUIRE(dd.r() == 2);
  for (size_t i = 0; i < 2; ++i) CHECK(dd.delta_parts[i] == r.npd.delta_parts[i]);
}

TEST_CASE("surface with crepant walls: the refined square fan") {
  auto cross = LatticePolytope::from_points(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})});
  Fan f = mpcp_fan(cross);  // 8 rays, 8 cones on the square
  std::vector<size_t> all(f.rays.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  Run r = run_pipeline(f, {all}, 3);

  CHECK(holonomic_rank(r.g, r.npd) == 8);
  CHECK(r.ring.dimension() == 8);
  CHECK(verify_union_cones(r.g, r.npd).ok);
  auto cert = non_resonance_check(r.g);
  CHECK(cert.non_resonant);
  for (const auto& p : cert.pairings) CHECK(p.pairing == Rat(-1, 2));

  // four crepant walls: anticanonical-degree-0 Mori generators exist
  auto gens = mori_generators(r.ring, r.npd);
  size_t crepant = 0;
  for (const auto& l : gens)
    if (anticanonical_degree(r.g, l) == 0) ++crepant;
  CHECK(crepant == 4);

  // the series carries honest degree-0 terms beyond l = 0
  size_t deg0_terms = 0;
  for (const auto& [l, c] : r.series.terms)
    if (anticanonical_degree(r.g, l) == 0 && !is_zero(l)) ++deg0_terms;
  CHECK(deg0_terms > 0);

  CHECK(series_gamma_degree(r.series) == 0);
  CHECK(r.sols.solutions.size() == 8);
  auto rep = verify_annihilation(r.sols, r.g, 3);
  CHECK(rep.ok);
  CHECK(rep.interior_cancellations > 0);
  CHECK(degree_zero_coefficients(r.series) ==
        binomial_period(sections_from_partition(r.npd), 3));
}

TEST_CASE("pipeline is invariant under a unimodular change of coordinates") {
  auto base = p1xp1_npd();
  Run r0 = run_pipeline(base.fan, base.parts, 3);
  auto cert0 = non_resonance_check(r0.g);
  auto deg00 = degree_zero_coefficients(r0.series);

  Rng rng(2024);
  for (int t = 0; t < 3; ++t) {
    IntMatrix u = random_unimodular(2, rng);
    Fan fan = base.fan;
    for (auto& ray : fan.rays) ray = u.mul(ray);
    Run r = run_pipeline(fan, base.parts, 3);
    CHECK(holonomic_rank(r.g, r.npd) == 4);
    auto cert = non_resonance_check(r.g);
    CHECK(cert.non_resonant == cert0.non_resonant);
    CHECK(cert.pairings.size() == cert0.pairings.size());
    // ker(A) is unchanged, so the degree-0 period coefficients match exactly
    CHECK(degree_zero_coefficients(r.series) == deg00);
    CHECK(verify_annihilation(r.sols, r.g, 3).ok);
  }
}

TEST_CASE("p3 facet count matches the Cartier-data structure") {
  auto npd = realize_instance(builtin_instance("p3-8planes"));
  GkzSystem g = build_cayley_gkz(npd);
  auto normals = facet_normals_RA(g);
  // each part's divisor polytope is a segment, so each support function has
  // exactly two linear pieces: 4 parts x 2 = 8 facets
  CHECK(normals.size() == 8);
  for (size_t i = 0; i < npd.r(); ++i) {
    std::set<IVec> pieces(npd.cartier[i].per_cone.begin(), npd.cartier[i].per_cone.end());
    CHECK(pieces.size() == 2);
    CHECK(npd.delta_parts[i].vertices().size() == 2);
  }
}

}  // TEST_SUITE
