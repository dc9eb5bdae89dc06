// gkz: construct and check the GKZ system of a nef-partition, and compute its
// Frobenius solution basis.
//
// Subcommands:
//   dualize  - Batyrev-Borisov dual nef-partition, with reflexivity verdicts
//   build    - the Cayley matrix A, beta, and column labels
//   check    - facets of R+A, non-resonance certificate, rank two ways,
//              union-of-cones verification
//   solve    - truncated cohomology-valued series and the solution basis
//   verify   - operator annihilation plus the binomial-period oracle
//   oracle   - the oracle computations alone (period series, seeded volumes)

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "gkz/json_io.hpp"
#include "gkz/oracles.hpp"

using namespace gkz;

namespace {

struct CommonOpts {
  std::string instance = "p1-elliptic";
  long order = -1;
  unsigned long seed = 1;
  std::string json_out;
  std::string beta_override;
  std::string eval_point;
};

InstanceSpec load_instance(const CommonOpts& opts) {
  if (is_builtin_instance(opts.instance)) {
    InstanceSpec spec = builtin_instance(opts.instance);
    if (opts.order >= 0) spec.degmax = opts.order;
    spec.seed = opts.seed;
    return spec;
  }
  std::ifstream in(opts.instance);
  if (!in) throw Error("cannot open instance file: " + opts.instance);
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& e) {
    throw Error("instance JSON parse error: " + std::string(e.what()));
  }
  InstanceSpec spec = instance_from_json(j);
  if (opts.order >= 0) spec.degmax = opts.order;
  return spec;
}

void apply_beta_override(GkzSystem& g, const std::string& text) {
  if (text.empty()) return;
  std::vector<Rat> values;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) values.push_back(parse_rat(cur));
      cur.clear();
    } else
      cur += ch;
  }
  if (values.size() == 1)
    g.beta.assign(g.rows(), values[0]);
  else if (values.size() == g.rows())
    g.beta = QVec(values.begin(), values.end());
  else
    throw Error("--beta expects 1 or " + std::to_string(g.rows()) + " comma-separated rationals");
}

int emit(const json& report, const CommonOpts& opts, bool pass) {
  std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!opts.json_out.empty()) {
    std::ofstream out(opts.json_out);
    if (!out) throw Error("cannot write " + opts.json_out);
    out << text << "\n";
  }
  return pass ? 0 : 1;
}

json polytope_list_json(const std::vector<LatticePolytope>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(polytope_to_json(p));
  return a;
}

int cmd_dualize(const CommonOpts& opts) {
  InstanceSpec spec = load_instance(opts);
  NefPartitionData npd = realize_instance(spec);
  NefPartitionData dual = dual_nef_partition(npd);
  LatticePolytope nabla = npd.nabla_parts[0];
  for (size_t i = 1; i < npd.r(); ++i) nabla = minkowski_sum(nabla, npd.nabla_parts[i]);
  json j;
  j["instance"] = spec.name;
  j["nabla_summands"] = polytope_list_json(npd.nabla_parts);
  j["nabla_reflexive"] = nabla.is_reflexive();
  j["dual"] = nef_partition_to_json(dual);
  j["dual_divisor_polytopes"] = polytope_list_json(dual.delta_parts);
  j["dual_anticanonical_reflexive"] = dual.delta.is_reflexive();
  return emit(j, opts, true);
}

int cmd_build(const CommonOpts& opts) {
  InstanceSpec spec = load_instance(opts);
  NefPartitionData npd = realize_instance(spec);
  GkzSystem g = build_cayley_gkz(npd);
  json j;
  j["instance"] = spec.name;
  j["A"] = gkz_report_json(g, NonResonanceCertificate{}, Int(0))["A"];
  j["beta"] = json::array();
  for (const auto& b : g.beta) j["beta"].push_back(rat_str(b));
  j["column_labels"] = json::array();
  for (const auto& [i, jj] : g.column_labels) j["column_labels"].push_back({i, jj});
  j["assumption_regime"] = npd.fan_smooth ? "smooth" : "lattice-generating";
  return emit(j, opts, true);
}

int cmd_check(const CommonOpts& opts) {
  InstanceSpec spec = load_instance(opts);
  NefPartitionData npd = realize_instance(spec);
  GkzSystem g = build_cayley_gkz(npd);
  apply_beta_override(g, opts.beta_override);
  NonResonanceCertificate cert = non_resonance_check(g);
  Int rank = holonomic_rank(g, npd);
  UnionConesReport union_rep = verify_union_cones(g, npd);

  json j = gkz_report_json(g, cert, rank);
  j["instance"] = spec.name;
  j["assumption_regime"] = npd.fan_smooth ? "smooth" : "lattice-generating";
  j["max_cones"] = npd.fan.max_cones.size();
  j["union_cones_ok"] = union_rep.ok;
  j["union_cones_failures"] = union_rep.failures;
  bool structural = union_rep.ok && rank == Int(npd.fan.max_cones.size());
  // a deliberate beta override reports its verdict without failing the run
  bool pass = structural && (cert.non_resonant || !opts.beta_override.empty());
  return emit(j, opts, pass);
}

// double-precision evaluation of the log-series at a positive point, with
// lambda_{i,j} = log x_{i,j}; a convenience only, never used in assertions
json evaluate_solutions(const SolutionBasis& sols, const std::string& point_text) {
  std::vector<double> x;
  std::string cur;
  for (char ch : point_text + ",") {
    if (ch == ',') {
      if (!cur.empty()) x.push_back(std::stod(cur));
      cur.clear();
    } else
      cur += ch;
  }
  if (x.size() == 1) x.assign(sols.alpha.size(), x[0]);
  if (x.size() != sols.alpha.size())
    throw Error("--eval expects 1 or " + std::to_string(sols.alpha.size()) + " positive values");
  for (double v : x)
    if (!(v > 0)) throw Error("--eval requires positive coordinates");

  std::vector<double> consts = {numeric_const_gamma(30).get_d(), numeric_const_log2(30).get_d()};
  for (unsigned k = 2; k <= 12; ++k) consts.push_back(numeric_const_zeta(k, 30).get_d());

  json values = json::array();
  for (const auto& s : sols.solutions) {
    double total = 0;
    for (const auto& t : s.terms) {
      double term = t.coeff.eval_double(consts);
      for (size_t c = 0; c < x.size(); ++c) {
        double e = t.l[c].get_d() + sols.alpha[c].get_d();
        if (e != 0) term *= std::pow(x[c], e);
        for (unsigned rep = 0; rep < t.log_exp[c]; ++rep) term *= std::log(x[c]);
      }
      total += term;
    }
    values.push_back(total);
  }
  return values;
}

int cmd_solve(const CommonOpts& opts) {
  InstanceSpec spec = load_instance(opts);
  NefPartitionData npd = realize_instance(spec);
  GkzSystem g = build_cayley_gkz(npd);
  CohomRing ring = CohomRing::build(npd.fan);
  long degmax = effective_degmax(spec, npd);
  CohomSeries series = assemble_B(ring, npd, g, degmax);
  SolutionBasis sols = extract_solutions(ring, npd, g, series);
  json j = solutions_to_json(sols);
  j["instance"] = spec.name;
  j["order"] = degmax;
  j["rank"] = holonomic_rank(g, npd).get_si();
  j["solution_count"] = sols.solutions.size();
  j["gamma_degree"] = series_gamma_degree(series);
  if (!opts.eval_point.empty()) {
    j["eval_point"] = opts.eval_point;
    j["eval_values"] = evaluate_solutions(sols, opts.eval_point);
  }
  return emit(j, opts, sols.solutions.size() == ring.dimension());
}

int cmd_verify(const CommonOpts& opts) {
  InstanceSpec spec = load_instance(opts);
  NefPartitionData npd = realize_instance(spec);
  GkzSystem g = build_cayley_gkz(npd);
  CohomRing ring = CohomRing::build(npd.fan);
  long degmax = effective_degmax(spec, npd);
  CohomSeries series = assemble_B(ring, npd, g, degmax);
  SolutionBasis sols = extract_solutions(ring, npd, g, series);
  AnnihilationReport rep = verify_annihilation(sols, g, degmax);

  auto from_series = degree_zero_coefficients(series);
  auto from_oracle = binomial_period(sections_from_partition(npd), degmax);
  bool oracle_match = from_series == from_oracle;

  json j;
  j["instance"] = spec.name;
  j["order"] = degmax;
  j["euler_operators_checked"] = rep.euler_checked;
  j["box_operators_checked"] = rep.box_checked;
  j["boundary_terms"] = rep.boundary_terms;
  j["interior_cancellations"] = rep.interior_cancellations;
  j["annihilation_ok"] = rep.ok;
  j["annihilation_failures"] = rep.failures;
  j["oracle_match"] = oracle_match;
  j["gamma_degree"] = series_gamma_degree(series);
  if (degmax == 0) j["warning"] = "order 0: constant truncations only, verification is vacuous";
  bool pass = rep.ok && oracle_match && series_gamma_degree(series) == 0;
  return emit(j, opts, pass);
}

int cmd_oracle(const CommonOpts& opts) {
  InstanceSpec spec = load_instance(opts);
  NefPartitionData npd = realize_instance(spec);
  long degmax = effective_degmax(spec, npd);
  auto period = binomial_period(sections_from_partition(npd), degmax);
  json j;
  j["instance"] = spec.name;
  j["order"] = degmax;
  j["period_terms"] = json::array();
  for (const auto& [l, c] : period) {
    json term;
    term["l"] = json::array();
    for (const auto& x : l) term["l"].push_back(x.get_si());
    term["coeff"] = rat_str(c);
    j["period_terms"].push_back(term);
  }
  json vols = json::array();
  GkzSystem g = build_cayley_gkz(npd);
  std::vector<IVec> pts = {IVec(g.rows(), Int(0))};
  for (size_t c = 0; c < g.cols(); ++c) pts.push_back(g.a.col(c));
  auto hull = LatticePolytope::from_points(g.rows(), pts);
  for (unsigned long s = opts.seed; s < opts.seed + 5; ++s) {
    json v;
    v["seed"] = s;
    v["volume"] = independent_volume(hull, s).get_si();
    vols.push_back(v);
  }
  j["cayley_hull_volumes"] = vols;
  j["normalized_volume"] = hull.normalized_volume().get_si();
  bool pass = true;
  for (const auto& v : vols) pass = pass && v["volume"] == j["normalized_volume"];
  j["volumes_agree"] = pass;
  return emit(j, opts, pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKZ systems of nef-partitions: construction, non-resonance, rank, and Frobenius solutions"};
  app.require_subcommand(1);

  CommonOpts opts;
  auto add_common = [&](CLI::App* sub, bool with_beta = false) {
    sub->add_option("--instance", opts.instance, "built-in name (p1-elliptic, p3-8planes) or JSON file");
    sub->add_option("--order", opts.order, "series truncation order (default: 4 if dim<=2 else 2)");
    sub->add_option("--seed", opts.seed, "seed for the randomized volume oracle");
    sub->add_option("--json", opts.json_out, "also write the report to this file");
    if (with_beta) sub->add_option("--beta", opts.beta_override, "override beta (single rational or comma list)");
  };

  auto* dualize = app.add_subcommand("dualize", "dual nef-partition and reflexivity verdicts");
  add_common(dualize);
  auto* build = app.add_subcommand("build", "Cayley matrix A and beta");
  add_common(build);
  auto* check = app.add_subcommand("check", "facets, non-resonance, rank, union-of-cones");
  add_common(check, true);
  auto* solve = app.add_subcommand("solve", "Frobenius solution basis");
  add_common(solve);
  solve->add_option("--eval", opts.eval_point,
                    "numerically evaluate the solutions at x (single value or comma list)");
  auto* verify = app.add_subcommand("verify", "annihilation and oracle report");
  add_common(verify);
  auto* oracle = app.add_subcommand("oracle", "binomial period and seeded volume oracles");
  add_common(oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dualize->parsed()) return cmd_dualize(opts);
    if (build->parsed()) return cmd_build(opts);
    if (check->parsed()) return cmd_check(opts);
    if (solve->parsed()) return cmd_solve(opts);
    if (verify->parsed()) return cmd_verify(opts);
    if (oracle->parsed()) return cmd_oracle(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
