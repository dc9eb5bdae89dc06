#include "gkz/series.hpp"

#include <algorithm>
#include <set>

#include "gkz/cone.hpp"

namespace gkz {

long anticanonical_degree(const GkzSystem& g, const IVec& l) {
  Int d = 0;
  for (size_t c = 0; c < g.cols(); ++c)
    if (g.column_labels[c].second >= 1) d += l[c];
  return mpz_get_si(d.get_mpz_t());
}

namespace {

struct SupportSearch {
  const GkzSystem& g;
  long degmax;
  long max_neg;  // depth bound on the negative-entry total
  std::vector<size_t> free_cols;  // columns with j >= 1 in order
  std::vector<IVec> free_ray;     // the ray part of each free column
  Int max_ray_coord;
  std::vector<IVec> out;

  IVec value;     // current l over all columns
  IVec weighted;  // partial sum of l_{i,j} * rho_{i,j}
  long pos = 0, negs = 0;

  void prepare() {
    for (size_t c = 0; c < g.cols(); ++c) {
      if (g.column_labels[c].second == 0) continue;
      free_cols.push_back(c);
      IVec ray(g.n);
      for (size_t t = 0; t < g.n; ++t) {
        ray[t] = g.a.at(g.r + t, c);
        Int ax = abs(ray[t]);
        if (ax > max_ray_coord) max_ray_coord = ax;
      }
      free_ray.push_back(std::move(ray));
    }
  }

  void run() {
    prepare();
    value.assign(g.cols(), Int(0));
    weighted.assign(g.n, Int(0));
    dfs(0);
  }

  void dfs(size_t k) {
    // prune: remaining placeable mass cannot cancel the weighted partials
    long remaining = (degmax + max_neg - pos) + (max_neg - negs);
    for (size_t t = 0; t < g.n; ++t)
      if (abs(weighted[t]) > Int(remaining) * max_ray_coord) return;
    if (k == free_cols.size()) {
      if (!is_zero(weighted)) return;
      if (pos - negs < 0 || pos - negs > degmax) return;
      IVec l = value;
      // close the blocks: l_{i,0} = -sum_{j>=1} l_{i,j}
      for (size_t c = 0; c < g.cols(); ++c) {
        if (g.column_labels[c].second != 0) continue;
        size_t block = g.column_labels[c].first;
        Int s = 0;
        for (size_t d = 0; d < g.cols(); ++d)
          if (g.column_labels[d].first == block && g.column_labels[d].second >= 1) s += l[d];
        l[c] = -s;
      }
      out.push_back(std::move(l));
      return;
    }
    size_t col = free_cols[k];
    long lo = -(max_neg - negs), hi = degmax + max_neg - pos;
    for (long v = lo; v <= hi; ++v) {
      value[col] = v;
      long dp = v > 0 ? v : 0, dn = v < 0 ? -v : 0;
      pos += dp;
      negs += dn;
      for (size_t t = 0; t < g.n; ++t) weighted[t] += Int(v) * free_ray[k][t];
      // nef prune at block boundaries: E_i . l = -l_{i,0} >= 0 on the Mori cone
      bool feasible = true;
      if (k + 1 == free_cols.size() ||
          g.column_labels[free_cols[k + 1]].first != g.column_labels[col].first) {
        size_t block = g.column_labels[col].first;
        Int s = 0;
        for (size_t d = 0; d < g.cols(); ++d)
          if (g.column_labels[d].first == block && g.column_labels[d].second >= 1) s += value[d];
        if (s < 0) feasible = false;
      }
      if (feasible) dfs(k + 1);
      pos -= dp;
      negs -= dn;
      for (size_t t = 0; t < g.n; ++t) weighted[t] -= Int(v) * free_ray[k][t];
    }
    value[col] = 0;
  }
};

}  // namespace

long negative_depth(const GkzSystem& g, const IVec& l) {
  Int d = 0;
  for (size_t c = 0; c < g.cols(); ++c)
    if (g.column_labels[c].second >= 1 && l[c] < 0) d -= l[c];
  return mpz_get_si(d.get_mpz_t());
}

std::vector<IVec> enumerate_kernel_box(const GkzSystem& g, long degmax, long depth_bound) {
  if (degmax < 0) throw Error("enumerate_kernel_box: degmax must be >= 0");
  SupportSearch search{g, degmax, depth_bound, {}, {}, Int(1), {}, {}, {}, 0, 0};
  search.run();
  std::vector<IVec> result;
  for (auto& l : search.out) {
    if (!is_zero(g.a.mul(l))) continue;  // kernel check (block rows close by construction)
    result.push_back(std::move(l));
  }
  return result;
}

std::vector<CurveClassLift> enumerate_support(const CohomRing& ring, const NefPartitionData& npd,
                                              const GkzSystem& g, long degmax) {
  auto gens = mori_generators(ring, npd);
  std::vector<CurveClassLift> result;
  for (auto& l : enumerate_kernel_box(g, degmax, (long)ring.top_degree())) {
    if (!in_cone_hull(gens, l)) continue;
    result.push_back(std::move(l));
  }
  std::sort(result.begin(), result.end(), [&](const IVec& a, const IVec& b) {
    long da = anticanonical_degree(g, a), db = anticanonical_degree(g, b);
    if (da != db) return da < db;
    return lex_less(a, b);
  });
  return result;
}

ConstClass coefficient_O_classes(const CohomRing& ring, const GkzSystem& g, const IVec& l,
                                 const std::vector<CohomClass>& numerator_class,
                                 const std::vector<CohomClass>& column_class) {
  size_t ord = ring.top_degree() + 1;
  ConstClass acc = const_class_unit(ring);
  for (size_t i = 0; i < g.r; ++i) {
    Int l_i0 = l[g.column_of(i + 1, 0)];
    Jet jet = gamma_ratio_half_jet(Rat(1, 2) - Rat(l_i0), ord);
    ConstClass factor = eval_jet(ring, jet, numerator_class[i]);
    if (mpz_odd_p(l_i0.get_mpz_t())) {
      for (auto& x : factor) x = x * Rat(-1);
    }
    acc = mul(ring, acc, factor);
    if (is_zero(acc)) return acc;
  }
  for (size_t c = 0; c < g.cols(); ++c) {
    const auto& [i, j] = g.column_labels[c];
    if (j == 0) continue;
    Jet jet = reciprocal_gamma_jet(Rat(1) + Rat(l[c]), ord);
    acc = mul(ring, acc, eval_jet(ring, jet, column_class[c]));
    if (is_zero(acc)) return acc;
  }
  return acc;
}

ConstClass coefficient_O(const CohomRing& ring, const NefPartitionData& npd, const GkzSystem& g,
                         const IVec& l) {
  std::vector<CohomClass> numerator(g.r), columns(g.cols());
  for (size_t i = 0; i < g.r; ++i)
    numerator[i] = ring.scale(Rat(-1), part_zero_class(ring, npd, i));  // -D_{i,0}
  for (size_t c = 0; c < g.cols(); ++c) {
    const auto& [i, j] = g.column_labels[c];
    columns[c] = (j == 0) ? ring.zero() : ring.divisor_class(npd.parts[i - 1][j - 1]);
  }
  return coefficient_O_classes(ring, g, l, numerator, columns);
}

CohomSeries assemble_B(const CohomRing& ring, const NefPartitionData& npd, const GkzSystem& g,
                       long degmax) {
  CohomSeries series;
  series.degmax = degmax;
  series.alpha.assign(g.cols(), Rat(0));
  for (size_t c = 0; c < g.cols(); ++c)
    if (g.column_labels[c].second == 0) series.alpha[c] = Rat(-1, 2);
  series.support = enumerate_support(ring, npd, g, degmax);
  for (const auto& l : series.support) {
    ConstClass coeff = coefficient_O(ring, npd, g, l);
    if (!is_zero(coeff)) series.terms.emplace(l, std::move(coeff));
  }
  return series;
}

namespace {

// all lambda-multi-indices e with D^e nonzero, paired with D^e and 1/e!
struct LogExpansion {
  std::vector<std::vector<unsigned>> exps;
  std::vector<CohomClass> classes;
  std::vector<Rat> inv_factorial;
};

void log_dfs(const CohomRing& ring, const std::vector<CohomClass>& col_class, size_t start,
             std::vector<unsigned>& e, const CohomClass& cls, const Rat& inv_fact, size_t depth,
             LogExpansion& out) {
  out.exps.push_back(e);
  out.classes.push_back(cls);
  out.inv_factorial.push_back(inv_fact);
  if (depth == ring.top_degree()) return;
  for (size_t c = start; c < col_class.size(); ++c) {
    CohomClass next = ring.mul(cls, col_class[c]);
    if (ring.is_zero_class(next)) continue;
    ++e[c];
    log_dfs(ring, col_class, c, e, next, inv_fact / Rat((long)e[c]), depth + 1, out);
    --e[c];
  }
}

LogExpansion expand_log_factor(const CohomRing& ring, const NefPartitionData& npd,
                               const GkzSystem& g) {
  std::vector<CohomClass> col_class(g.cols());
  for (size_t c = 0; c < g.cols(); ++c) {
    const auto& [i, j] = g.column_labels[c];
    col_class[c] = (j == 0) ? part_zero_class(ring, npd, i - 1)
                            : ring.divisor_class(npd.parts[i - 1][j - 1]);
  }
  LogExpansion out;
  std::vector<unsigned> e(g.cols(), 0);
  log_dfs(ring, col_class, 0, e, ring.unit(), Rat(1), 0, out);
  return out;
}

size_t min_degree(const CohomRing& ring, const ConstClass& c) {
  size_t d = ring.top_degree() + 1;
  for (size_t b = 0; b < c.size(); ++b)
    if (!c[b].is_zero()) d = std::min(d, ring.basis_degree(b));
  return d;
}

}  // namespace

SolutionBasis extract_solutions(const CohomRing& ring, const NefPartitionData& npd,
                                const GkzSystem& g, const CohomSeries& series) {
  LogExpansion log = expand_log_factor(ring, npd, g);
  SolutionBasis basis;
  basis.alpha = series.alpha;
  basis.support = series.support;
  basis.solutions.resize(ring.dimension());
  for (size_t b = 0; b < ring.dimension(); ++b) {
    basis.solutions[b].basis_index = b;
    basis.solutions[b].basis_label = ring.basis_label(b);
    basis.solutions[b].degree = ring.basis_degree(b);
  }
  for (const auto& [l, coeff] : series.terms) {
    size_t cmin = min_degree(ring, coeff);
    for (size_t t = 0; t < log.exps.size(); ++t) {
      size_t edeg = 0;
      for (unsigned x : log.exps[t]) edeg += x;
      if (cmin + edeg > ring.top_degree()) continue;
      ConstClass prod = mul(ring, coeff, log.classes[t]);
      for (size_t b = 0; b < prod.size(); ++b) {
        if (prod[b].is_zero()) continue;
        basis.solutions[b].terms.push_back(LogTerm{l, log.exps[t], prod[b] * log.inv_factorial[t]});
      }
    }
  }
  return basis;
}

namespace {

using TermKey = std::pair<IVec, std::vector<unsigned>>;
using TermMap = std::map<TermKey, ConstElem>;

void accumulate(TermMap& m, TermKey key, const ConstElem& v) {
  if (v.is_zero()) return;
  ConstElem& slot = m[key];
  slot += v;
  if (slot.is_zero()) m.erase(key);
}

// single formal derivative d_{col} on x^(l+alpha) * lambda^e terms
TermMap apply_derivative(const TermMap& in, size_t col, const QVec& alpha) {
  TermMap out;
  for (const auto& [key, coeff] : in) {
    const auto& [l, e] = key;
    IVec l2 = l;
    l2[col] -= 1;
    Rat exponent = Rat(l[col]) + alpha[col];
    if (exponent != 0) accumulate(out, {l2, e}, coeff * exponent);
    if (e[col] > 0) {
      auto e2 = e;
      e2[col] -= 1;
      accumulate(out, {l2, e2}, coeff * Rat((long)e[col]));
    }
  }
  return out;
}

TermMap apply_monomial_derivative(TermMap terms, const IVec& nu, const QVec& alpha) {
  for (size_t col = 0; col < nu.size(); ++col)
    for (Int k = 0; k < nu[col]; ++k) terms = apply_derivative(terms, col, alpha);
  return terms;
}

}  // namespace

AnnihilationReport verify_annihilation(const SolutionBasis& sols, const GkzSystem& g, long degmax) {
  AnnihilationReport rep;
  rep.ok = true;
  auto eulers = euler_operators(g);
  std::vector<BoxOperator> boxes;
  if (degmax >= 1) boxes = box_operators_up_to(g, degmax);
  std::set<IVec> window(sols.support.begin(), sols.support.end());

  for (const auto& sol : sols.solutions) {
    TermMap terms;
    for (const auto& t : sol.terms) accumulate(terms, {t.l, t.log_exp}, t.coeff);

    for (const auto& op : eulers) {
      TermMap residual;
      for (const auto& [key, coeff] : terms) {
        const auto& [l, e] = key;
        Rat euler_scalar = -op.constant;
        for (size_t col = 0; col < g.cols(); ++col)
          if (op.coeffs[col] != 0) euler_scalar += Rat(op.coeffs[col]) * (Rat(l[col]) + sols.alpha[col]);
        if (euler_scalar != 0) accumulate(residual, key, coeff * euler_scalar);
        for (size_t col = 0; col < g.cols(); ++col) {
          if (op.coeffs[col] == 0 || e[col] == 0) continue;
          auto e2 = e;
          e2[col] -= 1;
          accumulate(residual, {l, e2}, coeff * (Rat(op.coeffs[col]) * Rat((long)e[col])));
        }
      }
      ++rep.euler_checked;
      if (!residual.empty()) {
        rep.ok = false;
        const auto& [key, val] = *residual.begin();
        rep.failures.push_back("Euler operator " + std::to_string(op.index) + " on solution '" +
                               sol.basis_label + "': residual " + val.to_string() + " at l = " +
                               to_string(key.first));
      }
    }

    for (const auto& box : boxes) {
      TermMap plus = apply_monomial_derivative(terms, box.nu_plus, sols.alpha);
      TermMap minus = apply_monomial_derivative(terms, box.nu_minus, sols.alpha);
      std::set<TermKey> in_window_sources;
      for (const TermMap* branch : {&plus, &minus})
        for (const auto& [key, coeff] : *branch)
          if (window.count(add(key.first, box.nu_plus)) && window.count(add(key.first, box.nu_minus)))
            in_window_sources.insert(key);
      for (const auto& [key, coeff] : minus) accumulate(plus, key, coeff * Rat(-1));
      ++rep.box_checked;
      for (const auto& key : in_window_sources)
        if (!plus.count(key)) ++rep.interior_cancellations;
      for (const auto& [key, coeff] : plus) {
        const auto& [u, e] = key;
        // assert cancellation only when both source exponents lie inside the
        // series' truncation window; anything else is a boundary term
        if (window.count(add(u, box.nu_plus)) && window.count(add(u, box.nu_minus))) {
          rep.ok = false;
          rep.failures.push_back("box operator residual inside the truncation window on solution '" +
                                 sol.basis_label + "' at exponent " + to_string(u) + ": " +
                                 coeff.to_string());
        } else {
          ++rep.boundary_terms;
        }
      }
    }
  }
  return rep;
}

unsigned series_gamma_degree(const CohomSeries& series) {
  unsigned d = 0;
  for (const auto& [l, coeff] : series.terms) d = std::max(d, gamma_degree(coeff));
  return d;
}

std::map<IVec, Rat> degree_zero_coefficients(const CohomSeries& series) {
  std::map<IVec, Rat> out;
  for (const auto& [l, coeff] : series.terms) {
    if (coeff.empty() || coeff[0].is_zero()) continue;
    if (!coeff[0].is_rational())
      throw Error("degree-0 coefficient carries formal constants (grading violated)");
    out[l] = coeff[0].rational_part();
  }
  return out;
}

}  // namespace gkz
