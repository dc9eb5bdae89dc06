#include "gkz/oracles.hpp"

#include <mpfr.h>

#include <algorithm>

#include "gkz/matrix.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

std::vector<LaurentSection> sections_from_partition(const NefPartitionData& npd) {
  std::vector<LaurentSection> sections;
  for (size_t i = 0; i < npd.r(); ++i) {
    LaurentSection s;
    s.part_index = i;
    s.exponents.push_back(IVec(npd.fan.dim, Int(0)));
    for (size_t idx : npd.parts[i]) s.exponents.push_back(npd.fan.rays[idx]);
    sections.push_back(std::move(s));
  }
  return sections;
}

namespace {

// monomial in the non-constant coefficients of one section
using MultiIndex = std::vector<unsigned>;

struct SectionExpansion {
  // t-exponent -> (multi-index over the j>=1 slots -> coefficient)
  std::map<IVec, std::map<MultiIndex, Rat>> by_t;
};

Rat binom_minus_half(unsigned m) {
  // C(-1/2, m) = prod_{t<m} (-1/2 - t) / m!
  Rat num = 1;
  for (unsigned t = 0; t < m; ++t) num *= Rat(-1, 2) - Rat(t);
  Rat fact = 1;
  for (unsigned t = 2; t <= m; ++t) fact *= Rat(t);
  return num / fact;
}

void multinomials(size_t slots, unsigned total, MultiIndex& cur, size_t pos,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == slots) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= total; ++v) {
    cur[pos] = v;
    multinomials(slots, total - v, cur, pos + 1, out);
  }
}

SectionExpansion expand_section(const LaurentSection& s, long degmax, size_t n) {
  if (s.exponents.empty() || !is_zero(s.exponents[0]))
    throw Error("binomial_period: section is missing the constant exponent");
  size_t slots = s.exponents.size() - 1;
  SectionExpansion exp;
  for (unsigned m = 0; m <= (unsigned)degmax; ++m) {
    Rat binom = binom_minus_half(m);
    Rat mfact = 1;
    for (unsigned t = 2; t <= m; ++t) mfact *= Rat(t);
    std::vector<MultiIndex> parts;
    if (slots == 0) {
      if (m == 0) parts.push_back({});
    } else {
      MultiIndex cur(slots, 0);
      multinomials(slots, m, cur, 0, parts);
    }
    for (const auto& mi : parts) {
      IVec texp(n, Int(0));
      Rat coeff = binom * mfact;  // binom(-1/2, m) * m! / prod(mi!)
      for (size_t j = 0; j < slots; ++j) {
        for (unsigned t = 2; t <= mi[j]; ++t) coeff /= Rat(t);
        for (size_t k = 0; k < n; ++k) texp[k] += Int(mi[j]) * s.exponents[j + 1][k];
      }
      exp.by_t[texp][mi] += coeff;
    }
  }
  return exp;
}

unsigned multi_total(const MultiIndex& m) {
  unsigned t = 0;
  for (unsigned v : m) t += v;
  return t;
}

}  // namespace

std::map<IVec, Rat> binomial_period(const std::vector<LaurentSection>& sections, long degmax) {
  if (sections.empty()) throw Error("binomial_period: no sections");
  if (degmax < 0) throw Error("binomial_period: degmax must be >= 0");
  size_t n = sections[0].exponents[0].size();

  // combined monomial = concatenation of the per-section multi-indices
  std::map<IVec, std::map<std::vector<MultiIndex>, Rat>> acc;
  acc[IVec(n, Int(0))][{}] = 1;
  for (const auto& s : sections) {
    SectionExpansion exp = expand_section(s, degmax, n);
    std::map<IVec, std::map<std::vector<MultiIndex>, Rat>> next;
    for (const auto& [t1, monos1] : acc)
      for (const auto& [mi1, c1] : monos1) {
        unsigned deg1 = 0;
        for (const auto& m : mi1) deg1 += multi_total(m);
        for (const auto& [t2, monos2] : exp.by_t)
          for (const auto& [mi2, c2] : monos2) {
            if (deg1 + multi_total(mi2) > (unsigned)degmax) continue;
            auto key = mi1;
            key.push_back(mi2);
            next[add(t1, t2)][key] += c1 * c2;
          }
      }
    acc = std::move(next);
  }

  std::map<IVec, Rat> out;
  auto it = acc.find(IVec(n, Int(0)));
  if (it == acc.end()) return out;
  for (const auto& [mis, coeff] : it->second) {
    if (coeff == 0) continue;
    IVec l;
    for (const auto& mi : mis) {
      Int block_sum = 0;
      for (unsigned v : mi) block_sum += v;
      l.push_back(-block_sum);  // l_{i,0}
      for (unsigned v : mi) l.push_back(Int(v));
    }
    out[l] += coeff;
  }
  return out;
}

Int independent_volume(const LatticePolytope& p, unsigned long seed) {
  const auto& verts = p.vertices();
  if (p.affine_dim() != p.dim()) throw Error("independent_volume: polytope is not full-dimensional");
  auto order = seeded_insertion_order(verts, seed);
  auto simplices = placing_triangulation(verts, order);
  Int vol = 0;
  for (const auto& s : simplices) {
    std::vector<IVec> rows;
    for (size_t k = 1; k < s.size(); ++k) rows.push_back(sub(verts[s[k]], verts[s[0]]));
    vol += abs(determinant(IntMatrix::from_rows(rows)));
  }
  return vol;
}

namespace {

struct MpfrValue {
  mpfr_t v;
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
};

Rat mpfr_to_rat(const mpfr_t v) {
  Rat out;
  mpfr_get_q(out.get_mpq_t(), v);
  return out;
}

void rat_to_mpfr(mpfr_t out, const Rat& r) {
  mpfr_set_q(out, r.get_mpq_t(), MPFR_RNDN);
}

mpfr_prec_t prec_for_digits(long digits) { return (mpfr_prec_t)(digits * 4 + 64); }

}  // namespace

Rat numeric_const_gamma(long digits) {
  MpfrValue x(prec_for_digits(digits));
  mpfr_const_euler(x.v, MPFR_RNDN);
  return mpfr_to_rat(x.v);
}

Rat numeric_const_log2(long digits) {
  MpfrValue x(prec_for_digits(digits));
  mpfr_const_log2(x.v, MPFR_RNDN);
  return mpfr_to_rat(x.v);
}

Rat numeric_const_zeta(unsigned k, long digits) {
  MpfrValue x(prec_for_digits(digits));
  mpfr_zeta_ui(x.v, k, MPFR_RNDN);
  return mpfr_to_rat(x.v);
}

namespace {

// f(s) = 1/Gamma(a+s) or Gamma(a+s)/Gamma(1/2), at precision prec
void eval_f(mpfr_t out, const Rat& a, const Rat& s, bool half_ratio, mpfr_prec_t prec) {
  MpfrValue arg(prec), g(prec), half(prec), gh(prec);
  rat_to_mpfr(arg.v, Rat(a + s));
  mpfr_gamma(g.v, arg.v, MPFR_RNDN);
  if (half_ratio) {
    mpfr_set_d(half.v, 0.5, MPFR_RNDN);
    mpfr_gamma(gh.v, half.v, MPFR_RNDN);
    mpfr_div(out, g.v, gh.v, MPFR_RNDN);
  } else {
    mpfr_ui_div(out, 1, g.v, MPFR_RNDN);
  }
}

std::vector<Rat> fd_jet(const Rat& a, size_t ord, const Rat& eps, bool half_ratio, long digits) {
  mpfr_prec_t prec = prec_for_digits(digits);
  std::vector<Rat> f(ord);
  for (size_t j = 0; j < ord; ++j) {
    MpfrValue out(prec);
    eval_f(out.v, a, eps * Rat((long)j), half_ratio, prec);
    f[j] = mpfr_to_rat(out.v);
  }
  // c_k ≈ (forward difference Δ^k f)(0) / (k! eps^k)
  std::vector<Rat> jet(ord);
  Rat kfact = 1, epsk = 1;
  for (size_t k = 0; k < ord; ++k) {
    if (k > 0) {
      kfact *= Rat((long)k);
      epsk *= eps;
    }
    Rat delta = 0, binom = 1;
    for (size_t j = 0; j <= k; ++j) {
      Rat sign = ((k - j) % 2 == 0) ? 1 : -1;
      delta += sign * binom * f[j];
      binom = binom * Rat((long)(k - j)) / Rat((long)(j + 1));
    }
    jet[k] = delta / (kfact * epsk);
  }
  return jet;
}

}  // namespace

std::vector<Rat> numeric_gamma_jet(const Rat& a, size_t ord, const Rat& eps, bool half_ratio,
                                   long digits) {
  if (eps <= 0 || eps >= 1) throw Error("numeric_gamma_jet: step must be in (0, 1)");
  // forward differences cancel ~ ord * digits(1/eps) digits; budget for it
  long eps_digits = (long)mpz_sizeinbase(Rat(1 / eps).get_num().get_mpz_t(), 10);
  long work = digits + (long)ord * eps_digits + 25;
  auto first = fd_jet(a, ord, eps, half_ratio, work);
  auto second = fd_jet(a, ord, eps * Rat(1, 1000), half_ratio, work + (long)ord * 3 + 25);
  for (size_t k = 0; k < ord; ++k) {
    Rat diff = first[k] - second[k];
    if (diff < 0) diff = -diff;
    if (diff > Rat(Int(1), Int(10) << 100))  // 1/(10*2^100) ~ 1e-31
      throw Error("numeric_gamma_jet: precision insufficient after retry");
  }
  return second;
}

std::vector<Rat> jet_numeric_values(const Jet& jet, long digits) {
  Rat g = numeric_const_gamma(digits);
  Rat l2 = numeric_const_log2(digits);
  std::vector<Rat> zetas(jet.ord + 2, Rat(0));
  for (unsigned k = 2; k < zetas.size(); ++k) zetas[k] = numeric_const_zeta(k, digits);
  std::vector<Rat> out(jet.ord);
  for (size_t k = 0; k < jet.ord; ++k) {
    Rat total = 0;
    for (const auto& [key, coeff] : jet.c[k].raw_terms()) {
      Rat term = coeff;
      for (size_t i = 0; i < key.size(); ++i)
        for (unsigned e = 0; e < key[i]; ++e)
          term *= (i == 0 ? g : (i == 1 ? l2 : zetas.at(i)));
      total += term;
    }
    out[k] = total;
  }
  return out;
}

}  // namespace gkz
