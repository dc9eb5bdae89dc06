#include "gkz/gamma_jet.hpp"

namespace gkz {

Jet Jet::zero(size_t ord) {
  Jet j;
  j.ord = ord;
  j.c.assign(ord, ConstElem());
  return j;
}

Jet Jet::constant(size_t ord, const Rat& v) {
  Jet j = zero(ord);
  j.c[0] = ConstElem::rational(v);
  return j;
}

Jet Jet::linear(size_t ord, const Rat& c0) {
  Jet j = zero(ord);
  j.c[0] = ConstElem::rational(c0);
  if (ord > 1) j.c[1] = ConstElem::rational(Rat(1));
  return j;
}

Jet Jet::mul(const Jet& rhs) const {
  if (ord != rhs.ord) throw Error("Jet::mul: order mismatch");
  Jet out = zero(ord);
  for (size_t i = 0; i < ord; ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; i + j < ord; ++j) {
      if (rhs.c[j].is_zero()) continue;
      out.c[i + j] += c[i] * rhs.c[j];
    }
  }
  return out;
}

Jet Jet::add(const Jet& rhs) const {
  if (ord != rhs.ord) throw Error("Jet::add: order mismatch");
  Jet out = *this;
  for (size_t i = 0; i < ord; ++i) out.c[i] += rhs.c[i];
  return out;
}

Jet Jet::scale(const Rat& f) const {
  Jet out = *this;
  for (auto& x : out.c) x = x * f;
  return out;
}

Jet Jet::divide_linear(const Rat& c0) const {
  if (c0 == 0) throw Error("Jet::divide_linear: zero constant term");
  // 1/(c0 + N) = sum_k (-1)^k N^k / c0^(k+1)
  Jet inv = zero(ord);
  Rat f = 1 / c0;
  for (size_t k = 0; k < ord; ++k) {
    inv.c[k] = ConstElem::rational(f);
    f = -f / c0;
  }
  return mul(inv);
}

Jet exp_jet(const Jet& arg) {
  if (!arg.c.empty() && !arg.c[0].is_zero()) throw Error("exp_jet: nonzero constant term");
  Jet out = Jet::constant(arg.ord, Rat(1));
  Jet power = Jet::constant(arg.ord, Rat(1));
  Rat inv_fact = 1;
  for (size_t k = 1; k < arg.ord; ++k) {
    power = power.mul(arg);
    inv_fact /= Rat((long)k);
    for (size_t i = 0; i < arg.ord; ++i) out.c[i] += power.c[i] * inv_fact;
  }
  return out;
}

namespace {

// exp(sign * sum_{k>=1} psi^(k-1)(base) N^k / k!)
Jet exp_psi_series(const Rat& base, int sign, size_t ord) {
  Jet arg = Jet::zero(ord);
  Rat inv_fact = 1;
  for (size_t k = 1; k < ord; ++k) {
    inv_fact /= Rat((long)k);
    arg.c[k] = psi_value(base, (unsigned)(k - 1)) * (Rat(sign) * inv_fact);
  }
  return exp_jet(arg);
}

}  // namespace

Jet reciprocal_gamma_jet(const Rat& a, size_t ord) {
  if (a.get_den() != 1) throw Error("reciprocal_gamma_jet: integer argument expected");
  if (ord == 0) throw Error("reciprocal_gamma_jet: order must be positive");
  Jet out = exp_psi_series(Rat(1), -1, ord);  // 1/Gamma(1+N)
  long ai = mpz_get_si(a.get_num().get_mpz_t());
  if (ai >= 1) {
    // 1/Gamma(a+N) = 1/Gamma(1+N) * prod_{j=1}^{a-1} 1/(j+N)
    for (long j = 1; j < ai; ++j) out = out.divide_linear(Rat(j));
  } else {
    // 1/Gamma(a+N) = (a+N)(a+1+N)...(0+N) / Gamma(1+N): nilpotent prefactor
    for (long j = ai; j <= 0; ++j) out = out.mul(Jet::linear(ord, Rat(j)));
  }
  return out;
}

Jet gamma_ratio_half_jet(const Rat& a, size_t ord) {
  if (a.get_den() != 2) throw Error("gamma_ratio_half_jet: half-integer argument expected");
  if (ord == 0) throw Error("gamma_ratio_half_jet: order must be positive");
  Jet out = exp_psi_series(Rat(1, 2), +1, ord);  // Gamma(1/2+N)/Gamma(1/2)
  Rat q = a - Rat(1, 2);
  long qi = mpz_get_si(q.get_num().get_mpz_t());
  if (qi >= 0)
    for (long j = 0; j < qi; ++j) out = out.mul(Jet::linear(ord, Rat(1, 2) + Rat(j)));
  else
    for (long j = qi; j < 0; ++j) out = out.divide_linear(Rat(1, 2) + Rat(j));
  return out;
}

ConstClass const_class_zero(const CohomRing& ring) { return ConstClass(ring.dimension()); }

ConstClass const_class_unit(const CohomRing& ring) {
  ConstClass c(ring.dimension());
  c[0] = ConstElem::rational(Rat(1));
  return c;
}

ConstClass to_const_class(const CohomRing& ring, const CohomClass& c) {
  ConstClass out(ring.dimension());
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out[i] = ConstElem::rational(c[i]);
  return out;
}

ConstClass mul(const CohomRing& ring, const ConstClass& a, const ConstClass& b) {
  ConstClass out(ring.dimension());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const CohomClass& prod = ring.table_entry(i, j);
      ConstElem f = a[i] * b[j];
      for (size_t k = 0; k < prod.size(); ++k)
        if (prod[k] != 0) out[k] += f * prod[k];
    }
  }
  return out;
}

ConstClass mul(const CohomRing& ring, const ConstClass& a, const CohomClass& b) {
  return mul(ring, a, to_const_class(ring, b));
}

bool is_zero(const ConstClass& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

unsigned gamma_degree(const ConstClass& a) {
  unsigned d = 0;
  for (const auto& x : a) d = std::max(d, x.gamma_degree());
  return d;
}

ConstClass eval_jet(const CohomRing& ring, const Jet& jet, const CohomClass& nilpotent) {
  ConstClass out = const_class_zero(ring);
  CohomClass power = ring.unit();
  for (size_t k = 0; k < jet.ord; ++k) {
    if (!jet.c[k].is_zero())
      for (size_t b = 0; b < power.size(); ++b)
        if (power[b] != 0) out[b] += jet.c[k] * power[b];
    if (k + 1 < jet.ord) {
      power = ring.mul(power, nilpotent);
      if (ring.is_zero_class(power)) break;
    }
  }
  return out;
}

}  // namespace gkz
