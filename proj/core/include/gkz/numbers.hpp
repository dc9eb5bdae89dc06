#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

/// Error type for all contract violations reported by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const IVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline bool lex_less(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IVec primitive(IVec v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Clears denominators and reduces to the primitive integer direction.
inline IVec primitive_direction(const QVec& v) {
  Int lcm = 1;
  for (const auto& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    r[i] = s.get_num();
  }
  return primitive(r);
}

inline QVec to_rational(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

inline IVec to_integral(const QVec& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw Error("to_integral: non-integer entry " + v[i].get_str());
    r[i] = v[i].get_num();
  }
  return r;
}

/// Parses "p/q" or "p"; used by the JSON layer for exact rationals.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error("invalid rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace gkz
