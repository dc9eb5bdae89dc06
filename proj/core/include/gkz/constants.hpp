#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkz/numbers.hpp"

namespace gkz {

/// Element of the formal-constants ring Q[gamma, log2, zeta(2), zeta(3), ...].
///
/// Monomial keys are exponent vectors indexed [gamma, log2, zeta2, zeta3, ...]
/// with trailing zeros trimmed. The weight grading (gamma, log2 of weight 1,
/// zeta(k) of weight k) tracks where a term can appear: in every Gamma-jet the
/// coefficient of N^k has weight at most k, so jets truncated at the
/// nilpotency order K never produce weight beyond K.
class ConstElem {
 public:
  ConstElem() = default;
  static ConstElem rational(const Rat& c);
  static ConstElem gamma();
  static ConstElem log2();
  static ConstElem zeta(unsigned k);  // k >= 2

  ConstElem operator+(const ConstElem& rhs) const;
  ConstElem operator-(const ConstElem& rhs) const;
  ConstElem operator*(const ConstElem& rhs) const;
  ConstElem operator*(const Rat& c) const;
  ConstElem& operator+=(const ConstElem& rhs);
  bool operator==(const ConstElem& rhs) const { return terms_ == rhs.terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Coefficient of the empty monomial.
  Rat rational_part() const;
  /// Largest gamma exponent over the support (0 when gamma-free).
  unsigned gamma_degree() const;
  unsigned max_weight() const;

  /// Monomial -> coefficient, keys like "gamma", "log2^2", "log2*zeta3".
  std::map<std::string, Rat> named_terms() const;
  std::string to_string() const;

  /// Substitutes 50-digit decimal approximations (for the numeric oracle).
  /// The values map is keyed by symbol index as in the monomial keys.
  double eval_double(const std::vector<double>& symbol_values) const;

  const std::map<std::vector<unsigned>, Rat>& raw_terms() const { return terms_; }

 private:
  std::map<std::vector<unsigned>, Rat> terms_;
  void insert(std::vector<unsigned> key, const Rat& c);
};

/// psi^(k)(x) for x = q + 1 or q + 1/2 with q >= 0, expressed exactly over
/// the constants ring: psi(1) = -gamma, psi(1/2) = -gamma - 2 log2,
/// psi^(k)(1) = (-1)^(k+1) k! zeta(k+1),
/// psi^(k)(1/2) = (-1)^(k+1) k! (2^(k+1)-1) zeta(k+1),
/// shifted by psi^(k)(x+1) = psi^(k)(x) + (-1)^k k! x^-(k+1).
ConstElem psi_value(const Rat& x, unsigned k);

}  // namespace gkz
