#pragma once

#include <vector>

#include "gkz/cohomology.hpp"
#include "gkz/constants.hpp"

namespace gkz {

/// Truncated expansion f(N) = sum_{k < ord} c_k N^k in one nilpotent variable,
/// with coefficients in the formal-constants ring.
struct Jet {
  size_t ord = 0;
  std::vector<ConstElem> c;

  static Jet zero(size_t ord);
  static Jet constant(size_t ord, const Rat& v);
  /// c0 + N
  static Jet linear(size_t ord, const Rat& c0);

  Jet mul(const Jet& rhs) const;
  Jet add(const Jet& rhs) const;
  Jet scale(const Rat& f) const;
  /// Multiplies by 1/(c0 + N), c0 a nonzero rational (geometric series).
  Jet divide_linear(const Rat& c0) const;
};

/// exp of a jet with zero constant term.
Jet exp_jet(const Jet& arg);

/// 1/Gamma(a + N) for integer a, as a jet of the given order. Uses the
/// functional equation to shift to base 1 and the expansion
/// 1/Gamma(1+N) = exp(-sum psi^(k-1)(1) N^k / k!); nonpositive a produce the
/// exact nilpotent prefactor (a+N)(a+1+N)...(0+N).
Jet reciprocal_gamma_jet(const Rat& a, size_t ord);

/// Gamma(a + N)/Gamma(1/2) for half-integer a. All half-integer Gamma values
/// enter the series coefficients only through this ratio, so no square-root
/// symbol is ever needed.
Jet gamma_ratio_half_jet(const Rat& a, size_t ord);

/// H ⊗ constants element: one ConstElem coordinate per ring basis element.
using ConstClass = std::vector<ConstElem>;

ConstClass const_class_zero(const CohomRing& ring);
ConstClass const_class_unit(const CohomRing& ring);
ConstClass to_const_class(const CohomRing& ring, const CohomClass& c);
ConstClass mul(const CohomRing& ring, const ConstClass& a, const ConstClass& b);
ConstClass mul(const CohomRing& ring, const ConstClass& a, const CohomClass& b);
bool is_zero(const ConstClass& a);
unsigned gamma_degree(const ConstClass& a);

/// Substitutes the nilpotent cohomology class into the jet.
ConstClass eval_jet(const CohomRing& ring, const Jet& jet, const CohomClass& nilpotent);

}  // namespace gkz
