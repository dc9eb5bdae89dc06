#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkz/cohomology.hpp"
#include "gkz/gamma_jet.hpp"
#include "gkz/gkz_system.hpp"

namespace gkz {

/// Truncated cohomology-valued Frobenius series: one coefficient O_l per
/// kernel-lattice point of anticanonical degree <= degmax, together with the
/// exponent alpha. The log prefactor exp(sum lambda_{i,j} D_{i,j}) is kept
/// symbolic; extract_solutions expands it.
struct CohomSeries {
  QVec alpha;  // length r+p: alpha_{i,0} = -1/2, alpha_{i,j} = 0
  long degmax = 0;
  std::vector<IVec> support;  // every enumerated point, kept even when O_l = 0
  std::map<IVec, ConstClass> terms;
};

/// One monomial x^(l+alpha) * prod lambda^e of a scalar log-series.
struct LogTerm {
  IVec l;
  std::vector<unsigned> log_exp;
  ConstElem coeff;
};

/// Coordinate of the series along one cohomology basis element.
struct ScalarSeries {
  size_t basis_index = 0;
  std::string basis_label;
  size_t degree = 0;  // cohomological degree of the basis element
  std::vector<LogTerm> terms;
};

struct SolutionBasis {
  QVec alpha;
  std::vector<IVec> support;  // the truncation window the series was built on
  std::vector<ScalarSeries> solutions;
};

struct AnnihilationReport {
  bool ok = false;
  size_t euler_checked = 0;
  size_t box_checked = 0;
  size_t boundary_terms = 0;          // residual monomials outside the truncation window
  size_t interior_cancellations = 0;  // monomials with both sources in-window that canceled
  std::vector<std::string> failures;
};

/// Anticanonical degree sum_i (-l_{i,0}) = sum of the j>=1 entries; defined
/// on all integer vectors in column layout, linear.
long anticanonical_degree(const GkzSystem& g, const IVec& l);

/// Negative-entry total over the j >= 1 columns (the "depth" of a point).
long negative_depth(const GkzSystem& g, const IVec& l);

/// All kernel points with anticanonical degree <= degmax and depth <= the top
/// degree n, with no Mori-cone filter. The depth bound keeps the box finite.
std::vector<IVec> enumerate_kernel_box(const GkzSystem& g, long degmax, long depth_bound);

/// The truncated series support: kernel points in the wall-generated Mori
/// cone with anticanonical degree <= degmax and depth <= n.
///
/// Two of the three cuts lose nothing: points outside the Mori cone and
/// points with more than n negative columns have identically zero
/// coefficients (the latter because each negative column contributes one
/// nilpotent divisor factor, so the product has cohomological degree > n).
/// The depth cut is a genuine truncation: with crepant walls the Mori cone
/// has anticanonical-degree-0 rays and the full support is infinite, so the
/// series is truncated in that direction too; verify_annihilation only
/// asserts cancellation when both box sources lie inside this window.
std::vector<CurveClassLift> enumerate_support(const CohomRing& ring, const NefPartitionData& npd,
                                              const GkzSystem& g, long degmax);

/// O_l: the product over parts of (-1)^(l_{i,0}) Gamma(-D_{i,0}-l_{i,0}+1/2)/Gamma(1/2)
/// divided by the Gamma(D_{i,j}+l_{i,j}+1), all as jets in the nilpotent
/// divisor classes.
ConstClass coefficient_O(const CohomRing& ring, const NefPartitionData& npd, const GkzSystem& g,
                         const IVec& l);

/// Low-level variant with explicit classes (the mutation hook for the
/// gamma-cancellation test): numerator_class[i] substitutes -D_{i,0},
/// column_class[c] substitutes D_{i,j} for column c.
ConstClass coefficient_O_classes(const CohomRing& ring, const GkzSystem& g, const IVec& l,
                                 const std::vector<CohomClass>& numerator_class,
                                 const std::vector<CohomClass>& column_class);

CohomSeries assemble_B(const CohomRing& ring, const NefPartitionData& npd, const GkzSystem& g,
                       long degmax);

SolutionBasis extract_solutions(const CohomRing& ring, const NefPartitionData& npd,
                                const GkzSystem& g, const CohomSeries& series);

/// Applies every Euler operator (exact, no truncation allowance) and every
/// box operator of order <= degmax; box residuals are failures only when both
/// source exponents sit inside the truncation window.
AnnihilationReport verify_annihilation(const SolutionBasis& sols, const GkzSystem& g, long degmax);

/// Largest gamma-degree over all stored coefficients (0 when gamma cancels).
unsigned series_gamma_degree(const CohomSeries& series);

/// Coefficients along the degree-0 basis element, one rational per l; these
/// are the power-series (log-free) solution coefficients.
std::map<IVec, Rat> degree_zero_coefficients(const CohomSeries& series);

}  // namespace gkz
