#pragma once

#include <utility>
#include <vector>

#include "gkz/numbers.hpp"

namespace gkz {

/// Dense integer matrix with exact (arbitrary-precision) entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {
    if (rows == 0 || cols == 0) throw Error("IntMatrix: dimensions must be positive");
  }
  static IntMatrix identity(size_t n);
  /// Builds the matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<IVec>& cols);
  static IntMatrix from_rows(const std::vector<IVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IVec row(size_t i) const;
  IVec col(size_t j) const;
  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& rhs) const;
  IVec mul(const IVec& v) const;

  bool operator==(const IntMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }

 private:
  size_t rows_, cols_;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular transform, u * m == h
  size_t rank;  // number of nonzero rows of h
};

/// Row Hermite normal form via exact extended-gcd row operations.
/// Pivots are positive, entries above each pivot are reduced into [0, pivot),
/// zero rows are collected at the bottom, and |det u| = 1.
HnfResult hermite_normal_form(const IntMatrix& m);

/// Z-basis of {v in Z^cols : m v = 0}. The basis is saturated: every integer
/// kernel vector is an integer combination of the returned vectors.
std::vector<IVec> integer_kernel_basis(const IntMatrix& m);

/// Whether the columns generate Z^rows as an abelian group
/// (all Smith invariant factors equal 1).
bool generates_full_lattice(const IntMatrix& m);

size_t rank(const IntMatrix& m);

/// Determinant of a square matrix, by fraction-free elimination.
Int determinant(const IntMatrix& m);

/// Solves m x = b exactly over Q. Requires m square and invertible.
QVec solve_rational(const IntMatrix& m, const QVec& b);

/// Unique rational solution of m x = b when m has full column rank;
/// throws if the system is inconsistent or underdetermined.
QVec solve_full_column_rank(const IntMatrix& m, const QVec& b);

}  // namespace gkz
