#include "gkz/matrix.hpp"

namespace gkz {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IVec>& cols) {
  if (cols.empty()) throw Error("from_columns: empty column list");
  IntMatrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw Error("from_columns: ragged columns");
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IVec>& rows) {
  if (rows.empty()) throw Error("from_rows: empty row list");
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("from_rows: ragged rows");
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IVec IntMatrix::row(size_t i) const {
  IVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IVec IntMatrix::col(size_t j) const {
  IVec c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw Error("mul: dimension mismatch");
  IntMatrix r(rows_, rhs.cols());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < rhs.cols(); ++j) r.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return r;
}

IVec IntMatrix::mul(const IVec& v) const {
  if (cols_ != v.size()) throw Error("mul: dimension mismatch");
  IVec r(rows_, Int(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// row[a] <- p*row[a] + q*row[b];  row[b] <- r*row[a] + s*row[b]  (old values)
void rot_rows(IntMatrix& m, size_t a, size_t b, const Int& p, const Int& q, const Int& r, const Int& s) {
  for (size_t j = 0; j < m.cols(); ++j) {
    Int va = m.at(a, j), vb = m.at(b, j);
    m.at(a, j) = p * va + q * vb;
    m.at(b, j) = r * va + s * vb;
  }
}

void add_multiple(IntMatrix& m, size_t dst, size_t src, const Int& f) {
  if (f == 0) return;
  for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  size_t r = 0;
  for (size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // clear the column below position (r, c) with gcd rotations
    for (size_t i = r + 1; i < h.rows(); ++i) {
      if (h.at(i, c) == 0) continue;
      if (h.at(r, c) == 0) {
        swap_rows(h, r, i);
        swap_rows(u, r, i);
        continue;
      }
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(i, c).get_mpz_t());
      Int a = h.at(r, c) / g, b = h.at(i, c) / g;
      // [p q; -b a] has determinant p*a + q*b = 1
      rot_rows(h, r, i, p, q, -b, a);
      rot_rows(u, r, i, p, q, -b, a);
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      for (size_t j = 0; j < h.cols(); ++j) h.at(r, j) = -h.at(r, j);
      for (size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < r; ++i) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      add_multiple(h, i, r, -f);
      add_multiple(u, i, r, -f);
    }
    ++r;
  }
  return HnfResult{std::move(h), std::move(u), r};
}

std::vector<IVec> integer_kernel_basis(const IntMatrix& m) {
  // Rows of U aligned with the zero rows of H = U * M^T span ker(M) over Z.
  HnfResult res = hermite_normal_form(m.transpose());
  std::vector<IVec> basis;
  for (size_t i = res.rank; i < res.h.rows(); ++i) basis.push_back(res.u.row(i));
  return basis;
}

bool generates_full_lattice(const IntMatrix& m) {
  HnfResult res = hermite_normal_form(m.transpose());
  if (res.rank < m.rows()) return false;
  // lattice of columns = Z^rows iff the HNF of the transposed matrix is [I; 0]
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.rows(); ++j)
      if (res.h.at(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  size_t n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        // Bareiss: division is exact
        if (k > 0) mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

QVec solve_rational(const IntMatrix& m, const QVec& b) {
  if (m.rows() != m.cols()) throw Error("solve_rational: matrix not square");
  if (b.size() != m.rows()) throw Error("solve_rational: dimension mismatch");
  size_t n = m.rows();
  std::vector<QVec> a(n, QVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw Error("solve_rational: singular matrix");
    std::swap(a[k], a[piv]);
    Rat inv = 1 / a[k][k];
    for (size_t j = k; j <= n; ++j) a[k][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

QVec solve_full_column_rank(const IntMatrix& m, const QVec& b) {
  if (b.size() != m.rows()) throw Error("solve_full_column_rank: dimension mismatch");
  size_t n = m.rows(), c = m.cols();
  std::vector<QVec> a(n, QVec(c + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < c; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][c] = b[i];
  }
  size_t r = 0;
  std::vector<size_t> pivot_col;
  for (size_t k = 0; k < c && r < n; ++k) {
    size_t piv = r;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    Rat inv = 1 / a[r][k];
    for (size_t j = k; j <= c; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (size_t j = k; j <= c; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(k);
    ++r;
  }
  if (r < c) throw Error("solve_full_column_rank: matrix does not have full column rank");
  for (size_t i = r; i < n; ++i)
    if (a[i][c] != 0) throw Error("solve_full_column_rank: inconsistent system");
  QVec x(c, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][c];
  return x;
}

}  // namespace gkz
