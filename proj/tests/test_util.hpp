#pragma once

#include <vector>

#include "gkz/matrix.hpp"
#include "gkz/numbers.hpp"

namespace gkz_test {

inline gkz::IVec iv(std::vector<long> v) {
  gkz::IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

inline gkz::IntMatrix im(std::vector<std::vector<long>> rows) {
  gkz::IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

/// Deterministic LCG for property tests; values in [0, bound).
struct Rng {
  unsigned long state;
  explicit Rng(unsigned long seed) : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
  unsigned long next() {
    state = state * 2862933555777941757ULL + 3037000493ULL;
    return state >> 33;
  }
  long uniform(long lo, long hi) { return lo + long(next() % (unsigned long)(hi - lo + 1)); }
};

/// Random unimodular matrix from a product of elementary row operations.
inline gkz::IntMatrix random_unimodular(size_t n, Rng& rng, int ops = 8) {
  gkz::IntMatrix u = gkz::IntMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    size_t i = rng.next() % n, j = rng.next() % n;
    if (i == j) continue;
    gkz::Int f = rng.uniform(-2, 2);
    for (size_t c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
  }
  return u;
}

}  // namespace gkz_test
