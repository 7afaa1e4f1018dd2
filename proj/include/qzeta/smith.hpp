#pragma once
// Smith normal form over Z with unimodular transforms tracked on both sides.

#include <cstddef>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

using IMat = std::vector<std::vector<BigInt>>;

inline IMat imat_identity(size_t n) {
  IMat m(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IMat m(r, std::vector<BigInt>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

inline BigInt imat_det(IMat m) {
  // rational Gaussian elimination; exact
  size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  if (rat_den(det) != 1) throw structural_error("integer determinant came out fractional");
  return rat_num(det);
}

struct Snf {
  IMat u, d, v;  // u * input * v = d, with u and v unimodular
};

// Row/column reduction to diagonal form with the divisibility chain
// d[0][0] | d[1][1] | ...; diagonal entries are nonnegative.
inline Snf smith_normal_form(IMat m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Snf s{imat_identity(rows), std::move(m), imat_identity(cols)};
  IMat& d = s.d;

  auto swap_rows = [&](size_t a, size_t b) {
    std::swap(d[a], d[b]);
    std::swap(s.u[a], s.u[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : s.v) std::swap(row[a], row[b]);
  };
  auto addmul_row = [&](size_t dst, size_t src, const BigInt& f) {
    for (size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
    for (size_t j = 0; j < rows; ++j) s.u[dst][j] += f * s.u[src][j];
  };
  auto addmul_col = [&](size_t dst, size_t src, const BigInt& f) {
    for (size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
    for (size_t i = 0; i < cols; ++i) s.v[i][dst] += f * s.v[i][src];
  };
  auto negate_row = [&](size_t r) {
    for (auto& x : d[r]) x = -x;
    for (auto& x : s.u[r]) x = -x;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // pick the nonzero pivot of least magnitude in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        if (!found || boost::multiprecision::abs(d[i][j]) < boost::multiprecision::abs(d[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    bool dirty = false;
    for (size_t i = t + 1; i < rows; ++i) {
      if (d[i][t] == 0) continue;
      BigInt q = d[i][t] / d[t][t];
      if (q != 0) addmul_row(i, t, -q);
      if (d[i][t] != 0) dirty = true;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (d[t][j] == 0) continue;
      BigInt q = d[t][j] / d[t][t];
      if (q != 0) addmul_col(j, t, -q);
      if (d[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared; repick pivot

    // enforce divisibility into the trailing block
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (d[i][j] % d[t][t] != 0) {
          addmul_row(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (d[t][t] < 0) negate_row(t);
    ++t;
  }
  return s;
}

inline std::vector<BigInt> invariant_factors(const IMat& m) {
  Snf s = smith_normal_form(m);
  std::vector<BigInt> out;
  size_t n = std::min(s.d.size(), s.d.empty() ? size_t{0} : s.d[0].size());
  for (size_t i = 0; i < n; ++i)
    if (s.d[i][i] != 0) out.push_back(s.d[i][i]);
  return out;
}

}  // namespace qzeta
