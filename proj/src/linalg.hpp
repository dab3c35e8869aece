#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace lie {

using IntVec = std::vector<int>;
using IntMat = std::vector<std::vector<int>>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

inline RatMat rat_zeros(size_t r, size_t c) {
  return RatMat(r, RatVec(c, Rat(0)));
}

inline RatMat rat_identity(size_t n) {
  RatMat m = rat_zeros(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMat to_rat(const IntMat& a) {
  RatMat m(a.size(), RatVec(a.empty() ? 0 : a[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m[i][j] = a[i][j];
  return m;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out = rat_zeros(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline RatVec rat_apply(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat out = rat_zeros(a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Gauss-Jordan inverse; the matrices here are tiny (rank <= 12).
inline RatMat rat_inverse(const RatMat& a) {
  size_t n = a.size();
  RatMat m = a, inv = rat_identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// v^T M w for integer coordinate vectors against a rational Gram matrix.
inline Rat gram_pair(const RatMat& m, const IntVec& v, const IntVec& w) {
  Rat s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat row = 0;
    for (size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += m[i][j] * w[j];
    s += Rat(v[i]) * row;
  }
  return s;
}

inline Rat gram_pair(const RatMat& m, const RatVec& v, const RatVec& w) {
  Rat s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat row = 0;
    for (size_t j = 0; j < w.size(); ++j) row += m[i][j] * w[j];
    s += v[i] * row;
  }
  return s;
}

inline int ivec_rank(std::vector<IntVec> rows) {
  // rank over Q by fraction-free elimination
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<RatVec> m;
  for (auto& x : rows) {
    RatVec v(x.begin(), x.end());
    m.push_back(v);
  }
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace lie
