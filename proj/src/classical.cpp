#include "classical.hpp"

#include <algorithm>

namespace lie {

namespace {

// ---- epsilon-coordinate models -------------------------------------------
// Weights of the classical algebras live in R^m: m = n for sl_n (modulo the
// trace direction), m = rank otherwise. The maps below convert between
// epsilon coordinates and fundamental coordinates of the raw family label;
// canonical relabelings (C2 -> B2, D3 -> A3) are composed on top.

// eps -> fundamental, raw labels
RatMat eps_to_fund_raw(char family, int r, int m) {
  RatMat p = rat_zeros(r, m);
  switch (family) {
    case 'A':  // fund_i = mu_i - mu_{i+1}
      for (int i = 0; i < r; ++i) {
        p[i][i] = 1;
        p[i][i + 1] = -1;
      }
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) {
        p[i][i] = 1;
        p[i][i + 1] = -1;
      }
      p[r - 1][r - 1] = 2;
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) {
        p[i][i] = 1;
        p[i][i + 1] = -1;
      }
      p[r - 1][r - 1] = 1;
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) {
        p[i][i] = 1;
        p[i][i + 1] = -1;
      }
      p[r - 2][r - 2] = 1;
      p[r - 2][r - 1] = -1;
      p[r - 1][r - 2] = 1;
      p[r - 1][r - 1] = 1;
      break;
  }
  return p;
}

// fundamental -> eps, raw labels (columns are the fundamental weights)
RatMat fund_to_eps_raw(char family, int r, int m) {
  RatMat w = rat_zeros(m, r);
  switch (family) {
    case 'A':
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < m; ++j)
          w[j][i] = Rat(j <= i ? 1 : 0) - Rat(i + 1, m);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i)
        for (int j = 0; j <= i; ++j) w[j][i] = 1;
      for (int j = 0; j < r; ++j) w[j][r - 1] = Rat(1, 2);
      break;
    case 'C':
      for (int i = 0; i < r; ++i)
        for (int j = 0; j <= i; ++j) w[j][i] = 1;
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i)
        for (int j = 0; j <= i; ++j) w[j][i] = 1;
      for (int j = 0; j < r; ++j) {
        w[j][r - 2] = Rat(1, 2) * (j == r - 1 ? -1 : 1);
        w[j][r - 1] = Rat(1, 2);
      }
      break;
  }
  return w;
}

// permutation matrix sending raw fundamental coordinates to the coordinates
// of the canonical type (C2 -> B2 swaps the two nodes, D3 -> A3 swaps 1,2)
RatMat raw_to_canonical(char family, int r) {
  RatMat p = rat_identity(r);
  if (family == 'C' && r == 2) std::swap(p[0], p[1]);
  if (family == 'D' && r == 3) std::swap(p[0], p[1]);
  return p;
}

struct RawType {
  char family;
  int rank;
  int eps_dim;
};

RawType raw_type(char alg, int size) {
  switch (alg) {
    case 'l':
      if (size < 2) fail(Err::UnsupportedModel, "sl size");
      return {'A', size - 1, size};
    case 'o':
      if (size < 3) fail(Err::UnsupportedModel, "so size");
      if (size % 2)
        return {'B', (size - 1) / 2, (size - 1) / 2};
      return {'D', size / 2, size / 2};
    case 'p':
      if (size < 1) fail(Err::UnsupportedModel, "sp rank");
      return {'C', size, size};
  }
  fail(Err::UnsupportedModel, std::string("algebra ") + alg);
}

// eps -> canonical fundamental for a single block; so4 gives two A1 rows
std::vector<std::pair<SimpleTypeId, RatMat>> block_eps_to_fund(char alg, int size) {
  if (alg == 'o' && size <= 2) return {};
  if (alg == 'o' && size == 4) {
    RatMat f1 = {{Rat(1), Rat(-1)}};
    RatMat f2 = {{Rat(1), Rat(1)}};
    return {{SimpleTypeId::make('A', 1), f1}, {SimpleTypeId::make('A', 1), f2}};
  }
  RawType rt = raw_type(alg, size);
  if (rt.family == 'D' && rt.rank == 2) fail(Err::UnsupportedModel, "so4 split");
  SimpleTypeId t = SimpleTypeId::make(rt.family, rt.rank);
  RatMat conv = raw_to_canonical(rt.family, rt.rank);
  RatMat e2f = rat_mul(conv, eps_to_fund_raw(rt.family, rt.rank, rt.eps_dim));
  return {{t, e2f}};
}

RatMat ambient_fund_to_eps(char alg, int size) {
  RawType rt = raw_type(alg, size);
  RatMat conv_t = rat_transpose(raw_to_canonical(rt.family, rt.rank));
  return rat_mul(fund_to_eps_raw(rt.family, rt.rank, rt.eps_dim), conv_t);
}

}  // namespace

SimpleTypeId block_ambient_type(char alg, int size) {
  RawType rt = raw_type(alg, size);
  return SimpleTypeId::make(rt.family, rt.rank);
}

std::vector<SimpleTypeId> block_factor_types(char alg, int size) {
  std::vector<SimpleTypeId> out;
  for (auto& [t, m] : block_eps_to_fund(alg, size)) out.push_back(t);
  return out;
}

DominantWeight defining_weight(char alg, int size) {
  RawType rt = raw_type(alg, size);
  SimpleTypeId t = SimpleTypeId::make(rt.family, rt.rank);
  RatVec raw(rt.rank, Rat(0));
  raw[0] = 1;  // omega_1 in raw labels
  RatVec canon = rat_apply(raw_to_canonical(rt.family, rt.rank), raw);
  IntVec coords(rt.rank);
  for (int i = 0; i < rt.rank; ++i)
    coords[i] = static_cast<int>(static_cast<long long>(to_integer(canon[i])));
  return DominantWeight::of(t, coords);
}

BlockSpec BlockSpec::parse(const std::string& text) {
  auto lt = text.find('<');
  if (lt == std::string::npos) fail(Err::UnsupportedModel, "block spec '" + text + "'");
  auto alg_of = [&](const std::string& tok, int& size) -> char {
    if (tok.size() < 3) fail(Err::UnsupportedModel, "block token '" + tok + "'");
    std::string fam = tok.substr(0, 2);
    size = std::atoi(tok.c_str() + 2);
    if (size <= 0) fail(Err::UnsupportedModel, "block token '" + tok + "'");
    if (fam == "sl") return 'l';
    if (fam == "so") return 'o';
    if (fam == "sp") return 'p';
    fail(Err::UnsupportedModel, "block token '" + tok + "'");
  };
  BlockSpec spec;
  spec.ambient_alg = alg_of(text.substr(lt + 1), spec.ambient_size);
  std::string lhs = text.substr(0, lt);
  char sub_alg = 0;
  size_t pos = 0;
  while (pos <= lhs.size()) {
    size_t plus = lhs.find('+', pos);
    std::string tok = lhs.substr(pos, plus == std::string::npos ? std::string::npos
                                                                : plus - pos);
    int size = 0;
    char alg = alg_of(tok, size);
    if (sub_alg && alg != sub_alg)
      fail(Err::UnsupportedModel, "mixed sub algebras in '" + text + "'");
    sub_alg = alg;
    spec.parts.push_back(size);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  spec.cross = sub_alg != spec.ambient_alg;
  if (spec.cross) {
    if (spec.parts.size() != 1)
      fail(Err::UnsupportedModel, "form inclusion takes a single block");
    int n = spec.parts[0];
    bool sp_in_sl = sub_alg == 'p' && spec.ambient_alg == 'l' &&
                    spec.ambient_size == 2 * n;
    bool so_in_sl = sub_alg == 'o' && spec.ambient_alg == 'l' &&
                    spec.ambient_size == n;
    if (!sp_in_sl && !so_in_sl)
      fail(Err::UnsupportedModel, "unsupported inclusion '" + text + "'");
    spec.parts[0] = sp_in_sl ? -n : n;  // negative marks sp<sl
  } else {
    int total = 0;
    for (int p : spec.parts) total += p;
    if (total > spec.ambient_size)
      fail(Err::UnsupportedModel, "blocks exceed ambient in '" + text + "'");
  }
  return spec;
}

std::string BlockSpec::str() const {
  auto name = [](char a) { return a == 'l' ? "sl" : a == 'o' ? "so" : "sp"; };
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "+";
    if (cross)
      s += std::string(parts[i] < 0 ? "sp" : "so") + std::to_string(std::abs(parts[i]));
    else
      s += std::string(name(ambient_alg)) + std::to_string(parts[i]);
  }
  return s + "<" + name(ambient_alg) + std::to_string(ambient_size);
}

ProjectionMap block_projection(const BlockSpec& spec) {
  ProjectionMap out;
  RatMat amb_f2e = ambient_fund_to_eps(spec.ambient_alg, spec.ambient_size);
  int amb_eps = static_cast<int>(amb_f2e.size());
  int amb_rank = amb_f2e.empty() ? 0 : static_cast<int>(amb_f2e[0].size());

  auto add_factor = [&](char alg, int size, const RatMat& select) {
    for (auto& [t, e2f] : block_eps_to_fund(alg, size)) {
      out.factors.push_back(t);
      out.blocks.push_back(rat_mul(e2f, rat_mul(select, amb_f2e)));
    }
  };

  if (spec.cross) {
    bool sp_in_sl = spec.parts[0] < 0;
    int n = std::abs(spec.parts[0]);
    int r = sp_in_sl ? n : n / 2;
    // nu_i = mu_i - mu_{r+i} on the split Cartan of the form inclusion
    RatMat select = rat_zeros(r, amb_eps);
    for (int i = 0; i < r; ++i) {
      select[i][i] = 1;
      select[i][r + i] = -1;
    }
    add_factor(sp_in_sl ? 'p' : 'o', n, select);
  } else {
    // each block consumes a consecutive run of ambient epsilon coordinates
    int off = 0;
    for (int p : spec.parts) {
      int width = spec.ambient_alg == 'o' ? p / 2 : p;
      int min_size = spec.ambient_alg == 'o' ? 3 : spec.ambient_alg == 'l' ? 2 : 1;
      if (p >= min_size) {
        int rows = spec.ambient_alg == 'l' ? p : width;
        RatMat select = rat_zeros(rows, amb_eps);
        for (int i = 0; i < rows; ++i) select[i][off + i] = 1;
        add_factor(spec.ambient_alg, p, select);
      }
      off += width;
    }
  }
  (void)amb_rank;
  out.validate(block_ambient_type(spec.ambient_alg, spec.ambient_size));
  return out;
}

Rat defining_index(char alg) {
  switch (alg) {
    case 'l': return 1;
    case 'o': return 2;
    case 'p': return 1;
  }
  fail(Err::UnsupportedModel, "defining index");
}

// ---- matrix models ---------------------------------------------------------

namespace {

using Mat = RatMat;

Mat zero(int n) { return rat_zeros(n, n); }

Rat mtr(const Mat& a, const Mat& b) {  // tr(ab)
  Rat s = 0;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j] != 0 && b[j][i] != 0) s += a[i][j] * b[j][i];
  return s;
}

Mat commutator(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c = zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] -= b[i][k] * a[k][j];
    }
  return c;
}

std::vector<Mat> basis_sl(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat m = zero(n);
      m[i][j] = 1;
      out.push_back(m);
    }
  for (int i = 0; i + 1 < n; ++i) {
    Mat m = zero(n);
    m[i][i] = 1;
    m[i + 1][i + 1] = -1;
    out.push_back(m);
  }
  return out;
}

std::vector<Mat> basis_so(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat m = zero(n);
      m[i][j] = 1;
      m[j][i] = -1;
      out.push_back(m);
    }
  return out;
}

// symplectic basis ordered (p_1..p_r, q_1..q_r)
std::vector<Mat> basis_sp(int r) {
  int n = 2 * r;
  std::vector<Mat> out;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Mat m = zero(n);
      m[i][j] = 1;
      m[r + j][r + i] = -1;
      out.push_back(m);
    }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Mat m = zero(n);
      m[i][r + j] += 1;
      m[j][r + i] += 1;
      out.push_back(m);
      Mat c = zero(n);
      c[r + i][j] += 1;
      c[r + j][i] += 1;
      out.push_back(c);
    }
  return out;
}

Mat scatter(const Mat& small, const std::vector<int>& idx, int n) {
  Mat m = zero(n);
  for (size_t i = 0; i < small.size(); ++i)
    for (size_t j = 0; j < small.size(); ++j)
      if (small[i][j] != 0) m[idx[i]][idx[j]] = small[i][j];
  return m;
}

std::vector<int> iota(int from, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

// proportionality ratio of two Gram matrices, exact
Rat gram_ratio(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b) {
  Rat ratio = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      if (b[i][j] == 0) {
        if (a[i][j] != 0) fail(Err::UnsupportedModel, "forms not proportional");
        continue;
      }
      Rat r = a[i][j] / b[i][j];
      if (ratio == 0)
        ratio = r;
      else if (r != ratio)
        fail(Err::UnsupportedModel, "forms not proportional");
    }
  return ratio;
}

std::vector<std::vector<Rat>> gram_of(const std::vector<Mat>& basis) {
  size_t d = basis.size();
  std::vector<std::vector<Rat>> g(d, std::vector<Rat>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g[i][j] = mtr(basis[i], basis[j]);
  return g;
}

// Killing form on an abstractly given basis, from structure constants.
std::vector<std::vector<Rat>> killing_of(const std::vector<Mat>& basis) {
  size_t d = basis.size();
  RatMat tg = gram_of(basis);
  RatMat tg_inv = rat_inverse(tg);
  // ad matrices: [X_i, X_j] = sum_k c[i][j][k] X_k via trace duality
  std::vector<RatMat> ad(d, rat_zeros(d, d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Mat br = commutator(basis[i], basis[j]);
      RatVec rhs(d);
      for (size_t p = 0; p < d; ++p) rhs[p] = mtr(br, basis[p]);
      RatVec c = rat_apply(tg_inv, rhs);
      for (size_t k = 0; k < d; ++k) ad[i][k][j] = c[k];  // ad_i maps X_j -> c
    }
  std::vector<std::vector<Rat>> b(d, std::vector<Rat>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Rat s = 0;
      for (size_t m = 0; m < d; ++m)
        for (size_t k = 0; k < d; ++k) s += ad[i][m][k] * ad[j][k][m];
      b[i][j] = s;
    }
  return b;
}

int dual_coxeter_of(SimpleTypeId t) {
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B': return 2 * t.rank - 1;
    case 'C': return t.rank + 1;
    case 'D': return 2 * t.rank - 2;
    default: fail(Err::UnsupportedModel, "oracle dual coxeter");
  }
}

}  // namespace

OracleResult trace_form_oracle(const BlockSpec& spec) {
  struct Factor {
    SimpleTypeId type;
    std::vector<Mat> embedded;   // ambient-size matrices
    std::vector<Mat> defining;   // own defining matrices, empty for so4 ideals
  };
  std::vector<Factor> factors;
  int n_amb;  // ambient matrix size
  switch (spec.ambient_alg) {
    case 'l': n_amb = spec.ambient_size; break;
    case 'o': n_amb = spec.ambient_size; break;
    case 'p': n_amb = 2 * spec.ambient_size; break;
    default: fail(Err::UnsupportedModel, "ambient");
  }
  SimpleTypeId amb_type = block_ambient_type(spec.ambient_alg, spec.ambient_size);
  if (amb_type.rank > 8) fail(Err::UnsupportedModel, "oracle ambient rank cap");

  if (spec.cross) {
    int p = spec.parts[0];
    if (p < 0) {  // sp_r < sl_2r
      factors.push_back({block_factor_types('p', -p)[0], basis_sp(-p), basis_sp(-p)});
    } else {  // so_n < sl_n
      if (p == 4 || p == 3) fail(Err::UnsupportedModel, "so3/so4 in sl");
      factors.push_back({block_factor_types('o', p)[0], basis_so(p), basis_so(p)});
    }
  } else if (spec.ambient_alg == 'p') {
    int off = 0;
    for (int r : spec.parts) {
      std::vector<int> idx;
      for (int i : iota(off, r)) idx.push_back(i);
      for (int i : iota(spec.ambient_size + off, r)) idx.push_back(i);
      std::vector<Mat> emb;
      for (auto& m : basis_sp(r)) emb.push_back(scatter(m, idx, n_amb));
      factors.push_back({block_factor_types('p', r)[0], emb, basis_sp(r)});
      off += r;
    }
  } else if (spec.ambient_alg == 'l') {
    int off = 0;
    for (int p : spec.parts) {
      if (p >= 2) {
        std::vector<Mat> emb;
        for (auto& m : basis_sl(p)) emb.push_back(scatter(m, iota(off, p), n_amb));
        factors.push_back({block_factor_types('l', p)[0], emb, basis_sl(p)});
      }
      off += p;
    }
  } else {
    int off = 0;
    for (int p : spec.parts) {
      if (p == 3) fail(Err::UnsupportedModel, "so3 block has no defining normalization");
      if (p == 4) {
        // split so4 into its two sl2 ideals; Killing normalization below
        auto L = [&](int i, int j) {
          Mat m = zero(4);
          m[i][j] = 1;
          m[j][i] = -1;
          return m;
        };
        auto add = [&](int sign) {
          std::vector<Mat> small;
          auto mk = [&](Mat a, Mat b) {
            Mat m = a;
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j) m[i][j] += Rat(sign) * b[i][j];
            return m;
          };
          small.push_back(mk(L(0, 1), L(2, 3)));
          small.push_back(mk(L(0, 2), L(3, 1)));
          small.push_back(mk(L(0, 3), L(1, 2)));
          std::vector<Mat> emb;
          for (auto& m : small) emb.push_back(scatter(m, iota(off, 4), n_amb));
          factors.push_back({SimpleTypeId::make('A', 1), emb, {}});
        };
        add(1);
        add(-1);
      } else if (p >= 5) {
        std::vector<Mat> emb;
        for (auto& m : basis_so(p)) emb.push_back(scatter(m, iota(off, p), n_amb));
        factors.push_back({block_factor_types('o', p)[0], emb, basis_so(p)});
      }
      off += p;
    }
  }

  OracleResult out;
  for (auto& f : factors) {
    auto gram_v = gram_of(f.embedded);
    Rat index;
    if (!f.defining.empty()) {
      // tr_V / tr_def scaled by the fixed defining indices
      Rat ratio = gram_ratio(gram_v, gram_of(f.defining));
      char fam = spec.cross ? (spec.parts[0] < 0 ? 'p' : 'o') : spec.ambient_alg;
      index = ratio * defining_index(fam) / defining_index(spec.ambient_alg);
    } else {
      // so4 ideals: normalize with the Killing form, B = 2 h^vee Q
      Rat ratio = gram_ratio(gram_v, killing_of(f.embedded));
      index = ratio * Rat(2 * dual_coxeter_of(f.type)) / defining_index(spec.ambient_alg);
    }
    if (!is_integer(index) || index <= 0)
      fail(Err::NonIntegerIndex, "oracle index " + rat_str(index));
    out.factors.push_back(f.type);
    out.values.push_back(to_ll(index));
  }
  return out;
}

OracleResult trace_form_oracle(const std::string& spec) {
  return trace_form_oracle(BlockSpec::parse(spec));
}

}  // namespace lie
