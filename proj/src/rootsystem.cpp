#include "rootsystem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace lie {

namespace {

void link(IntMat& a, int i, int j, int aij, int aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

}  // namespace

IntMat cartan_matrix(SimpleTypeId t) {
  t = SimpleTypeId::make(t.family, t.rank);  // validates
  int n = t.rank;
  IntMat a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) link(a, i, i + 1, -1, -1);
  };
  switch (t.family) {
    case 'A':
      chain(n);
      break;
    case 'B':  // alpha_n short
      chain(n);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'C':  // alpha_n long
      chain(n);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'D':
      chain(n - 1);
      link(a, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-...-n chain, node 2 attached to node 4
      link(a, 0, 2, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, 1, 3, -1, -1);
      break;
    case 'F':
      chain(4);
      link(a, 1, 2, -2, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      link(a, 0, 1, -1, -3);
      break;
  }
  return a;
}

RootSystem::RootSystem(SimpleTypeId type)
    : type_(SimpleTypeId::make(type.family, type.rank)),
      cartan_(cartan_matrix(type_)) {
  const int n = rank();

  // Close the simple roots under simple reflections (breadth-first).
  std::set<IntVec> seen;
  std::vector<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<IntVec> next;
    for (const auto& v : queue) {
      for (int j = 0; j < n; ++j) {
        int pairing = 0;
        for (int i = 0; i < n; ++i) pairing += v[i] * cartan_[i][j];
        IntVec w = v;
        w[j] -= pairing;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    queue = std::move(next);
  }
  for (const auto& v : seen) {
    roots_.push_back(v);
    IntVec neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -v[i];
    if (!seen.count(neg)) fail(Err::InvalidType, "root set not symmetric");
  }
  if (static_cast<int>(roots_.size()) + n != dimension())
    fail(Err::InvalidType, "root count does not match dimension of " + type_.str());

  for (const auto& v : roots_) {
    bool pos = true;
    for (int c : v)
      if (c < 0) pos = false;
    if (pos) pos_.push_back(v);
  }

  // highest root: the unique positive root of maximal height
  highest_ = pos_[0];
  auto height = [](const IntVec& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  for (const auto& v : pos_)
    if (height(v) > height(highest_)) highest_ = v;

  // Killing form on the coroot basis: G[i][j] = sum_roots <a,ai^vee><a,aj^vee>,
  // then transported to the simple-root basis via the H_alpha identification.
  RatMat g = rat_zeros(n, n);
  for (const auto& v : roots_) {
    IntVec f(n, 0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) f[k] += v[i] * cartan_[i][k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i][j] += f[i] * f[j];
  }
  RatMat a = to_rat(cartan_);
  gram_B_ = rat_mul(rat_mul(a, rat_inverse(g)), rat_transpose(a));

  q_ = 0;
  for (const auto& v : roots_) {
    Rat qa = gram_pair(gram_B_, v, v);
    if (qa <= 0) fail(Err::InvalidType, "Killing norm not positive");
    if (qa > q_) q_ = qa;
  }
  gram_Q_ = gram_B_;
  for (auto& row : gram_Q_)
    for (auto& x : row) x *= Rat(2) / q_;

  fund_to_root_ = rat_inverse(rat_transpose(a));
  q_fund_ = rat_mul(rat_mul(rat_transpose(fund_to_root_), gram_Q_), fund_to_root_);

  // h^vee = 1 + sum of comarks; comark_i = mark_i * Q(a_i,a_i)/2
  Rat hv = 1;
  for (int i = 0; i < n; ++i) hv += Rat(highest_[i]) * gram_Q_[i][i] / 2;
  dual_coxeter_ = static_cast<int>(to_ll(hv));
}

Rat RootSystem::q_norm(const IntVec& v) const { return gram_pair(gram_Q_, v, v); }

Rat RootSystem::q_pair(const IntVec& a, const IntVec& b) const {
  return gram_pair(gram_Q_, a, b);
}

IntVec RootSystem::to_fundamental(const IntVec& v) const {
  int n = rank();
  IntVec f(n, 0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) f[k] += v[i] * cartan_[i][k];
  return f;
}

RatVec RootSystem::fundamental_to_root(const IntVec& fund) const {
  RatVec v(fund.begin(), fund.end());
  return rat_apply(fund_to_root_, v);
}

Rat RootSystem::pair_weight_root(const IntVec& fund, const IntVec& root) const {
  Rat s = 0;
  for (int j = 0; j < rank(); ++j)
    if (fund[j] != 0 && root[j] != 0)
      s += Rat(fund[j]) * Rat(root[j]) * gram_Q_[j][j];
  return s / 2;
}

Rat RootSystem::pair_weights(const IntVec& a, const IntVec& b) const {
  return gram_pair(q_fund_, a, b);
}

bool RootSystem::is_root(const IntVec& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v);
}

IntVec RootSystem::reflect_root(const IntVec& v, const IntVec& root) const {
  Rat c = Rat(2) * q_pair(v, root) / q_norm(root);
  Int ci = to_integer(c);
  int c_int = static_cast<int>(static_cast<long long>(ci));
  IntVec w = v;
  for (int i = 0; i < rank(); ++i) w[i] -= c_int * root[i];
  return w;
}

const RootSystem& root_system(SimpleTypeId type) {
  type = SimpleTypeId::make(type.family, type.rank);
  static std::map<SimpleTypeId, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, RootSystem(type)).first;
  return it->second;
}

}  // namespace lie
