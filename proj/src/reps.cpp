#include "reps.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lie {

DominantWeight DominantWeight::of(SimpleTypeId type, IntVec coords) {
  if (static_cast<int>(coords.size()) != SimpleTypeId::make(type.family, type.rank).rank)
    fail(Err::IncompatibleShapes, "weight length vs rank");
  for (int c : coords)
    if (c < 0) fail(Err::NonDominant, "negative fundamental coordinate");
  return {type, std::move(coords)};
}

DominantWeight DominantWeight::zero(SimpleTypeId type) {
  return {type, IntVec(type.rank, 0)};
}

DominantWeight DominantWeight::fundamental(SimpleTypeId type, int i) {
  IntVec c(type.rank, 0);
  if (i < 1 || i > type.rank) fail(Err::InvalidType, "fundamental weight index");
  c[i - 1] = 1;
  return {type, std::move(c)};
}

DominantWeight DominantWeight::adjoint(SimpleTypeId type) {
  const RootSystem& rs = root_system(type);
  return {rs.type(), rs.to_fundamental(rs.highest_root())};
}

long long WeightMultiset::total() const {
  long long t = 0;
  for (auto& [w, m] : entries) t += m;
  return t;
}

void ProjectionMap::validate(SimpleTypeId ambient) const {
  if (factors.size() != blocks.size())
    fail(Err::IncompatibleShapes, "projection factor/block count");
  const RootSystem& amb = root_system(ambient);
  for (size_t f = 0;f < factors.size(); ++f) {
    const RatMat& b = blocks[f];
    if (static_cast<int>(b.size()) != factors[f].rank)
      fail(Err::IncompatibleShapes, "projection block rows");
    for (auto& row : b)
      if (static_cast<int>(row.size()) != amb.rank())
        fail(Err::IncompatibleShapes, "projection block cols");
    // every ambient simple root must land in the factor weight lattice
    for (int i = 0; i < amb.rank(); ++i) {
      IntVec e(amb.rank(), 0);
      e[i] = 1;
      IntVec fund = amb.to_fundamental(e);
      RatVec img = rat_apply(b, RatVec(fund.begin(), fund.end()));
      for (auto& x : img)
        if (!is_integer(x))
          fail(Err::IncompatibleShapes, "root image outside weight lattice");
    }
  }
}

namespace {

void require_dominant(const DominantWeight& w) {
  for (int c : w.coords)
    if (c < 0) fail(Err::NonDominant, "weight is not dominant");
}

// (mu + rho, alpha) for mu in fundamental coordinates
Rat shifted_pair(const RootSystem& rs, const IntVec& fund, const IntVec& root) {
  Rat s = 0;
  for (int j = 0; j < rs.rank(); ++j)
    if (root[j] != 0) s += Rat(fund[j] + 1) * Rat(root[j]) * rs.gram_Q()[j][j];
  return s / 2;
}

}  // namespace

Int weyl_dim(const DominantWeight& w) {
  require_dominant(w);
  const RootSystem& rs = root_system(w.type);
  Rat prod = 1;
  IntVec zero(rs.rank(), 0);
  for (const auto& a : rs.positive_roots())
    prod *= shifted_pair(rs, w.coords, a) / shifted_pair(rs, zero, a);
  return to_integer(prod);
}

Rat casimir2(const DominantWeight& w) {
  require_dominant(w);
  const RootSystem& rs = root_system(w.type);
  IntVec shifted(w.coords);
  for (auto& c : shifted) c += 2;  // lambda + 2 rho
  return rs.pair_weights(w.coords, shifted);
}

Rat rep_index(const DominantWeight& w) {
  require_dominant(w);
  return Rat(weyl_dim(w)) * casimir2(w) / root_system(w.type).dimension();
}

namespace {

// Reflect a weight into the dominant chamber.
IntVec dominant_rep(const RootSystem& rs, IntVec m) {
  const IntMat& a = rs.cartan();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (m[i] < 0) {
        int mi = m[i];
        for (int k = 0; k < rs.rank(); ++k) m[k] -= mi * a[i][k];
        moved = true;
      }
    }
  }
  return m;
}

// Is lambda - mu a non-negative integer combination of simple roots?
bool below(const RootSystem& rs, const IntVec& lambda, const IntVec& mu) {
  IntVec diff(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) diff[i] = lambda[i] - mu[i];
  RatVec c = rs.fundamental_to_root(diff);
  for (auto& x : c)
    if (!is_integer(x) || x < 0) return false;
  return true;
}

}  // namespace

WeightMultiset weight_system(const DominantWeight& w, long long cap) {
  require_dominant(w);
  const RootSystem& rs = root_system(w.type);
  Int dim = weyl_dim(w);
  if (dim > cap)
    fail(Err::DimensionCapExceeded,
         "dim " + dim.str() + " exceeds cap " + std::to_string(cap));

  // dominant weights of the module: dominant mu with lambda - mu in Q+
  std::vector<IntVec> dominants;
  {
    std::set<IntVec> seen;
    std::deque<IntVec> queue{w.coords};
    seen.insert(w.coords);
    while (!queue.empty()) {
      IntVec m = queue.front();
      queue.pop_front();
      if (!below(rs, w.coords, dominant_rep(rs, m))) continue;
      dominants.push_back(m);  // may be non-dominant; filtered below
      for (int i = 0; i < rs.rank(); ++i) {
        IntVec child = m;
        for (int k = 0; k < rs.rank(); ++k) child[k] -= rs.cartan()[i][k];
        if (seen.insert(child).second) queue.push_back(child);
      }
    }
    std::vector<IntVec> keep;
    for (auto& m : dominants) {
      bool dom = true;
      for (int c : m)
        if (c < 0) dom = false;
      if (dom) keep.push_back(m);
    }
    dominants = std::move(keep);
  }

  // order by increasing depth lambda - mu so higher weights come first
  auto depth = [&](const IntVec& m) {
    IntVec diff(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) diff[i] = w.coords[i] - m[i];
    RatVec cc = rs.fundamental_to_root(diff);
    Rat d = 0;
    for (auto& x : cc) d += x;
    return d;
  };
  std::sort(dominants.begin(), dominants.end(), [&](const IntVec& a, const IntVec& b) {
    Rat da = depth(a), db = depth(b);
    if (da != db) return da < db;
    return a < b;
  });

  std::map<IntVec, long long> mult;  // keyed by dominant representative
  IntVec rho(rs.rank(), 1);
  auto norm_shift = [&](const IntVec& m) {
    IntVec s(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) s[i] = m[i] + rho[i];
    return rs.pair_weights(s, s);
  };
  Rat top = norm_shift(w.coords);

  for (const auto& mu : dominants) {
    if (mu == w.coords) {
      mult[mu] = 1;
      continue;
    }
    // Freudenthal: ((l+r,l+r)-(m+r,m+r)) mult(m) = 2 sum_{a>0,k>0} mult(m+ka)(m+ka,a)
    Rat acc = 0;
    for (const auto& a : rs.positive_roots()) {
      IntVec af = rs.to_fundamental(a);
      IntVec cur = mu;
      for (int k = 1;; ++k) {
        for (int i = 0; i < rs.rank(); ++i) cur[i] += af[i];
        // the alpha-string through mu meets the saturated weight set in an
        // interval, so the first miss ends the climb
        auto it = mult.find(dominant_rep(rs, cur));
        if (it == mult.end()) break;
        Rat pair = 0;  // (mu + k alpha, alpha)
        for (int j = 0; j < rs.rank(); ++j)
          if (a[j] != 0) pair += Rat(cur[j]) * Rat(a[j]) * rs.gram_Q()[j][j];
        acc += Rat(it->second) * pair / 2;
      }
    }
    Rat denom = top - norm_shift(mu);
    Rat m = Rat(2) * acc / denom;
    mult[mu] = static_cast<long long>(to_ll(m));
  }

  // expand Weyl orbits
  WeightMultiset out;
  for (auto& [mu, m] : mult) {
    if (m == 0) continue;
    std::set<IntVec> orbit{mu};
    std::deque<IntVec> queue{mu};
    while (!queue.empty()) {
      IntVec v = queue.front();
      queue.pop_front();
      for (int i = 0; i < rs.rank(); ++i) {
        if (v[i] == 0) continue;
        IntVec r = v;
        int vi = v[i];
        for (int k = 0; k < rs.rank(); ++k) r[k] -= vi * rs.cartan()[i][k];
        if (orbit.insert(r).second) queue.push_back(r);
      }
    }
    for (const auto& v : orbit) out.entries[v] += m;
  }
  if (Int(out.total()) != dim)
    fail(Err::InvalidType, "weight system total does not match Weyl dimension");
  return out;
}

std::vector<WeightMultiset> branch_weights(SimpleTypeId ambient,
                                           const WeightMultiset& w,
                                           const ProjectionMap& p) {
  p.validate(ambient);
  std::vector<WeightMultiset> out(p.factors.size());
  for (auto& [mu, m] : w.entries) {
    for (size_t f = 0; f < p.factors.size(); ++f) {
      RatVec img = rat_apply(p.blocks[f], RatVec(mu.begin(), mu.end()));
      IntVec key(img.size());
      for (size_t i = 0; i < img.size(); ++i) {
        if (!is_integer(img[i]))
          fail(Err::IncompatibleShapes, "branched weight is not integral");
        key[i] = static_cast<int>(static_cast<long long>(to_integer(img[i])));
      }
      out[f].entries[key] += m;
    }
  }
  return out;
}

Rat multiset_index(SimpleTypeId type, const WeightMultiset& w) {
  const RootSystem& rs = root_system(type);
  Rat sum = 0;
  for (auto& [mu, m] : w.entries) sum += Rat(m) * rs.pair_weights(mu, mu);
  return sum / rs.rank();
}

}  // namespace lie
