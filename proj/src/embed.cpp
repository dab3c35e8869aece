#include "embed.hpp"

#include <algorithm>
#include <set>

#include "bds.hpp"

namespace lie {

std::string IndexResult::str() const {
  if (values.size() == 1) return std::to_string(values[0]);
  std::string s = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

bool IndexResult::all_ones() const {
  for (long long v : values)
    if (v != 1) return false;
  return !values.empty();
}

namespace {

// close a simple system under its own reflections inside the ambient
std::vector<IntVec> subsystem_closure(const RootSystem& amb,
                                      const std::vector<IntVec>& simple) {
  std::set<IntVec> seen(simple.begin(), simple.end());
  std::vector<IntVec> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    std::vector<IntVec> next;
    for (const auto& v : queue)
      for (const auto& s : simple) {
        IntVec w = amb.reflect_root(v, s);
        if (seen.insert(w).second) next.push_back(w);
      }
    queue = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

IndexResult index_regular(SimpleTypeId ambient,
                          const std::vector<std::vector<IntVec>>& factor_roots) {
  const RootSystem& amb = root_system(ambient);
  if (factor_roots.empty()) fail(Err::NotASimpleSystem, "no factors");

  // validity: ambient roots, linearly independent, valid Cartan integers,
  // and factors mutually orthogonal
  std::vector<IntVec> all;
  for (const auto& f : factor_roots)
    for (const auto& v : f) {
      if (!amb.is_root(v)) fail(Err::NotASimpleSystem, "vector is not an ambient root");
      all.push_back(v);
    }
  if (ivec_rank(all) != static_cast<int>(all.size()))
    fail(Err::NotASimpleSystem, "roots are not linearly independent");
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      Rat n = Rat(2) * amb.q_pair(all[i], all[j]) / amb.q_norm(all[j]);
      if (!is_integer(n) || n > 0)
        fail(Err::NotASimpleSystem, "invalid Cartan integer in simple system");
    }

  IndexResult out;
  for (const auto& f : factor_roots) {
    auto component = diagram_component_type(amb, f);
    std::vector<IntVec> roots = subsystem_closure(amb, f);
    if (roots.size() != static_cast<size_t>(component.first.root_count()))
      fail(Err::NotASimpleSystem, "subsystem size does not match its diagram type");
    Rat max_norm = 0;
    for (const auto& v : roots) max_norm = std::max(max_norm, amb.q_norm(v));
    Rat idx = Rat(2) / max_norm;
    if (!is_integer(idx) || idx <= 0)
      fail(Err::NonIntegerIndex, "regular index " + rat_str(idx));
    // cross-check the form ratio on every root of the factor against the
    // factor's own normalized system
    const RootSystem& frs = root_system(component.first);
    std::set<Rat> ratios;
    for (const auto& fr : frs.roots()) ratios.insert(frs.q_norm(fr));
    for (const auto& v : roots) {
      Rat scaled = amb.q_norm(v) * idx;
      if (!ratios.count(scaled))
        fail(Err::NotASimpleSystem, "subsystem norms inconsistent with factor type");
    }
    out.factors.push_back(component.first);
    out.values.push_back(to_ll(idx));
  }
  return out;
}

IndexResult index_branched(SimpleTypeId ambient, const DominantWeight& rep,
                           const ProjectionMap& proj) {
  const RootSystem& amb = root_system(ambient);
  if (rep.type != amb.type()) fail(Err::IncompatibleShapes, "rep/ambient mismatch");
  Rat amb_index = rep_index(rep);
  if (amb_index == 0) fail(Err::IncompatibleShapes, "representation is trivial");
  WeightMultiset weights = weight_system(rep);
  std::vector<WeightMultiset> parts = branch_weights(ambient, weights, proj);
  IndexResult out;
  for (size_t f = 0; f < proj.factors.size(); ++f) {
    Rat idx = multiset_index(proj.factors[f], parts[f]) / amb_index;
    if (!is_integer(idx) || idx <= 0)
      fail(Err::NonIntegerIndex, "branched index " + rat_str(idx));
    out.factors.push_back(proj.factors[f]);
    out.values.push_back(to_ll(idx));
  }
  return out;
}

long long index_principal_sl2(SimpleTypeId ambient, const std::vector<int>& exponents) {
  const RootSystem& amb = root_system(ambient);
  if (static_cast<int>(exponents.size()) != amb.rank())
    fail(Err::IncompatibleShapes, "exponent count vs rank");
  // the adjoint branches into irreducibles of dimension 2e+1; the sl2 index
  // of an n-dimensional irreducible is n(n^2-1)/6
  Int total = 0;
  for (int e : exponents) {
    Int n = 2 * e + 1;
    total += n * (n * n - 1) / 6;
  }
  Rat idx = Rat(total) / (2 * amb.dual_coxeter());
  if (!is_integer(idx) || idx <= 0)
    fail(Err::NonIntegerIndex, "principal sl2 index " + rat_str(idx));
  return to_ll(idx);
}

IndexResult index_composite(const std::vector<Embedding>& chain) {
  if (chain.empty()) fail(Err::IncompatibleChain, "empty chain");
  IndexResult head = evaluate(chain.front());
  SimpleTypeId outer = chain.front().ambient;
  long long scale = 1;
  for (size_t i = 1; i < chain.size(); ++i) {
    IndexResult link = evaluate(chain[i]);
    if (link.factors.size() != 1 || link.factors[0] != outer)
      fail(Err::IncompatibleChain,
           "link " + std::to_string(i) + " does not continue from " + outer.str());
    scale *= link.values[0];
    outer = chain[i].ambient;
  }
  IndexResult out = head;
  for (auto& v : out.values) v *= scale;
  return out;
}

IndexResult evaluate(const Embedding& e) {
  if (auto* r = std::get_if<RegularMech>(&e.mech))
    return index_regular(e.ambient, r->factor_roots);
  if (auto* b = std::get_if<BranchedMech>(&e.mech))
    return index_branched(e.ambient, b->rep, b->proj);
  if (auto* p = std::get_if<PrincipalMech>(&e.mech))
    return {{SimpleTypeId::make('A', 1)},
            {index_principal_sl2(e.ambient, p->exponents)}};
  auto& c = std::get<CompositeMech>(e.mech);
  return index_composite(c.chain);
}

Embedding block_embedding(const BlockSpec& spec) {
  SimpleTypeId amb = block_ambient_type(spec.ambient_alg, spec.ambient_size);
  BranchedMech mech{defining_weight(spec.ambient_alg, spec.ambient_size),
                    block_projection(spec)};
  return {amb, std::move(mech)};
}

}  // namespace lie
