#include "hints.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lie {

std::vector<int> exponents(SimpleTypeId type) {
  const RootSystem& rs = root_system(type);
  // Kostant: the exponents are the conjugate partition of the height
  // distribution of the positive roots.
  std::map<int, int> by_height;
  for (const auto& v : rs.positive_roots()) {
    int h = 0;
    for (int c : v) h += c;
    ++by_height[h];
  }
  int max_h = by_height.rbegin()->first;
  std::vector<int> exps;
  for (int j = 1; j <= rs.rank(); ++j) {
    int e = 0;
    for (int k = 1; k <= max_h; ++k)
      if (by_height.count(k) && by_height[k] >= j) e = k;
    exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

// "name(payload)" -> payload, empty optional when the shape does not match
std::optional<std::string> unwrap(const std::string& s, const std::string& name) {
  if (s.rfind(name + "(", 0) != 0 || s.back() != ')') return std::nullopt;
  return s.substr(name.size() + 1, s.size() - name.size() - 2);
}

struct DeletionArgs {
  SimpleTypeId type;
  int node = 0;
  std::vector<int> keep;  // 1-based positions in canonical factor order
};

DeletionArgs parse_deletion(const std::string& payload) {
  auto colon = payload.find(':');
  if (colon == std::string::npos)
    fail(Err::ParseError, "deletion hint '" + payload + "'");
  DeletionArgs args;
  args.type = SimpleTypeId::parse(payload.substr(0, colon));
  std::string rest = payload.substr(colon + 1);
  for (size_t pos = 0; pos <= rest.size();) {
    size_t comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    if (tok.rfind("del=", 0) == 0) {
      args.node = std::atoi(tok.c_str() + 4);
    } else if (tok.rfind("keep=", 0) == 0) {
      std::string list = tok.substr(5);
      // remaining comma-separated integers all belong to keep
      args.keep.push_back(std::atoi(list.c_str()));
      while (comma != std::string::npos) {
        pos = comma + 1;
        comma = rest.find(',', pos);
        std::string k = rest.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
        args.keep.push_back(std::atoi(k.c_str()));
      }
      break;
    } else {
      fail(Err::ParseError, "deletion hint token '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (args.node < 1 || args.node > args.type.rank)
    fail(Err::ParseError, "deletion node out of range");
  return args;
}

IndexResult deletion_index(SimpleTypeId ambient, const DeletionArgs& args,
                           bool extended) {
  if (args.type != ambient)
    fail(Err::IncompatibleShapes, "hint ambient " + args.type.str() +
                                      " vs " + ambient.str());
  const RootSystem& rs = root_system(ambient);
  ExtendedDiagram ext = extended_diagram(ambient);
  std::vector<IntVec> nodes;
  for (int i = extended ? 0 : 1; i < static_cast<int>(ext.nodes.size()); ++i)
    if (i != args.node) nodes.push_back(ext.nodes[i]);
  if (nodes.empty()) fail(Err::UnclassifiableDiagram, "deletion leaves nothing");
  auto comps = diagram_components(rs, nodes);
  std::vector<std::vector<IntVec>> factor_roots;
  if (args.keep.empty()) {
    for (auto& [t, cn] : comps) factor_roots.push_back(cn);
  } else {
    for (int k : args.keep) {
      if (k < 1 || k > static_cast<int>(comps.size()))
        fail(Err::ParseError, "keep index out of range");
      factor_roots.push_back(comps[k - 1].second);
    }
  }
  return index_regular(ambient, factor_roots);
}

}  // namespace

Hint Hint::parse(const std::string& text) {
  std::string s = strip_ws(text);
  if (s == "trusted" || s == "-" || s.empty()) return {Kind::Trusted, ""};
  if (s == "realform") return {Kind::RealForm, ""};
  if (auto p = unwrap(s, "real")) return {Kind::Real, *p};
  if (auto p = unwrap(s, "cplx")) return {Kind::Cplx, *p};
  fail(Err::ParseError, "mechanism hint '" + text + "'");
}

IndexResult resolve_cmech(SimpleTypeId ambient, const std::string& cmech) {
  std::string s = strip_ws(cmech);
  if (s == "principal")
    return {{SimpleTypeId::make('A', 1)},
            {index_principal_sl2(ambient, exponents(ambient))}};
  if (auto p = unwrap(s, "bds")) return deletion_index(ambient, parse_deletion(*p), true);
  if (auto p = unwrap(s, "levi"))
    return deletion_index(ambient, parse_deletion(*p), false);
  if (auto p = unwrap(s, "block")) {
    BlockSpec spec = BlockSpec::parse(*p);
    if (block_ambient_type(spec.ambient_alg, spec.ambient_size) != ambient)
      fail(Err::IncompatibleShapes, "block ambient mismatch in '" + cmech + "'");
    return evaluate(block_embedding(spec));
  }
  fail(Err::UnresolvedMechanism, "complex mechanism '" + cmech + "'");
}

namespace {

// all index tuples reachable for `sub` through factor subsets of the
// Borel-de Siebenthal enumeration
void bds_candidates(SimpleTypeId ambient, const ComplexSemisimpleDesc& sub,
                    std::vector<IndexResult>* out) {
  for (const auto& r : enumerate_maximal_regular(ambient)) {
    size_t n = r.sub.factors.size();
    if (n > 6) continue;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<SimpleTypeId> types;
      std::vector<long long> values;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          types.push_back(r.sub.factors[i]);
          values.push_back(r.index.values[i]);
        }
      if (ComplexSemisimpleDesc::of(types) != sub) continue;
      out->push_back({types, values});
    }
  }
}

void block_candidates(SimpleTypeId ambient, const ComplexSemisimpleDesc& sub,
                      std::vector<IndexResult>* out) {
  // interpret ambient and factors as matrix algebras of the matching family
  std::vector<std::string> ambients;
  switch (ambient.family) {
    case 'A': ambients.push_back("sl" + std::to_string(ambient.rank + 1)); break;
    case 'B':
      ambients.push_back("so" + std::to_string(2 * ambient.rank + 1));
      if (ambient.rank == 2) ambients.push_back("sp2");
      break;
    case 'C': ambients.push_back("sp" + std::to_string(ambient.rank)); break;
    case 'D': ambients.push_back("so" + std::to_string(2 * ambient.rank)); break;
    default: return;
  }
  for (const std::string& amb : ambients) {
    char alg = amb[1] == 'l' ? 'l' : amb[1] == 'o' ? 'o' : 'p';
    std::vector<std::vector<int>> options;  // per factor, possible block sizes
    bool ok = true;
    for (auto t : sub.factors) {
      std::vector<int> sizes;
      if (alg == 'l' && t.family == 'A') sizes.push_back(t.rank + 1);
      if (alg == 'o') {
        if (t.family == 'B') sizes.push_back(2 * t.rank + 1);
        if (t.family == 'D') sizes.push_back(2 * t.rank);
        if (t.family == 'A' && t.rank == 1) { sizes.push_back(3); }
        if (t.family == 'A' && t.rank == 3) sizes.push_back(6);
      }
      if (alg == 'p') {
        if (t.family == 'C') sizes.push_back(t.rank);
        if (t.family == 'B' && t.rank == 2) sizes.push_back(2);
        if (t.family == 'A' && t.rank == 1) sizes.push_back(1);
      }
      if (sizes.empty()) ok = false;
      options.push_back(sizes);
    }
    if (!ok) continue;
    // enumerate size choices (factor counts are tiny)
    std::vector<size_t> pick(options.size(), 0);
    while (true) {
      std::string lhs;
      int total = 0;
      for (size_t i = 0; i < options.size(); ++i) {
        if (i) lhs += "+";
        int sz = options[i][pick[i]];
        lhs += std::string(alg == 'l' ? "sl" : alg == 'o' ? "so" : "sp") +
               std::to_string(sz);
        total += sz;
      }
      int cap = std::atoi(amb.c_str() + 2);
      bool fits = total <= cap;
      if (fits) {
        try {
          IndexResult r = evaluate(block_embedding(BlockSpec::parse(lhs + "<" + amb)));
          if (r.sub() == sub) out->push_back(r);
        } catch (const LieError&) {
        }
      }
      size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  // the symplectic and orthogonal form inclusions
  if (ambient.family == 'A' && sub.factors.size() == 1) {
    SimpleTypeId t = sub.factors[0];
    int n = ambient.rank + 1;
    try {
      if ((t.family == 'C' || (t.family == 'B' && t.rank == 2) ||
           (t.family == 'A' && t.rank == 1)) &&
          n == 2 * (t.family == 'C' ? t.rank : t.family == 'B' ? 2 : 1)) {
        int r = t.family == 'C' ? t.rank : t.family == 'B' ? 2 : 1;
        out->push_back(
            evaluate(block_embedding(BlockSpec::parse("sp" + std::to_string(r) +
                                                      "<sl" + std::to_string(n)))));
      }
    } catch (const LieError&) {
    }
    try {
      if (t.family == 'B' || t.family == 'D') {
        int m = t.family == 'B' ? 2 * t.rank + 1 : 2 * t.rank;
        if (m == n)
          out->push_back(evaluate(
              block_embedding(BlockSpec::parse("so" + std::to_string(m) + "<sl" +
                                               std::to_string(n)))));
      }
    } catch (const LieError&) {
    }
  }
}

}  // namespace

IndexResult auto_resolve(SimpleTypeId ambient, const ComplexSemisimpleDesc& sub) {
  std::vector<IndexResult> candidates;
  bds_candidates(ambient, sub, &candidates);
  block_candidates(ambient, sub, &candidates);
  if (ambient.rank == sub.total_rank() && sub.factors.size() == 1 &&
      sub.factors[0] == ambient)
    candidates.push_back({{ambient}, {1}});  // identity embedding
  if (candidates.empty())
    fail(Err::UnresolvedMechanism,
         sub.str() + " in " + ambient.str() + " has no registered mechanism");
  // compare as multisets of (type, value)
  auto key = [](const IndexResult& r) {
    std::vector<std::pair<std::string, long long>> k;
    for (size_t i = 0; i < r.factors.size(); ++i)
      k.emplace_back(r.factors[i].str(), r.values[i]);
    std::sort(k.begin(), k.end());
    return k;
  };
  auto first = key(candidates[0]);
  for (auto& c : candidates)
    if (key(c) != first)
      fail(Err::UnresolvedMechanism,
           sub.str() + " in " + ambient.str() + " is ambiguous");
  return candidates[0];
}

IndexResult index_real(const RealFormCatalog& cat,
                       const std::vector<std::string>& sub_factors,
                       const std::string& ambient, const Hint& hint) {
  ComplexifiedPair skel = cat.complexify_factors(sub_factors, ambient);
  const RealFormDesc& amb = cat.lookup(ambient);

  if (hint.kind == Hint::Kind::RealForm ||
      skel.kind == ComplexifiedPair::Kind::RealFormOfComplex) {
    if (skel.kind != ComplexifiedPair::Kind::RealFormOfComplex)
      fail(Err::UnsupportedCase, "realform hint on a non-real-form pair");
    return {{skel.ambient}, {1}};
  }
  if (hint.kind == Hint::Kind::Real && amb.realified())
    fail(Err::UnsupportedCase, "real() hint on a realified ambient");
  if (hint.kind == Hint::Kind::Cplx && !amb.realified())
    fail(Err::UnsupportedCase, "cplx() hint on an absolutely simple ambient");
  if (hint.kind == Hint::Kind::Trusted)
    fail(Err::UnresolvedMechanism, "trusted rows are not recomputable");

  ComplexSemisimpleDesc expected = ComplexSemisimpleDesc::of(skel.expanded());
  IndexResult r = hint.cmech == "auto" ? auto_resolve(skel.ambient, expected)
                                       : resolve_cmech(skel.ambient, hint.cmech);
  if (r.sub() != expected)
    fail(Err::IncompatibleShapes, "mechanism computes " + r.sub().str() +
                                      ", expected " + expected.str());

  // a realified factor of an absolutely simple ambient contributes a pair of
  // equal entries
  for (const auto& f : skel.factors) {
    if (!f.doubled) continue;
    std::set<long long> values;
    for (size_t i = 0; i < r.factors.size(); ++i)
      if (r.factors[i] == f.base) values.insert(r.values[i]);
    if (values.size() != 1)
      fail(Err::UnsupportedCase,
           "doubled factor " + f.from + " has unequal entries");
  }
  return r;
}

}  // namespace lie
