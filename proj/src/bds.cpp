#include "bds.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lie {

namespace {

int cartan_int(const RootSystem& rs, const IntVec& a, const IntVec& b) {
  Rat c = Rat(2) * rs.q_pair(a, b) / rs.q_norm(b);
  if (!is_integer(c)) fail(Err::UnclassifiableDiagram, "non-integral pairing");
  return static_cast<int>(to_ll(c));
}

bool is_prime(int m) { return m == 2 || m == 3 || m == 5 || m == 7; }

}  // namespace

ExtendedDiagram extended_diagram(SimpleTypeId type) {
  const RootSystem& rs = root_system(type);
  ExtendedDiagram d;
  d.type = rs.type();
  IntVec lowest(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) lowest[i] = -rs.highest_root()[i];
  d.nodes.push_back(lowest);
  d.marks.push_back(1);
  for (int i = 0; i < rs.rank(); ++i) {
    IntVec e(rs.rank(), 0);
    e[i] = 1;
    d.nodes.push_back(e);
    d.marks.push_back(rs.highest_root()[i]);
  }
  for (size_t i = 0; i < d.nodes.size(); ++i)
    for (size_t j = i + 1; j < d.nodes.size(); ++j) {
      int aij = cartan_int(rs, d.nodes[i], d.nodes[j]);
      int aji = cartan_int(rs, d.nodes[j], d.nodes[i]);
      if (aij != 0)
        d.edges.push_back({static_cast<int>(i), static_cast<int>(j), aij, aji});
    }
  return d;
}

std::vector<std::pair<SimpleTypeId, std::vector<IntVec>>> diagram_components(
    const RootSystem& amb, const std::vector<IntVec>& nodes) {
  size_t n = nodes.size();
  // connectivity by non-orthogonality
  std::vector<std::vector<int>> adj(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (amb.q_pair(nodes[i], nodes[j]) != 0) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(static_cast<size_t>(w));
        }
    }
    ++ncomp;
  }

  std::vector<std::pair<SimpleTypeId, std::vector<IntVec>>> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<IntVec> cn;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == c) cn.push_back(nodes[i]);
    size_t m = cn.size();

    // local structure: degrees, edge multiplicities, norm classes
    int max_mult = 1;
    std::vector<int> deg(m, 0);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        int aij = cartan_int(amb, cn[i], cn[j]);
        int aji = cartan_int(amb, cn[j], cn[i]);
        if (aij == 0) continue;
        if (aij > 0 || aji > 0)
          fail(Err::UnclassifiableDiagram, "positive off-diagonal pairing");
        ++deg[i];
        ++deg[j];
        max_mult = std::max(max_mult, aij * aji);
      }
    Rat max_norm = 0;
    for (auto& v : cn) max_norm = std::max(max_norm, amb.q_norm(v));
    int longs = 0;
    for (auto& v : cn)
      if (amb.q_norm(v) == max_norm) ++longs;
    int shorts = static_cast<int>(m) - longs;

    SimpleTypeId t{'A', 1};
    if (m == 1) {
      t = SimpleTypeId::make('A', 1);
    } else if (max_mult == 3) {
      if (m != 2) fail(Err::UnclassifiableDiagram, "triple bond in rank > 2");
      t = SimpleTypeId::make('G', 2);
    } else if (max_mult == 2) {
      if (m == 2)
        t = SimpleTypeId::make('B', 2);
      else if (shorts == 1)
        t = SimpleTypeId::make('B', static_cast<int>(m));
      else if (longs == 1)
        t = SimpleTypeId::make('C', static_cast<int>(m));
      else if (m == 4 && longs == 2)
        t = SimpleTypeId::make('F', 4);
      else
        fail(Err::UnclassifiableDiagram, "unrecognized doubly-laced diagram");
    } else {
      int deg3 = 0, degmax = 0;
      for (size_t i = 0; i < m; ++i) {
        degmax = std::max(degmax, deg[i]);
        if (deg[i] == 3) ++deg3;
      }
      if (degmax > 3 || deg3 > 1)
        fail(Err::UnclassifiableDiagram, "not a Dynkin diagram shape");
      if (deg3 == 0) {
        t = SimpleTypeId::make('A', static_cast<int>(m));
      } else {
        // branch lengths of the unique trivalent node decide D vs E
        size_t center = 0;
        for (size_t i = 0; i < m; ++i)
          if (deg[i] == 3) center = i;
        std::vector<int> arms;
        for (size_t s = 0; s < m; ++s) {
          if (s == center || cartan_int(amb, cn[s], cn[center]) == 0) continue;
          int len = 1;
          size_t prev = center, cur = s;
          while (true) {
            size_t next = m;
            for (size_t w = 0; w < m; ++w) {
              if (w == prev || w == cur) continue;
              if (cartan_int(amb, cn[cur], cn[w]) != 0) next = w;
            }
            if (next == m) break;
            ++len;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) fail(Err::UnclassifiableDiagram, "trivalent node arms");
        if (arms[0] == 1 && arms[1] == 1)
          t = SimpleTypeId::make('D', static_cast<int>(m));
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
          t = SimpleTypeId::make('E', static_cast<int>(m));
        else
          fail(Err::UnclassifiableDiagram, "unrecognized simply-laced diagram");
      }
    }
    std::sort(cn.begin(), cn.end());
    out.emplace_back(t, std::move(cn));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<SimpleTypeId, std::vector<IntVec>> diagram_component_type(
    const RootSystem& amb, const std::vector<IntVec>& nodes) {
  auto comps = diagram_components(amb, nodes);
  if (comps.size() != 1)
    fail(Err::UnclassifiableDiagram, "expected a connected diagram");
  return comps[0];
}

ComplexSemisimpleDesc classify_subdiagram(const RootSystem& amb,
                                          const std::vector<IntVec>& nodes) {
  if (nodes.empty()) fail(Err::UnclassifiableDiagram, "empty node set");
  std::vector<SimpleTypeId> types;
  for (auto& [t, cn] : diagram_components(amb, nodes)) types.push_back(t);
  return ComplexSemisimpleDesc::of(types);
}

namespace {

RegularSubalgebraResult make_result(const RootSystem& amb,
                                    const std::vector<IntVec>& nodes,
                                    int center_dim, std::string origin) {
  auto comps = diagram_components(amb, nodes);
  RegularSubalgebraResult r;
  r.center_dim = center_dim;
  r.origin = std::move(origin);
  std::vector<SimpleTypeId> types;
  for (auto& [t, cn] : comps) {
    types.push_back(t);
    r.factor_roots.push_back(cn);
  }
  r.sub = ComplexSemisimpleDesc{types};  // already canonically sorted
  r.index = index_regular(amb.type(), r.factor_roots);
  return r;
}

}  // namespace

std::vector<RegularSubalgebraResult> enumerate_extended_deletions(
    SimpleTypeId type, bool include_composite_marks) {
  const RootSystem& rs = root_system(type);
  ExtendedDiagram ext = extended_diagram(type);
  std::vector<RegularSubalgebraResult> out;
  for (int k = 1; k <= rs.rank(); ++k) {
    int mark = ext.marks[k];
    if (mark <= 1) continue;  // reproduces the ambient algebra
    if (!include_composite_marks && !is_prime(mark)) continue;
    std::vector<IntVec> nodes;
    for (size_t i = 0; i < ext.nodes.size(); ++i)
      if (static_cast<int>(i) != k) nodes.push_back(ext.nodes[i]);
    auto r = make_result(rs, nodes, 0, "ext-del:" + std::to_string(k));
    if (!is_prime(mark)) r.origin += ":non-maximal";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RegularSubalgebraResult> enumerate_maximal_regular(SimpleTypeId type) {
  const RootSystem& rs = root_system(type);
  ExtendedDiagram ext = extended_diagram(type);
  std::vector<RegularSubalgebraResult> all = enumerate_extended_deletions(type, false);

  // Levi subalgebras at mark-1 nodes; deletions at higher marks sit inside
  // the extended-diagram result at the same node and are not maximal.
  for (int k = 1; k <= rs.rank(); ++k) {
    if (ext.marks[k] != 1) continue;
    std::vector<IntVec> nodes;
    for (int i = 1; i <= rs.rank(); ++i)
      if (i != k) nodes.push_back(ext.nodes[i]);
    if (nodes.empty()) continue;
    all.push_back(make_result(rs, nodes, 1, "levi:" + std::to_string(k)));
  }

  // remove duplicates up to diagram symmetry, then sort canonically
  std::map<std::string, RegularSubalgebraResult> uniq;
  for (auto& r : all) {
    std::string key = r.sub.str() + "#" + r.index.str() + "#" +
                      std::to_string(r.center_dim);
    uniq.emplace(std::move(key), std::move(r));
  }
  std::vector<RegularSubalgebraResult> out;
  for (auto& [k, r] : uniq) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(),
            [](const RegularSubalgebraResult& a, const RegularSubalgebraResult& b) {
              if (a.center_dim != b.center_dim) return a.center_dim < b.center_dim;
              if (a.sub != b.sub) return a.sub < b.sub;
              return a.index.values < b.index.values;
            });
  return out;
}

}  // namespace lie
