#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reps.hpp"

using namespace lie;

namespace {
SimpleTypeId T(const char* s) { return SimpleTypeId::parse(s); }
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(DominantWeight::zero(T("A2"))) == 1);
  CHECK(weyl_dim(DominantWeight::adjoint(T("A2"))) == 8);
  CHECK(weyl_dim(DominantWeight::adjoint(T("E8"))) == 248);
  CHECK(weyl_dim(DominantWeight::fundamental(T("G2"), 1)) == 7);
  CHECK(weyl_dim(DominantWeight::fundamental(T("B2"), 1)) == 5);
  CHECK(weyl_dim(DominantWeight::fundamental(T("A1"), 1)) == 2);
  CHECK(weyl_dim(DominantWeight::fundamental(T("E6"), 1)) == 27);
  CHECK(weyl_dim(DominantWeight::fundamental(T("F4"), 4)) == 26);
  CHECK_THROWS_AS(weyl_dim(DominantWeight{T("A2"), {-1, 0}}), LieError);
}

TEST_CASE("quadratic Casimir") {
  CHECK(casimir2(DominantWeight::zero(T("A2"))) == Rat(0));
  CHECK(casimir2(DominantWeight::fundamental(T("A1"), 1)) == Rat(3, 2));
  CHECK(casimir2(DominantWeight::adjoint(T("G2"))) == Rat(8));
}

TEST_CASE("representation index") {
  CHECK(rep_index(DominantWeight::fundamental(T("A1"), 1)) == Rat(1));
  CHECK(rep_index(DominantWeight::fundamental(T("B2"), 1)) == Rat(2));
  CHECK(rep_index(DominantWeight::adjoint(T("G2"))) == Rat(8));
}

TEST_CASE("adjoint index equals twice the dual Coxeter number, rank <= 8") {
  std::vector<SimpleTypeId> ts;
  for (int n = 1; n <= 8; ++n) ts.push_back(T(("A" + std::to_string(n)).c_str()));
  for (int n = 2; n <= 8; ++n) ts.push_back(T(("B" + std::to_string(n)).c_str()));
  for (int n = 3; n <= 8; ++n) ts.push_back(T(("C" + std::to_string(n)).c_str()));
  for (int n = 4; n <= 8; ++n) ts.push_back(T(("D" + std::to_string(n)).c_str()));
  for (const char* e : {"E6", "E7", "E8", "F4", "G2"}) ts.push_back(T(e));
  for (auto t : ts)
    CHECK(rep_index(DominantWeight::adjoint(t)) ==
          Rat(2) * root_system(t).dual_coxeter());
}

TEST_CASE("weight systems via Freudenthal") {
  WeightMultiset a1 = weight_system(DominantWeight::fundamental(T("A1"), 1));
  CHECK(a1.entries == std::map<IntVec, long long>{{{1}, 1}, {{-1}, 1}});

  WeightMultiset adj = weight_system(DominantWeight::adjoint(T("A2")));
  CHECK(adj.total() == 8);
  CHECK(adj.entries.at({0, 0}) == 2);
  int nonzero = 0;
  for (auto& [w, m] : adj.entries)
    if (w != IntVec{0, 0}) {
      CHECK(m == 1);
      ++nonzero;
    }
  CHECK(nonzero == 6);

  WeightMultiset g7 = weight_system(DominantWeight::fundamental(T("G2"), 1));
  CHECK(g7.total() == 7);
  CHECK(g7.entries.at({0, 0}) == 1);
  CHECK(g7.entries.size() == 7);

  // G2 adjoint cross-check of the Casimir-based index via weight sums
  WeightMultiset g14 = weight_system(DominantWeight::adjoint(T("G2")));
  CHECK(multiset_index(T("G2"), g14) == Rat(8));
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(weight_system(DominantWeight{T("A2"), {40, 40}}, 100), LieError);
}

TEST_CASE("trace identity over all small fundamental representations") {
  // For each coroot direction, sum mult * coord^2 = index * 4 / Q(alpha,alpha).
  std::vector<SimpleTypeId> ts;
  for (const char* s : {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                        "C3", "C4", "D4", "F4", "G2"})
    ts.push_back(T(s));
  for (auto t : ts) {
    const RootSystem& rs = root_system(t);
    for (int i = 1; i <= t.rank; ++i) {
      DominantWeight w = DominantWeight::fundamental(t, i);
      if (weyl_dim(w) > 1000) continue;
      WeightMultiset ws = weight_system(w);
      Rat idx = rep_index(w);
      CHECK(multiset_index(t, ws) == idx);
      for (int dir = 0; dir < t.rank; ++dir) {
        Rat s = 0;
        for (auto& [mu, m] : ws.entries) s += Rat(m) * mu[dir] * mu[dir];
        CHECK(s == idx * 4 / rs.q_norm_simple(dir));
      }
      CHECK(Int(ws.total()) == weyl_dim(w));
    }
  }
}

TEST_CASE("branching through an explicit projection") {
  // identity projection leaves the multiset unchanged
  WeightMultiset adj = weight_system(DominantWeight::adjoint(T("A2")));
  ProjectionMap ident{{T("A2")}, {rat_identity(2)}};
  auto out = branch_weights(T("A2"), adj, ident);
  REQUIRE(out.size() == 1);
  CHECK(out[0].entries == adj.entries);

  // so4 inside so5 restricted to the defining 5-dim representation:
  // each sl2 factor sees 4 nonzero weights and one zero weight
  WeightMultiset five = weight_system(DominantWeight::fundamental(T("B2"), 1));
  ProjectionMap p{{T("A1"), T("A1")},
                  {{{Rat(1), Rat(0)}}, {{Rat(1), Rat(1)}}}};
  auto parts = branch_weights(T("B2"), five, p);
  REQUIRE(parts.size() == 2);
  for (auto& part : parts) {
    CHECK(part.total() == 5);
    CHECK(part.entries.at({0}) == 1);
    CHECK(part.entries.at({1}) == 2);
    CHECK(part.entries.at({-1}) == 2);
    CHECK(multiset_index(T("A1"), part) == Rat(2));
  }

  ProjectionMap bad{{T("A1")}, {{{Rat(1, 3), Rat(0)}}}};
  CHECK_THROWS_AS(branch_weights(T("B2"), five, bad), LieError);
}
