#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootsystem.hpp"

using namespace lie;

namespace {

std::vector<SimpleTypeId> all_types_up_to_rank_8() {
  std::vector<SimpleTypeId> ts;
  for (int n = 1; n <= 8; ++n) ts.push_back(SimpleTypeId::make('A', n));
  for (int n = 2; n <= 8; ++n) ts.push_back(SimpleTypeId::make('B', n));
  for (int n = 3; n <= 8; ++n) ts.push_back(SimpleTypeId::make('C', n));
  for (int n = 4; n <= 8; ++n) ts.push_back(SimpleTypeId::make('D', n));
  for (int n = 6; n <= 8; ++n) ts.push_back(SimpleTypeId::make('E', n));
  ts.push_back(SimpleTypeId::make('F', 4));
  ts.push_back(SimpleTypeId::make('G', 2));
  return ts;
}

}  // namespace

TEST_CASE("cartan matrices in the fixed numbering") {
  CHECK(cartan_matrix(SimpleTypeId::make('A', 1)) == IntMat{{2}});
  CHECK(cartan_matrix(SimpleTypeId::make('A', 2)) == IntMat{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(SimpleTypeId::make('G', 2)) == IntMat{{2, -1}, {-3, 2}});
  IntMat f4 = cartan_matrix(SimpleTypeId::make('F', 4));
  CHECK(f4[1][2] == -2);
  CHECK(f4[2][1] == -1);
  IntMat b3 = cartan_matrix(SimpleTypeId::make('B', 3));
  CHECK(b3[1][2] == -2);
  IntMat c3 = cartan_matrix(SimpleTypeId::make('C', 3));
  CHECK(c3[1][2] == -1);
  CHECK(c3[2][1] == -2);
}

TEST_CASE("type canonicalization and validation") {
  CHECK(SimpleTypeId::make('C', 2) == SimpleTypeId::make('B', 2));
  CHECK(SimpleTypeId::make('D', 3) == SimpleTypeId::make('A', 3));
  CHECK(SimpleTypeId::make('C', 1) == SimpleTypeId::make('A', 1));
  CHECK_THROWS_AS(SimpleTypeId::make('E', 5), LieError);
  CHECK_THROWS_AS(SimpleTypeId::make('F', 3), LieError);
  CHECK_THROWS_AS(SimpleTypeId::make('A', 0), LieError);
  CHECK_THROWS_AS(SimpleTypeId::make('H', 3), LieError);
  CHECK(SimpleTypeId::parse("e8").str() == "E8");
  CHECK(SimpleTypeId::parse("D3").str() == "A3");
}

TEST_CASE("root counts and dimensions of the exceptional types") {
  struct Row { const char* t; int roots; int dim; };
  const Row rows[] = {
      {"G2", 12, 14}, {"F4", 48, 52}, {"E6", 72, 78}, {"E7", 126, 133},
      {"E8", 240, 248}, {"A2", 6, 8}, {"B2", 8, 10},
  };
  for (auto& r : rows) {
    const RootSystem& rs = root_system(SimpleTypeId::parse(r.t));
    CHECK(static_cast<int>(rs.roots().size()) == r.roots);
    CHECK(rs.dimension() == r.dim);
  }
}

TEST_CASE("root sets are negation-closed, even, deterministic") {
  for (auto t : all_types_up_to_rank_8()) {
    RootSystem a(t), b(t);
    CHECK(a.roots() == b.roots());
    CHECK(a.roots().size() % 2 == 0);
    CHECK(static_cast<int>(a.roots().size()) + t.rank == t.dimension());
    std::set<IntVec> set(a.roots().begin(), a.roots().end());
    for (const auto& v : a.roots()) {
      IntVec neg(v.size());
      for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      CHECK(set.count(neg) == 1);
    }
  }
}

TEST_CASE("normalization: longest root has Q-norm exactly 2") {
  for (auto t : all_types_up_to_rank_8()) {
    const RootSystem& rs = root_system(t);
    Rat max_norm = 0;
    std::set<Rat> norms;
    for (const auto& v : rs.roots()) {
      Rat n = rs.q_norm(v);
      CHECK(n > 0);
      norms.insert(n);
      if (n > max_norm) max_norm = n;
    }
    CHECK(max_norm == Rat(2));
    CHECK(norms.size() <= 2);
    if (norms.size() == 2) {
      Rat ratio = Rat(2) / *norms.begin();
      bool doubled = ratio == Rat(2), tripled = ratio == Rat(3);
      CHECK((doubled || tripled));
      if (t.family == 'G') CHECK(tripled);
      if (t.family == 'B' || t.family == 'C' || t.family == 'F') CHECK(doubled);
    } else {
      bool ade = t.family == 'A' || t.family == 'D' || t.family == 'E';
      CHECK(ade);
    }
  }
}

TEST_CASE("short-root norms pinned for G2 and F4") {
  const RootSystem& g2 = root_system(SimpleTypeId::parse("G2"));
  CHECK(g2.q_norm({1, 0}) == Rat(2, 3));  // alpha_1 is short
  CHECK(g2.q_norm({0, 1}) == Rat(2));
  const RootSystem& f4 = root_system(SimpleTypeId::parse("F4"));
  CHECK(f4.q_norm({0, 0, 0, 1}) == Rat(1));
  CHECK(f4.q_norm({1, 0, 0, 0}) == Rat(2));
}

TEST_CASE("highest roots") {
  CHECK(root_system(SimpleTypeId::parse("A1")).highest_root() == IntVec{1});
  CHECK(root_system(SimpleTypeId::parse("G2")).highest_root() == IntVec{3, 2});
  CHECK(root_system(SimpleTypeId::parse("E8")).highest_root() ==
        IntVec{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(root_system(SimpleTypeId::parse("F4")).highest_root() == IntVec{2, 3, 4, 2});
  // the highest root dominates every root in the standard partial order
  for (const char* t : {"B4", "C5", "D6", "E7"}) {
    const RootSystem& rs = root_system(SimpleTypeId::parse(t));
    const IntVec& h = rs.highest_root();
    CHECK(rs.q_norm(h) == Rat(2));
    for (const auto& v : rs.roots())
      for (size_t i = 0; i < v.size(); ++i) CHECK(v[i] <= h[i]);
  }
}

TEST_CASE("dual Coxeter numbers") {
  struct Row { const char* t; int h; };
  const Row rows[] = {{"A1", 2}, {"G2", 4},  {"F4", 9},  {"E6", 12},
                      {"E7", 18}, {"E8", 30}, {"B4", 7},  {"C4", 5},
                      {"D5", 8},  {"A5", 6}};
  for (auto& r : rows)
    CHECK(root_system(SimpleTypeId::parse(r.t)).dual_coxeter() == r.h);
}

TEST_CASE("fundamental coordinate round trip") {
  for (const char* t : {"G2", "F4", "B3", "C3", "D4", "A4"}) {
    const RootSystem& rs = root_system(SimpleTypeId::parse(t));
    for (const auto& v : rs.roots()) {
      RatVec back = rs.fundamental_to_root(rs.to_fundamental(v));
      for (int i = 0; i < rs.rank(); ++i) CHECK(back[i] == Rat(v[i]));
    }
  }
}

TEST_CASE("weight-root pairing agrees with the Gram pairing") {
  const RootSystem& rs = root_system(SimpleTypeId::parse("F4"));
  for (const auto& a : rs.positive_roots())
    for (const auto& b : rs.positive_roots()) {
      CHECK(rs.pair_weight_root(rs.to_fundamental(a), b) == rs.q_pair(a, b));
      CHECK(rs.pair_weights(rs.to_fundamental(a), rs.to_fundamental(b)) ==
            rs.q_pair(a, b));
    }
}
