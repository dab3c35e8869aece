#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "atlas.hpp"
#include "data.hpp"

using namespace lie;

TEST_CASE("dataset loads with the expected row counts") {
  const Atlas& atlas = bundled_atlas();
  auto counts = atlas.row_counts();
  CHECK(counts["g2"] == 8);
  CHECK(counts["f4"] == 16);
  CHECK(counts["e6"] == 44);
  CHECK(counts["e7"] == 48);
  CHECK(counts["e8"] == 44);
  CHECK(counts["candidates"] == 145);
  CHECK(counts["lcomplex"] == 50);
  CHECK(counts["ixtg"] == 20);
  CHECK(counts["pairs"] == 19);
}

TEST_CASE("empty or malformed input is rejected") {
  const RealFormCatalog& cat = RealFormCatalog::bundled();
  CHECK_THROWS_AS(load_dataset("", cat), LieError);
  CHECK_THROWS_AS(load_dataset("# only comments\n", cat), LieError);
  CHECK_THROWS_AS(load_dataset("tg|g2|1|g2^2|sl_2(R)|1|yes|4\n", cat), LieError);
  CHECK_THROWS_AS(load_dataset("tg|g2|1|nosuch|sl_2(R)|1|yes|4|trusted\n", cat),
                  LieError);
  std::string dup =
      "tg|g2|1|g2^2|sl_3(R)|1|no|5|trusted\n"
      "tg|g2|1|g2^2|sl_3(R)|1|no|5|trusted\n";
  CHECK_THROWS_AS(load_dataset(dup, cat), LieError);
}

TEST_CASE("load then dump reproduces the file modulo comments") {
  const Atlas& atlas = bundled_atlas();
  std::string expected;
  std::istringstream in(data::atlas_dat);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    expected += line + "\n";
  }
  CHECK(atlas.dump() == expected);
}

TEST_CASE("no printed tuple disagrees with its complexified factor count") {
  for (const auto& e : bundled_atlas().tg) CHECK_FALSE(e.arity_flag);
}

TEST_CASE("verify_dimensions reports zero mismatches") {
  VerifyReport rep = verify_dimensions(bundled_atlas());
  for (auto& r : rep.rows)
    if (r.status == "mismatch") MESSAGE(r.row, " ", r.detail);
  CHECK(rep.mismatched == 0);
  CHECK(rep.checked == 160);  // every final-table row
}

TEST_CASE("verify_indices matches every recomputable row") {
  VerifyReport rep = verify_indices(bundled_atlas());
  for (auto& r : rep.rows)
    if (r.status == "mismatch") MESSAGE(r.row, " ", r.detail);
  CHECK(rep.mismatched == 0);
  CHECK(rep.skipped > 0);
  CHECK(rep.matched + rep.skipped == 160 + 145 + 50);
}

TEST_CASE("theorem B rows and pairs") {
  VerifyReport rep = verify_theorem_b(bundled_atlas());
  for (auto& r : rep.rows)
    if (r.status == "mismatch") MESSAGE(r.row, " ", r.detail);
  CHECK(rep.mismatched == 0);
  CHECK(rep.checked == 31 + 19);  // instances + exceptional pairs
}

TEST_CASE("maximality rank filter") {
  const Atlas& atlas = bundled_atlas();
  auto find = [&](const std::string& amb, int ordinal) -> const CandidateEntry& {
    for (auto& c : atlas.candidates)
      if (c.ambient == amb && c.ordinal == ordinal) return c;
    FAIL("candidate not found");
    return atlas.candidates[0];
  };
  // su_{1,2} with a cancelled su_3 (rank 2) cannot be maximal
  CHECK(maximality_rank_filter(atlas, find("f4^4", 3)) == Maximality::NotMaximal);
  // sp_{1,2} with a cancelled su_2 (rank 1) stays undetermined
  CHECK(maximality_rank_filter(atlas, find("f4^{-20}", 2)) ==
        Maximality::Undetermined);
  // no annotation at all
  CHECK_THROWS_AS(maximality_rank_filter(atlas, find("g2^2", 1)), LieError);

  VerifyReport rep = verify_candidates(atlas);
  for (auto& r : rep.rows)
    if (r.status == "mismatch") MESSAGE(r.row, " ", r.detail);
  CHECK(rep.mismatched == 0);
}
