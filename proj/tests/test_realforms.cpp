#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realforms.hpp"
#include "rootsystem.hpp"

using namespace lie;

TEST_CASE("lookup of table-anchored forms") {
  const RealFormCatalog& cat = RealFormCatalog::bundled();
  const RealFormDesc& g2 = cat.lookup("g2^2");
  CHECK(g2.dim_g == 14);
  CHECK(g2.dim_k == 6);
  CHECK(g2.dim_p == 8);
  CHECK(cat.lookup("f4^{-20}").dim_p == 16);
  CHECK(cat.lookup("e8^8").dim_p == 128);
  CHECK(cat.lookup("su*_8").dim_p == 27);
  CHECK(cat.lookup("sp_{2,2}").dim_p == 16);
  CHECK(cat.lookup("e6(C)").dim_p == 78);
  CHECK_THROWS_AS(cat.lookup("e9^9"), LieError);
}

TEST_CASE("catalog-wide structural invariants") {
  const RealFormCatalog& cat = RealFormCatalog::bundled();
  for (const auto& d : cat.all()) {
    CHECK(d.dim_k + d.dim_p == d.dim_g);
    CHECK(d.character == d.dim_p - d.dim_k);
    // dimension against the generated root system of the complexification
    const RootSystem& rs = root_system(d.base);
    int dim_c = rs.rank() + static_cast<int>(rs.roots().size());
    CHECK(d.dim_g == (d.absolutely_simple ? dim_c : 2 * dim_c));
    if (!d.compact()) CHECK(d.dim_p > 0);
  }
}

TEST_CASE("space dimensions") {
  const RealFormCatalog& cat = RealFormCatalog::bundled();
  CHECK(cat.space_dim({"R", "e6^6"}) == 43);
  CHECK(cat.space_dim({"sl_2(C)", "sp_3(C)"}) == 24);
  CHECK(cat.space_dim({"g2^2"}) == 8);
  CHECK(cat.space_dim({"R^3", "sl_2(R)"}) == 5);
  CHECK_THROWS_AS(cat.space_dim({"nonsense"}), LieError);
  SymmetricSpaceDesc s = cat.space("e7^7");
  CHECK(s.dim == 70);
  CHECK(s.rank == 7);
  CHECK(s.type == '3');
  CHECK(cat.space("g2(C)").type == '4');
}

TEST_CASE("complexification skeletons") {
  const RealFormCatalog& cat = RealFormCatalog::bundled();

  // realified subalgebra of an absolutely simple ambient doubles
  ComplexifiedPair a = cat.complexify_pair("sl_3(C)", "e6^{-26}");
  CHECK(a.kind == ComplexifiedPair::Kind::General);
  CHECK(a.ambient == SimpleTypeId::parse("E6"));
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].doubled);
  CHECK(a.expanded() ==
        std::vector<SimpleTypeId>{SimpleTypeId::parse("A2"), SimpleTypeId::parse("A2")});

  ComplexifiedPair b = cat.complexify_pair("f4^4", "e6^6");
  CHECK(b.factors.size() == 1);
  CHECK_FALSE(b.factors[0].doubled);
  CHECK(b.factors[0].base == SimpleTypeId::parse("F4"));

  // real form of a realified ambient short-circuits to index one
  ComplexifiedPair c = cat.complexify_pair("e6^6", "e6(C)");
  CHECK(c.kind == ComplexifiedPair::Kind::RealFormOfComplex);

  // complex subalgebra of a realified ambient
  ComplexifiedPair d = cat.complexify_factors({"sl_2(C)", "e7(C)"}, "e8(C)");
  CHECK(d.kind == ComplexifiedPair::Kind::General);
  REQUIRE(d.factors.size() == 2);
  CHECK_FALSE(d.factors[0].doubled);

  // a non-matching real subalgebra of a realified ambient is rejected
  CHECK_THROWS_AS(cat.complexify_pair("sl_3(R)", "e6(C)"), LieError);
  // compact ambient rejected
  CHECK_THROWS_AS(cat.complexify_pair("su_2", "f_4"), LieError);
}
