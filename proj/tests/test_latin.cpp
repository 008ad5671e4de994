#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

#include "cmkit/families.hpp"
#include "cmkit/latin.hpp"
#include "cmkit/mappings.hpp"
#include "cmkit/search.hpp"
#include "test_support.hpp"

using namespace cmkit;

TEST_CASE("l_h squares and the named specializations") {
  FiniteGroup g = mk_cyclic(5);
  LatinSquare a = cayley_square(g);
  LatinSquare a2 = l_h_square(g, Perm::identity(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) REQUIRE(a.at(i, j) == a2.at(i, j));

  Perm f({1, 2, 3, 4, 0});  // x + 1, a complete mapping
  REQUIRE(is_complete_mapping(g, f));
  LatinSquare cf = l_h_square(g, f);
  LatinSquare bf = l_h_square(g, associated_orthomorphism(g, f));
  // B_f is the Mann product A * C_f
  auto prod = as_latin(mann_product(a, cf));
  REQUIRE(prod.has_value());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) REQUIRE(bf.at(i, j) == prod->at(i, j));
}

TEST_CASE("row, column and symbol permutations factor through the group") {
  std::mt19937_64 rng(4242);
  for (const auto& G : {mk_cyclic(7), mk_q8(), mk_small16(11)}) {
    int n = G.order();
    for (int trial = 0; trial < 100; ++trial) {
      Perm h = testsupport::random_perm(n, rng);
      LatinSquare L = l_h_square(G, h);
      Perm inv_perm = compose_with_inversion(G, Perm::identity(n), Side::right);
      for (int i = 0; i < n; ++i)
        REQUIRE(L.row_perm(i) == regular_rep(G, h(i), Side::left));
      for (int j = 0; j < n; ++j)
        REQUIRE(L.col_perm(j) == compose(regular_rep(G, j, Side::right), h));
      for (int x = 0; x < n; ++x)
        REQUIRE(L.symbol_perm(x) ==
                compose(regular_rep(G, x, Side::right), compose(inv_perm, h)));
    }
  }
}

TEST_CASE("fundamental relation and small parity values") {
  FiniteGroup z3 = mk_cyclic(3);
  FHWType a3 = parities(cayley_square(z3));
  CHECK(a3 == FHWType{Parity::even, Parity::even, Parity::odd});

  // column j of the Cayley table is the right translation, symbol 1 the
  // inversion
  LatinSquare a = cayley_square(mk_q8());
  for (int j = 0; j < 8; ++j)
    CHECK(a.col_perm(j) == regular_rep(mk_q8(), j, Side::right));
  CHECK(a.symbol_perm(0) ==
        compose_with_inversion(mk_q8(), Perm::identity(8), Side::right));
}

TEST_CASE("sigma closed form across the roster") {
  for (const auto& G : testsupport::group_roster()) {
    CAPTURE(G.name());
    Parity expect = G.order() % 4 == 2 ? Parity::odd : Parity::even;
    REQUIRE(sigma(G) == expect);  // sigma itself asserts the closed form
  }
}

TEST_CASE("parity triple theorem for representatives of each residue class") {
  std::mt19937_64 rng(314159);
  std::vector<FiniteGroup> reps;
  reps.push_back(mk_cyclic(8));
  reps.push_back(mk_direct_product(mk_cyclic(4), mk_cyclic(2)));
  reps.push_back(mk_two_generated_2group(TwoGenKind::D, 3));
  reps.push_back(mk_cyclic(5));
  reps.push_back(mk_cyclic(9));
  reps.push_back(mk_cyclic(13));
  reps.push_back(mk_cyclic(6));
  reps.push_back(mk_cyclic(10));
  reps.push_back(mk_cyclic(3));
  reps.push_back(mk_cyclic(7));
  reps.push_back(mk_cyclic(11));
  for (const auto& G : reps) {
    CAPTURE(G.name());
    for (int t = 0; t < 30; ++t) {
      Perm h = testsupport::random_perm(G.order(), rng);
      REQUIRE(fhw_theorem_check(G, h));
    }
  }
}

TEST_CASE("kotlar types") {
  std::mt19937_64 rng(11);
  // Hall-Paige groups: all rows and columns share one parity
  for (const auto& G : {mk_cyclic(5), mk_q8(), mk_elementary_abelian(2, 3)}) {
    for (int t = 0; t < 10; ++t) {
      Perm h = testsupport::random_perm(G.order(), rng);
      KType kt = kotlar_type(l_h_square(G, h));
      REQUIRE(kt == KType{0, 0});
    }
  }
  // cyclic groups of twice-odd order: an even split
  for (int m : {2, 6, 10}) {
    FiniteGroup G = mk_cyclic(m);
    for (int t = 0; t < 10; ++t) {
      Perm h = testsupport::random_perm(m, rng);
      KType kt = kotlar_type(l_h_square(G, h));
      REQUIRE(kt == KType{m / 2, m / 2});
    }
  }
}

TEST_CASE("orthogonality of the Mann pair") {
  for (const auto& G : {mk_cyclic(5), mk_cyclic(7), mk_elementary_abelian(2, 2)}) {
    LatinSquare a = cayley_square(G);
    CHECK_FALSE(is_orthogonal(a, a));
    for (const auto& f : collect_cms(G)) {
      LatinSquare bf = l_h_square(G, associated_orthomorphism(G, f));
      REQUIRE(is_orthogonal(a, bf));
    }
  }
}

TEST_CASE("mann products need not stay Latin") {
  FiniteGroup c2 = mk_cyclic(2);
  LatinSquare a = cayley_square(c2);
  RowLatinSquare aa = mann_product(a, a);
  CHECK_FALSE(as_latin(aa).has_value());  // both rows become the identity
}

TEST_CASE("achieved parity types over all complete mappings") {
  // |G| = 0 mod 4 collapses to a single type; odd orders split by pi(f)
  using Types = std::set<std::string>;
  auto types_of = [](const FiniteGroup& G, const std::vector<Perm>& cms) {
    std::pair<Types, Types> out;  // B_f types, C_f types
    for (const auto& f : cms) {
      out.first.insert(to_string(parities(l_h_square(G, associated_orthomorphism(G, f)))));
      out.second.insert(to_string(parities(l_h_square(G, f))));
    }
    return out;
  };
  auto exhaustive = [&](const FiniteGroup& G, const Types& expect) {
    CAPTURE(G.name());
    auto [bf, cf] = types_of(G, collect_cms(G));
    CHECK(bf == expect);
    CHECK(cf == expect);
  };
  exhaustive(mk_elementary_abelian(2, 2), Types{"(0,0,0)"});
  exhaustive(mk_q8(), Types{"(0,0,0)"});
  exhaustive(mk_cyclic(5), Types{"(0,0,0)", "(0,1,1)"});
  exhaustive(mk_cyclic(7), Types{"(0,0,1)", "(0,1,0)"});
  exhaustive(mk_elementary_abelian(3, 2), Types{"(0,0,0)", "(0,1,1)"});
  // larger orders, sampled: a prefix of the enumeration for order 12, and
  // witnesses of both parities for orders 11 and 16
  FiniteGroup c6c2 = mk_direct_product(mk_cyclic(6), mk_cyclic(2));
  auto [bf12, cf12] = types_of(c6c2, collect_cms(c6c2, 2000));
  CHECK(bf12 == Types{"(0,0,0)"});
  CHECK(cf12 == Types{"(0,0,0)"});
  FiniteGroup c11 = mk_cyclic(11);
  auto [bf11, cf11] =
      types_of(c11, {Perm::identity(11), field_fixture(FieldFixtureId::f11).perm});
  Types expect11{"(0,0,1)", "(0,1,0)"};
  CHECK(cf11 == expect11);
  for (const auto& t : bf11) CHECK(expect11.count(t) == 1);
  FiniteGroup f16 = mk_elementary_abelian(2, 4);
  auto [bf16, cf16] =
      types_of(f16, {singer_even_cm(4), field_fixture(FieldFixtureId::f16).perm});
  CHECK(bf16 == Types{"(0,0,0)"});
  CHECK(cf16 == Types{"(0,0,0)"});
}

TEST_CASE("latin square text round trip and import") {
  FiniteGroup g = mk_cyclic(4);
  LatinSquare a = cayley_square(g);
  std::ostringstream out;
  write_latin_square(out, a);
  LatinSquare back = read_latin_square_text(out.str());
  CHECK(back.degree() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(back.at(i, j) == a.at(i, j));
  CHECK(back.provenance() == LatinProvenance::external);

  CHECK_THROWS(read_latin_square_text("2\n0 1\n0 1\n"));  // repeated column
  CHECK_THROWS(read_latin_square_text("2\n0 1\n"));       // missing cells
}
