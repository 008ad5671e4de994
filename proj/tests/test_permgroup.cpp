#include <random>

#include "doctest.h"

#include "cmkit/constructions.hpp"
#include "cmkit/families.hpp"
#include "cmkit/permgroup.hpp"
#include "test_support.hpp"

using namespace cmkit;

TEST_CASE("generated group basics") {
  // a single n-cycle generates a cyclic group of order n
  std::vector<int> c(12);
  for (int i = 0; i < 12; ++i) c[i] = i;
  GeneratedGroup GG({Perm::from_cycles(12, {c})});
  CHECK(GG.order() == BigUint(12));
  CHECK(GG.is_transitive());
  CHECK(GG.contains(Perm::identity(12)));

  // empty generating set
  GeneratedGroup trivial(5);
  CHECK(trivial.order() == BigUint(1));
  CHECK_FALSE(trivial.is_transitive());
  CHECK(classify(trivial).kind == Classification::trivial);
}

TEST_CASE("order is invariant under permuting or duplicating generators") {
  std::mt19937_64 rng(123);
  std::vector<Perm> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(testsupport::random_perm(9, rng));
  GeneratedGroup a(gens);
  std::vector<Perm> shuffled = {gens[2], gens[0], gens[0], gens[3], gens[1], gens[2]};
  GeneratedGroup b(shuffled);
  CHECK(a.order() == b.order());
  for (const auto& g : gens) CHECK(b.contains(g));
}

TEST_CASE("membership for short products of generators") {
  std::mt19937_64 rng(77);
  std::vector<Perm> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(testsupport::random_perm(10, rng));
  GeneratedGroup GG(gens);
  for (int t = 0; t < 200; ++t) {
    Perm p = gens[rng() % gens.size()];
    int extra = static_cast<int>(rng() % 3);
    for (int e = 0; e < extra; ++e) p = compose(p, gens[rng() % gens.size()]);
    REQUIRE(GG.contains(p));
  }
}

TEST_CASE("symmetric and alternating recognition") {
  // transposition + n-cycle generate Sym(n)
  std::vector<int> c(7);
  for (int i = 0; i < 7; ++i) c[i] = i;
  GeneratedGroup sym({Perm::from_cycles(7, {c}), Perm::from_cycles(7, {{0, 1}})});
  CHECK(sym.order() == BigUint::factorial(7));
  CHECK(classify(sym).kind == Classification::symmetric);
  CHECK(sym.is_primitive());

  // two 3-cycles generate Alt(5)
  GeneratedGroup alt({Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{2, 3, 4}})});
  BigUint half = BigUint(60);
  CHECK(alt.order() == half);
  CHECK(classify(alt).kind == Classification::alternating);
}

TEST_CASE("regular cyclic action is transitive but imprimitive") {
  FiniteGroup c4 = mk_cyclic(4);
  GeneratedGroup GG({regular_rep(c4, 1, Side::right)});
  CHECK(GG.is_transitive());
  CHECK_FALSE(GG.is_primitive());  // blocks = cosets of C2
}

TEST_CASE("affine group orders") {
  CHECK(agl_order(5, 1) == BigUint(20));
  CHECK(agl_order(2, 3) == BigUint(1344));
  CHECK(agl_order(2, 4).to_string() == "322560");
  CHECK(prime_power(16) == std::make_pair(2, 4));
  CHECK(prime_power(11) == std::make_pair(11, 1));
  CHECK_FALSE(prime_power(12).has_value());
}

TEST_CASE("exhaustive compositions for small fields") {
  // 5-element field: all complete mappings generate the affine group
  FiniteGroup f5 = mk_cyclic(5);
  auto comp = p_comp(f5);
  CHECK(comp.order() == BigUint(20));
  CHECK(classify(comp).kind == Classification::affine_match);
  auto orth = p_orth(f5);
  CHECK(orth.order() == BigUint(20));

  // 3-element field: translations only / the full symmetric group
  FiniteGroup f3 = mk_cyclic(3);
  CHECK(p_comp(f3).order() == BigUint(3));
  CHECK(classify(p_comp(f3)).kind == Classification::alternating);
  CHECK(p_orth(f3).order() == BigUint(6));
  CHECK(classify(p_orth(f3)).kind == Classification::symmetric);

  // 2-element field: no generators at all
  FiniteGroup f2 = mk_cyclic(2);
  CHECK(p_comp(f2).order() == BigUint(1));
  CHECK_FALSE(p_comp(f2).is_transitive());

  // 4-element field: the alternating group, and it is primitive
  FiniteGroup f4 = mk_elementary_abelian(2, 2);
  auto pc4 = p_comp(f4);
  CHECK(pc4.order() == BigUint(12));
  CHECK(classify(pc4).kind == Classification::alternating);
  CHECK(pc4.is_primitive());
  CHECK(p_orth(f4).order() == BigUint(12));

  CHECK_THROWS(p_comp(mk_elementary_abelian(2, 4)));  // exhaustive guard at 11
}

TEST_CASE("sampled composition closure") {
  FiniteGroup f16 = mk_elementary_abelian(2, 4);
  PGroupOptions opt;
  opt.mode = PMode::sampled;
  opt.budget.seed = 9;
  opt.seeds = {field_fixture(FieldFixtureId::f16).perm, singer_even_cm(4)};
  auto GG = p_comp(f16, opt);
  // closure law: rho(x) o f stays inside for every seed f and x
  for (const auto& f : opt.seeds)
    for (int x = 0; x < 16; ++x)
      REQUIRE(GG.contains(compose(regular_rep(f16, x, Side::right), f)));
  CHECK(GG.order() == BigUint::factorial(16));
}

TEST_CASE("count estimates against exact counts") {
  CHECK(estimate_cm_count(mk_cyclic(5)) == doctest::Approx(13.9745).epsilon(1e-3));
  CHECK(estimate_cm_count(mk_cyclic(7)) == doctest::Approx(130.956).epsilon(1e-3));
  CHECK(estimate_cm_count(mk_cyclic(2)) == doctest::Approx(1.2131).epsilon(1e-3));
  // the abelianization factor: |G/G'| for the quaternion group is 4
  double q8 = estimate_cm_count(mk_q8());
  double c8 = estimate_cm_count(mk_cyclic(8));
  CHECK(q8 == doctest::Approx(c8 / 2.0).epsilon(1e-9));
}
