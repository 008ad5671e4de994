#include "doctest.h"

#include "cmkit/constructions.hpp"
#include "cmkit/families.hpp"
#include "cmkit/mappings.hpp"
#include "cmkit/search.hpp"
#include "test_support.hpp"

using namespace cmkit;

TEST_CASE("classic even complete mapping census") {
  for (auto kind : {TwoGenKind::D, TwoGenKind::Q, TwoGenKind::SD}) {
    for (int n = (kind == TwoGenKind::D ? 3 : 4); n <= 8; ++n) {
      CAPTURE(to_string(kind));
      CAPTURE(n);
      FiniteGroup G = mk_two_generated_2group(kind, n);
      Perm f = hall_paige_even_cm(kind, n);
      REQUIRE(is_complete_mapping(G, f));
      REQUIRE(parity_by_cycles(f) == Parity::even);
      int m = 1 << (n - 2);
      auto type = cycle_type(f);
      REQUIRE(std::count(type.begin(), type.end(), 1) == m);
      REQUIRE(std::count(type.begin(), type.end(), 2) == m / 2);
      REQUIRE(std::count(type.begin(), type.end(), 4) == m / 2);
    }
  }
  CHECK_THROWS(hall_paige_even_cm(TwoGenKind::AC, 4));
  CHECK_THROWS(hall_paige_even_cm(TwoGenKind::SD, 3));
}

TEST_CASE("semidihedral orthomorphism and its inversions") {
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    long long k = 1ll << (n - 3);
    FiniteGroup G = mk_two_generated_2group(TwoGenKind::SD, n);
    Perm g = sd_orthomorphism(n);
    REQUIRE(is_orthomorphism(G, g));
    REQUIRE(parity_by_cycles(g) == Parity::even);
    REQUIRE(inversion_count(g, sd_exponent_order(n)) == 29 * k * k / 2 - 2 * k);
    REQUIRE(g(FiniteGroup::identity) == FiniteGroup::identity);
  }
}

TEST_CASE("semidihedral case-pair inversion subtotals at k=2") {
  auto table = sd_inversion_case_table(4);
  const long long k = 2;
  CHECK(table[0][6] == k * (k - 2) / 4);      // cases (1,7)
  CHECK(table[0][7] == k * (3 * k - 2) / 4);  // (1,8)
  CHECK(table[0][8] == k * k);                // (1,9)
  CHECK(table[1][2] == k * k);                // (2,3)
  CHECK(table[1][3] == k * (3 * k - 2) / 4);  // (2,4)
  CHECK(table[1][4] == k * k / 4);            // (2,5)
  CHECK(table[3][5] == k * k / 4);            // (4,6)
  CHECK(table[4][3] == k * k / 4);            // (5,4)
  CHECK(table[6][7] == k * k / 4);            // (7,8)
  CHECK(table[8][7] == k * k / 4);            // (9,8)
  CHECK(table[2][3] == k * (k - 2) / 4);      // (3,4)
  CHECK(table[3][6] + table[3][7] + table[3][8] == 2 * k * k);  // (4, 7-9)
  // the whole table must account for every inversion
  long long total = 0;
  for (const auto& row : table)
    for (long long v : row) total += v;
  CHECK(total == 29 * k * k / 2 - 2 * k);
}

TEST_CASE("modular harmonious mapping is one full cycle") {
  for (int n = 4; n <= 10; ++n) {
    CAPTURE(n);
    FiniteGroup G = mk_two_generated_2group(TwoGenKind::M, n);
    auto hr = modular_harmonious(n);
    REQUIRE(is_complete_mapping(G, hr.perm));
    auto type = cycle_type(hr.perm);
    REQUIRE(type.size() == 1);
    REQUIRE(type[0] == G.order());
    REQUIRE(parity_by_cycles(hr.perm) == Parity::odd);
    REQUIRE(hr.ordering.size() == static_cast<std::size_t>(G.order()));
    REQUIRE(hr.ordering[0] == FiniteGroup::identity);
    REQUIRE(is_harmonious_ordering(G, hr.ordering));
    // x -> x^2 on the inner segment: f(x^l) = x^(l+1) for 1 <= l <= m
    REQUIRE(hr.perm(2) == 4);
  }
  CHECK_THROWS(modular_harmonious(3));
}

TEST_CASE("41-case table partitions for every even k up to 40") {
  for (int k = 2; k <= 40; k += 2) {
    CAPTURE(k);
    REQUIRE(case_table_inputs_partition(k));
    REQUIRE(case_table_outputs_partition(k));
    REQUIRE(case_table_assoc_partition(k));
  }
}

TEST_CASE("41-case even complete mapping and its inversions") {
  for (int k = 2; k <= 10; k += 2) {
    CAPTURE(k);
    FiniteGroup G = mk_modular_16k(k);
    Perm f = modular_even_cm_16k(k);
    REQUIRE(is_complete_mapping(G, f));
    REQUIRE(parity_by_cycles(f) == Parity::even);
    long long expect = 59ll * k * k + 19 * k - 6;
    REQUIRE(inversion_count(f, TotalOrder::by_index(G.order())) == expect);
    // the identity row fixes 1 under f and under g -> g f(g)
    REQUIRE(f(0) == 0);
    REQUIRE(associated_orthomorphism(G, f)(0) == 0);
  }
  CHECK_THROWS(modular_even_cm_16k(3));
}

TEST_CASE("order-16 fixtures verify with their stated parities") {
  auto ids = order16_fixture_ids();
  CHECK(ids.size() == 15);
  for (auto [id, parity] : ids) {
    CAPTURE(id);
    auto fx = order16_fixture(id, parity);
    CHECK(fx.group.order() == 16);
    CHECK(is_complete_mapping(fx.group, fx.perm));
    CHECK(parity_by_cycles(fx.perm) == parity);
  }
  // the recorded even mapping of the modular group is the listed 15-cycle
  auto m16 = order16_fixture(6, Parity::even);
  CHECK(cycle_type(m16.perm) == std::vector<int>{1, 15});
  CHECK_THROWS(order16_fixture(5, Parity::even));
  CHECK_THROWS(order16_fixture(6, Parity::odd));
}

TEST_CASE("field fixtures") {
  auto f9 = field_fixture(FieldFixtureId::f9);
  CHECK(is_complete_mapping(f9.group, f9.perm));
  // fixes 2e2 (= index 6) but moves e2 (= index 3): not additive
  CHECK(f9.perm(6) == 6);
  CHECK(f9.perm(3) != 3);

  auto f11 = field_fixture(FieldFixtureId::f11);
  CHECK(is_complete_mapping(f11.group, f11.perm));
  CHECK(f11.perm(6) == 6);
  CHECK(f11.perm(1) != 1);

  auto f16 = field_fixture(FieldFixtureId::f16);
  CHECK(parity_by_cycles(f16.perm) == Parity::odd);
  CHECK(cycle_type(f16.perm) == std::vector<int>{1, 3, 12});

  auto z9 = field_fixture(FieldFixtureId::z9);
  CHECK(parity_by_cycles(z9.perm) == Parity::odd);
  CHECK(cycle_type(z9.perm) == std::vector<int>{4, 5});
}

TEST_CASE("singer cycles") {
  for (int d = 2; d <= 8; ++d) {
    CAPTURE(d);
    FiniteGroup G = mk_elementary_abelian(2, d);
    Perm s = singer_even_cm(d);
    REQUIRE(is_complete_mapping(G, s));
    REQUIRE(parity_by_cycles(s) == Parity::even);
    auto type = cycle_type(s);
    REQUIRE(type == std::vector<int>({1, (1 << d) - 1}));
  }
  // d = 2 gives exactly the 3-cycle (e1, e2, e1+e2)
  CHECK(singer_even_cm(2) == Perm::from_cycles(4, {{1, 2, 3}}));
  CHECK_THROWS(singer_even_cm(9));
}

TEST_CASE("linear complete mappings") {
  std::vector<std::vector<int>> id3 = {{1, 0}, {0, 1}};
  CHECK(is_linear_complete_mapping(id3, 3));   // I and 2I invertible mod 3
  CHECK_FALSE(is_linear_complete_mapping(id3, 2));  // I + I = 0 mod 2

  // induced permutations agree with the matrix criterion
  FiniteGroup f8 = mk_elementary_abelian(2, 3);
  int agree = 0;
  for (int code = 0; code < 512; ++code) {
    std::vector<std::vector<int>> M = {{(code >> 0) & 1, (code >> 1) & 1, (code >> 2) & 1},
                                       {(code >> 3) & 1, (code >> 4) & 1, (code >> 5) & 1},
                                       {(code >> 6) & 1, (code >> 7) & 1, (code >> 8) & 1}};
    bool linear_ok = is_linear_complete_mapping(M, 2);
    Perm p = [&]() -> Perm {
      try {
        return linear_perm(M, 2);
      } catch (const std::exception&) {
        return Perm::identity(1);  // singular: not even a permutation
      }
    }();
    bool perm_ok = p.degree() == 8 && is_complete_mapping(f8, p);
    REQUIRE(linear_ok == perm_ok);
    agree += linear_ok;
  }
  CHECK(agree == 48);  // 48 linear, times 8 translations: the 384 affine mappings
}

TEST_CASE("theta transversal witnesses") {
  auto w2 = theta_transversal_witness(Sd32Variant::i2);
  CHECK(verify_transversal_witness(w2).ok);
  CHECK(w2.transversal == std::vector<int>{0, 2, 1, 3});  // 1, y, z, yz
  CHECK(w2.s == Perm({0, 2, 3, 1}));
  CHECK(w2.t == Perm({0, 3, 1, 2}));  // y*z in yzH, z*yz in yH, yz*y in zH
  CHECK(w2.s(0) == 0);
  CHECK(w2.t(0) == 0);

  auto w6 = theta_transversal_witness(Sd32Variant::i6);
  CHECK(verify_transversal_witness(w6).ok);
  // K = <y, z> is itself the transversal and is elementary abelian
  for (int u : w6.transversal)
    if (u != 0) CHECK(element_order(w6.group, u) == 2);
}
