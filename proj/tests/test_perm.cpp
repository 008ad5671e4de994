#include <random>

#include "doctest.h"

#include "cmkit/bigint.hpp"
#include "cmkit/perm.hpp"
#include "test_support.hpp"

using namespace cmkit;

TEST_CASE("biguint arithmetic and printing") {
  CHECK(BigUint(0).to_string() == "0");
  CHECK(BigUint(123456789012345ull).to_string() == "123456789012345");
  CHECK(BigUint::factorial(16).to_string() == "20922789888000");
  CHECK(BigUint::factorial(20).to_string() == "2432902008176640000");
  CHECK(BigUint::factorial(25).to_string() == "15511210043330985984000000");
  BigUint a(1);
  a.mul_u32(4294967295u);
  a.mul_u32(4294967295u);
  CHECK(a.to_string() == "18446744065119617025");
  CHECK(BigUint(5) < BigUint(7));
  CHECK(BigUint::factorial(12) == BigUint(479001600));
  CHECK(BigUint::factorial(10).to_double() == doctest::Approx(3628800.0));
}

TEST_CASE("perm basics") {
  Perm id = Perm::identity(5);
  CHECK(id.is_identity());
  CHECK(parity_by_cycles(id) == Parity::even);
  CHECK(cycle_type(id) == std::vector<int>{1, 1, 1, 1, 1});

  Perm p = Perm::from_cycles(5, {{0, 1, 2}});
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 3);
  CHECK(parity_by_cycles(p) == Parity::even);
  CHECK(compose(p, p.inverse()).is_identity());

  Perm q = Perm::from_cycles(5, {{0, 1}});
  CHECK(parity_by_cycles(q) == Parity::odd);
  CHECK(cycle_type(q) == std::vector<int>{1, 1, 1, 2});

  CHECK_THROWS(Perm({0, 0, 1}));
  CHECK_THROWS(Perm::from_cycles(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("single cycle parity by length") {
  // an n-cycle on even n is odd; a 15-cycle on 16 points is even
  std::vector<int> c16(16);
  for (int i = 0; i < 16; ++i) c16[i] = i;
  Perm full16 = Perm::from_cycles(16, {c16});
  CHECK(parity_by_cycles(full16) == Parity::odd);
  std::vector<int> c15(15);
  for (int i = 0; i < 15; ++i) c15[i] = i;
  Perm almost = Perm::from_cycles(16, {c15});
  CHECK(parity_by_cycles(almost) == Parity::even);
}

TEST_CASE("inversions under the index order") {
  Perm id = Perm::identity(6);
  CHECK(inversion_count(id, TotalOrder::by_index(6)) == 0);
  Perm adj = Perm::from_cycles(6, {{2, 3}});
  CHECK(inversion_count(adj, TotalOrder::by_index(6)) == 1);
  CHECK(parity_by_inversions(adj, TotalOrder::by_index(6)) == Parity::odd);
}

TEST_CASE("cycle-count and inversion-count parities agree") {
  std::mt19937_64 rng(20240811);
  for (int checked = 0; checked < 10000; ++checked) {
    int degree = 4 + static_cast<int>(rng() % 61);
    Perm p = testsupport::random_perm(degree, rng);
    Parity by_cycles = parity_by_cycles(p);
    for (int t = 0; t < 5; ++t) {
      Perm rp = testsupport::random_perm(degree, rng);
      TotalOrder ord(std::vector<int>(rp.images().begin(), rp.images().end()));
      REQUIRE(parity_by_inversions(p, ord) == by_cycles);
    }
  }
}

TEST_CASE("perm text round trips") {
  Perm p = Perm::from_cycles(8, {{0, 6, 7}, {1, 2}});
  std::string cyc = to_cycle_string(p);
  CHECK(cyc == "(1,7,8)(2,3)");
  CHECK(parse_perm(cyc, 8) == p);
  std::string img = to_image_string(p);
  CHECK(parse_perm(img, 8) == p);
  CHECK(parse_perm("()", 4) == Perm::identity(4));
  CHECK(to_cycle_string(Perm::identity(4)) == "()");
  CHECK_THROWS(parse_perm("(1,9)", 8));
  CHECK_THROWS(parse_perm("0,1,2", 4));

  // serialization canonicalizes cycle rotation to smallest-first
  Perm r = parse_perm("(3,1,2)", 4);
  CHECK(to_cycle_string(r) == "(1,2,3)");
}

TEST_CASE("conjugation relabels a permutation") {
  std::mt19937_64 rng(7);
  Perm f = testsupport::random_perm(10, rng);
  Perm s = testsupport::random_perm(10, rng);
  Perm c = conjugate(f, s);
  for (int x = 0; x < 10; ++x) CHECK(c(s(x)) == s(f(x)));
  CHECK(cycle_type(c) == cycle_type(f));
}
