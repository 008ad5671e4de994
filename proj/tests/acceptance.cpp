// Acceptance suite: each criterion prints exactly one PASS/FAIL line; the
// exit status is the number of failed criteria.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cmkit/bigint.hpp"
#include "cmkit/constructions.hpp"
#include "cmkit/families.hpp"
#include "cmkit/fixture_store.hpp"
#include "cmkit/latin.hpp"
#include "cmkit/mappings.hpp"
#include "cmkit/permgroup.hpp"
#include "cmkit/search.hpp"
#include "test_support.hpp"

using namespace cmkit;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

FiniteGroup field_group(int q) {
  auto pp = prime_power(q);
  return pp->second == 1 ? mk_cyclic(q) : mk_elementary_abelian(pp->first, pp->second);
}

// complete mappings produced across the suites, reused by criterion 13
std::vector<std::pair<FiniteGroup, Perm>> produced_cms;

void produce(const FiniteGroup& G, const Perm& f) {
  if (produced_cms.size() < 300) produced_cms.emplace_back(G, f);
}

}  // namespace

int main() {
  report(1, "field compositions match the recorded table for q=2,3,4,5,8", [] {
    struct Row {
      int q;
      std::uint64_t comp, orth;
      Classification::Kind kind_comp, kind_orth;
    };
    const Row rows[] = {
        {2, 1, 1, Classification::trivial, Classification::trivial},
        {3, 3, 6, Classification::alternating, Classification::symmetric},
        {4, 12, 12, Classification::alternating, Classification::alternating},
        {5, 20, 20, Classification::affine_match, Classification::affine_match},
        {8, 1344, 1344, Classification::affine_match, Classification::affine_match},
    };
    for (const auto& row : rows) {
      FiniteGroup G = field_group(row.q);
      auto comp = p_comp(G);
      auto orth = p_orth(G);
      if (comp.order() != BigUint(row.comp) || orth.order() != BigUint(row.orth))
        return false;
      if (classify(comp).kind != row.kind_comp) return false;
      if (classify(orth).kind != row.kind_orth) return false;
      if (row.q >= 3 && (!comp.is_primitive() || !orth.is_primitive())) return false;
      for (const auto& f : collect_cms(G)) produce(G, f);
    }
    return true;
  });

  report(2, "q=7,9,11 exhaustive and q=16 sampled give full symmetric groups", [] {
    for (int q : {7, 9, 11}) {
      FiniteGroup G = field_group(q);
      auto comp = p_comp(G);
      auto orth = p_orth(G);
      BigUint expect = BigUint::factorial(static_cast<unsigned>(q));
      if (comp.order() != expect || orth.order() != expect) return false;
      if (classify(comp).kind != Classification::symmetric) return false;
    }
    FiniteGroup f16 = field_group(16);
    PGroupOptions opt;
    opt.mode = PMode::sampled;
    opt.budget.seed = 2024;
    opt.seeds = {field_fixture(FieldFixtureId::f16).perm, singer_even_cm(4)};
    auto comp = p_comp(f16, opt);
    auto orth = p_orth(f16, opt);
    return comp.order() == BigUint::factorial(16) && orth.order() == BigUint::factorial(16);
  });

  report(3, "semidihedral orthomorphisms: even, inversion count (29/2)k^2-2k, n=4..10", [] {
    for (int n = 4; n <= 10; ++n) {
      long long k = 1ll << (n - 3);
      FiniteGroup G = mk_two_generated_2group(TwoGenKind::SD, n);
      Perm g = sd_orthomorphism(n);
      if (!is_orthomorphism(G, g)) return false;
      if (parity_by_cycles(g) != Parity::even) return false;
      if (inversion_count(g, sd_exponent_order(n)) != 29 * k * k / 2 - 2 * k) return false;
    }
    auto table = sd_inversion_case_table(4);
    const long long k = 2;
    return table[0][6] == k * (k - 2) / 4 && table[0][7] == k * (3 * k - 2) / 4 &&
           table[0][8] == k * k && table[1][2] == k * k && table[1][4] == k * k / 4 &&
           table[4][3] == k * k / 4;
  });

  report(4, "modular groups are harmonious: one full cycle, n=4..12", [] {
    for (int n = 4; n <= 12; ++n) {
      FiniteGroup G = mk_two_generated_2group(TwoGenKind::M, n);
      auto hr = modular_harmonious(n);
      if (!is_complete_mapping(G, hr.perm)) return false;
      auto type = cycle_type(hr.perm);
      if (type.size() != 1 || type[0] != G.order()) return false;
      if (!is_harmonious_ordering(G, hr.ordering)) return false;
      if (n <= 6) produce(G, hr.perm);
    }
    return true;
  });

  report(5, "41-case mapping of M_16k: complete, inversions 59k^2+19k-6, even k=2..18", [] {
    for (int k = 2; k <= 18; k += 2) {
      FiniteGroup G = mk_modular_16k(k);
      Perm f = modular_even_cm_16k(k);
      if (!is_complete_mapping(G, f)) return false;
      long long expect = 59ll * k * k + 19 * k - 6;
      if (inversion_count(f, TotalOrder::by_index(G.order())) != expect) return false;
      if (parity_by_cycles(f) != Parity::even) return false;
      if (k <= 4) produce(G, f);
    }
    return true;
  });

  report(6, "all recorded order-16 mappings verify with their stated parities", [] {
    auto ids = order16_fixture_ids();
    if (ids.size() != 15) return false;
    for (auto [id, parity] : ids) {
      auto fx = order16_fixture(id, parity);
      if (!is_complete_mapping(fx.group, fx.perm)) return false;
      if (parity_by_cycles(fx.perm) != parity) return false;
      produce(fx.group, fx.perm);
    }
    return true;
  });

  report(7, "classic even mapping census (m, m/2, m/2) for D/Q/SD up to n=10", [] {
    for (auto kind : {TwoGenKind::D, TwoGenKind::Q, TwoGenKind::SD}) {
      for (int n = (kind == TwoGenKind::D ? 3 : 4); n <= 10; ++n) {
        FiniteGroup G = mk_two_generated_2group(kind, n);
        Perm f = hall_paige_even_cm(kind, n);
        if (!is_complete_mapping(G, f)) return false;
        if (parity_by_cycles(f) != Parity::even) return false;
        int m = 1 << (n - 2);
        auto type = cycle_type(f);
        if (std::count(type.begin(), type.end(), 1) != m) return false;
        if (std::count(type.begin(), type.end(), 2) != m / 2) return false;
        if (std::count(type.begin(), type.end(), 4) != m / 2) return false;
        if (n <= 6) produce(G, f);
      }
    }
    return true;
  });

  report(8, "only even complete mappings: Klein four-group (8) and quaternion (384)", [] {
    FiniteGroup v4 = mk_elementary_abelian(2, 2);
    auto c1 = count_by_parity(v4);
    if (c1.even != 8 || c1.odd != 0) return false;
    if (testsupport::naive_cm_count(v4) != 8) return false;
    FiniteGroup q8 = mk_q8();
    auto c2 = count_by_parity(q8);
    if (c2.even != 384 || c2.odd != 0) return false;
    return testsupport::naive_cm_count(q8) == 384;
  });

  report(9, "both-parity verdicts: order 16, the two order-32 groups, and the failures", [] {
    FixtureStore store = FixtureStore::load_file(CMKIT_FIXTURES_FILE);
    PropertyPOptions opt;
    opt.budget.seed = 2024;
    opt.store = &store;
    for (int id = 2; id <= 14; ++id) {
      auto rep = property_p_report(mk_small16(id), opt);
      if (rep.verdict != PropertyPVerdict::holds) return false;
      produce(mk_small16(id), *rep.even_witness);
      produce(mk_small16(id), *rep.odd_witness);
    }
    for (auto v : {Sd32Variant::i2, Sd32Variant::i6}) {
      auto rep = property_p_report(mk_semidirect_32(v), opt);
      if (rep.verdict != PropertyPVerdict::holds) return false;
      bool via_lift = false;
      for (const auto& t : rep.trace)
        if (t.rfind("lifting:theta", 0) == 0) via_lift = true;
      if (!via_lift) return false;
      produce(mk_semidirect_32(v), *rep.even_witness);
      produce(mk_semidirect_32(v), *rep.odd_witness);
    }
    if (property_p_report(mk_cyclic(9), opt).verdict != PropertyPVerdict::holds)
      return false;
    if (property_p_report(mk_elementary_abelian(2, 2), opt).verdict !=
        PropertyPVerdict::fails_only_even)
      return false;
    if (property_p_report(mk_q8(), opt).verdict != PropertyPVerdict::fails_only_even)
      return false;
    if (property_p_report(mk_cyclic(2), opt).verdict != PropertyPVerdict::fails_no_cm)
      return false;
    return property_p_report(mk_cyclic(6), opt).verdict == PropertyPVerdict::fails_no_cm;
  });

  report(10, "parity triple theorem, sigma closed form, fundamental relation", [] {
    std::mt19937_64 rng(5551212);
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
    for (const auto& G : reps)
      for (int t = 0; t < 100; ++t) {
        Perm h = testsupport::random_perm(G.order(), rng);
        if (!fhw_theorem_check(G, h)) return false;  // parities() also asserts
      }
    for (const auto& G : testsupport::group_roster()) {
      Parity expect = G.order() % 4 == 2 ? Parity::odd : Parity::even;
      if (sigma(G) != expect) return false;
    }
    return true;
  });

  report(11, "parity triples of A, B_f, C_f for orders 3, 5, 7", [] {
    for (int n : {3, 5, 7}) {
      FiniteGroup G = mk_cyclic(n);
      FHWType a = parities(cayley_square(G));
      FHWType a_expect = n == 5 ? FHWType{Parity::even, Parity::even, Parity::even}
                                : FHWType{Parity::even, Parity::even, Parity::odd};
      if (!(a == a_expect)) return false;
      for (const auto& f : collect_cms(G)) {
        Perm assoc = associated_orthomorphism(G, f);
        FHWType cf = parities(l_h_square(G, f));
        FHWType bf = parities(l_h_square(G, assoc));
        Parity pf = parity_by_cycles(f), pa = parity_by_cycles(assoc);
        FHWType cf_expect = n % 4 == 1 ? FHWType{Parity::even, pf, pf}
                                       : FHWType{Parity::even, pf, pf ^ Parity::odd};
        FHWType bf_expect = n % 4 == 1 ? FHWType{Parity::even, pa, pa}
                                       : FHWType{Parity::even, pa, pa ^ Parity::odd};
        if (!(cf == cf_expect) || !(bf == bf_expect)) return false;
        if (n == 3 && !(bf == FHWType{Parity::even, Parity::odd, Parity::even}))
          return false;
        produce(G, f);
      }
    }
    return true;
  });

  report(12, "minority parity counts: (0,0) under Hall-Paige, (n/2,n/2) otherwise", [] {
    std::mt19937_64 rng(86);
    for (const auto& G : {mk_cyclic(5), mk_q8(), mk_elementary_abelian(2, 3),
                          mk_small16(11), mk_cyclic(9)}) {
      for (int t = 0; t < 20; ++t) {
        Perm h = testsupport::random_perm(G.order(), rng);
        if (!(kotlar_type(l_h_square(G, h)) == KType{0, 0})) return false;
      }
    }
    for (int m : {2, 6, 10}) {
      FiniteGroup G = mk_cyclic(m);
      for (int t = 0; t < 20; ++t) {
        Perm h = testsupport::random_perm(m, rng);
        if (!(kotlar_type(l_h_square(G, h)) == KType{m / 2, m / 2})) return false;
      }
    }
    return true;
  });

  report(13, "every produced complete mapping yields an orthogonal Mann pair", [] {
    if (produced_cms.size() < 50) return false;
    for (const auto& [G, f] : produced_cms) {
      LatinSquare a = cayley_square(G);
      LatinSquare cf = l_h_square(G, f);
      LatinSquare bf = l_h_square(G, associated_orthomorphism(G, f));
      auto prod = as_latin(mann_product(a, cf));
      if (!prod) return false;
      for (int i = 0; i < G.order(); ++i)
        for (int j = 0; j < G.order(); ++j)
          if (prod->at(i, j) != bf.at(i, j)) return false;
      if (!is_orthogonal(a, bf)) return false;
    }
    return true;
  });

  report(14, "asymptotic count estimate within a factor 1.15 for orders 5 and 7", [] {
    long long exact5 = enumerate_cms(mk_cyclic(5), {}, nullptr).count;
    long long exact7 = enumerate_cms(mk_cyclic(7), {}, nullptr).count;
    if (exact5 != 15 || exact7 != 133) return false;
    double est5 = estimate_cm_count(mk_cyclic(5));
    double est7 = estimate_cm_count(mk_cyclic(7));
    auto within = [](double est, double exact) {
      double ratio = est > exact ? est / exact : exact / est;
      return ratio <= 1.15;
    };
    return within(est5, 15.0) && within(est7, 133.0);
  });

  report(15, "parity routes agree; enumeration matches the naive oracle", [] {
    std::mt19937_64 rng(20240811);
    for (int checked = 0; checked < 10000; ++checked) {
      int degree = 4 + static_cast<int>(rng() % 61);
      Perm p = testsupport::random_perm(degree, rng);
      Perm rp = testsupport::random_perm(degree, rng);
      TotalOrder ord(std::vector<int>(rp.images().begin(), rp.images().end()));
      if (parity_by_inversions(p, ord) != parity_by_cycles(p)) return false;
    }
    for (const auto& G : testsupport::small_group_roster()) {
      if (enumerate_cms(G, {}, nullptr).count != testsupport::naive_cm_count(G))
        return false;
    }
    return true;
  });

  std::printf("%d of 15 criteria passed\n", 15 - failures);
  return failures;
}
