#include "cmkit/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cmkit {

namespace {

constexpr int kEnumGuard = 16;
constexpr int kHardCap = 64;

struct Dfs {
  const FiniteGroup& G;
  bool ortho;
  int n;
  std::vector<int> img;
  std::uint64_t used_image = 0, used_product = 0;
  long long nodes = 0;

  explicit Dfs(const FiniteGroup& g, bool orthomorphisms)
      : G(g), ortho(orthomorphisms), n(g.order()), img(g.order(), -1) {}

  int product(int g, int v) const { return G.mul(ortho ? G.inv(g) : g, v); }
};

}  // namespace

EnumerateResult enumerate_cms(const FiniteGroup& G, const EnumerateOptions& opt,
                              const std::function<bool(const Perm&)>& visit) {
  int n = G.order();
  if (n > kHardCap)
    throw std::invalid_argument("enumerate_cms: degree beyond bitset capacity");
  if (n > kEnumGuard && !opt.override_guard)
    throw std::invalid_argument(
        "enumerate_cms: order above the enumeration guard (pass override to force)");

  Dfs dfs(G, opt.orthomorphisms);
  EnumerateResult res;
  bool stopped = false;

  auto rec = [&](auto&& self, int g) -> void {
    if (stopped) return;
    if (g == n) {
      Perm p(dfs.img);
      if (!opt.predicate || opt.predicate(p)) {
        ++res.count;
        if (visit && !visit(p)) {
          stopped = true;
          res.complete = false;
        }
        if (opt.limit >= 0 && res.count >= opt.limit) {
          stopped = true;
          res.complete = false;
        }
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (g == 0 && opt.first_image && v != *opt.first_image) continue;
      if (dfs.used_image >> v & 1) continue;
      int p = dfs.product(g, v);
      if (dfs.used_product >> p & 1) continue;
      ++res.nodes;
      if (opt.node_limit >= 0 && res.nodes > opt.node_limit) {
        stopped = true;
        res.complete = false;
        return;
      }
      dfs.used_image |= 1ull << v;
      dfs.used_product |= 1ull << p;
      dfs.img[g] = v;
      self(self, g + 1);
      dfs.img[g] = -1;
      dfs.used_image &= ~(1ull << v);
      dfs.used_product &= ~(1ull << p);
      if (stopped) return;
    }
  };
  rec(rec, 0);
  return res;
}

std::vector<Perm> collect_cms(const FiniteGroup& G, long long limit, bool override_guard) {
  std::vector<Perm> out;
  EnumerateOptions opt;
  opt.limit = limit;
  opt.override_guard = override_guard;
  enumerate_cms(G, opt, [&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

ParityCensus count_by_parity(const FiniteGroup& G, bool override_guard) {
  ParityCensus census;
  EnumerateOptions opt;
  opt.override_guard = override_guard;
  enumerate_cms(G, opt, [&](const Perm& p) {
    (parity_by_cycles(p) == Parity::even ? census.even : census.odd)++;
    return true;
  });
  return census;
}

RandomSearchResult random_cm(const FiniteGroup& G, const PermPredicate& predicate,
                             const SearchBudget& budget) {
  int n = G.order();
  if (n > kHardCap)
    throw std::invalid_argument("random_cm: degree beyond bitset capacity");
  RandomSearchResult out;
  out.seed = budget.seed;

  for (int restart = 0; restart < budget.restarts; ++restart) {
    std::mt19937_64 rng(budget.seed + 0x9e3779b97f4a7c15ull * restart);
    // one shuffled value order per depth, fixed for the whole restart
    std::vector<std::vector<int>> value_order(n);
    for (int g = 0; g < n; ++g) {
      value_order[g].resize(n);
      std::iota(value_order[g].begin(), value_order[g].end(), 0);
      std::shuffle(value_order[g].begin(), value_order[g].end(), rng);
    }

    std::vector<int> img(n, -1);
    std::uint64_t used_image = 0, used_product = 0;
    long long nodes = 0;
    bool exhausted_budget = false;
    std::optional<Perm> found;

    auto rec = [&](auto&& self, int g) -> bool {
      if (g == n) {
        Perm p(img);
        if (!predicate || predicate(p)) {
          found = std::move(p);
          return true;
        }
        return false;
      }
      for (int v : value_order[g]) {
        if (used_image >> v & 1) continue;
        int prod = G.mul(g, v);
        if (used_product >> prod & 1) continue;
        if (++nodes > budget.nodes_per_restart) {
          exhausted_budget = true;
          return false;
        }
        used_image |= 1ull << v;
        used_product |= 1ull << prod;
        img[g] = v;
        if (self(self, g + 1)) return true;
        img[g] = -1;
        used_image &= ~(1ull << v);
        used_product &= ~(1ull << prod);
        if (exhausted_budget) return false;
      }
      return false;
    };
    bool ok = rec(rec, 0);
    out.nodes += nodes;
    if (ok) {
      if (!is_complete_mapping(G, *found))
        throw std::logic_error("random_cm: produced a non-complete mapping");
      out.witness = std::move(found);
      return out;
    }
  }
  return out;
}

WitnessCheck verify_transversal_witness(const TransversalWitness& w) {
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  const FiniteGroup& G = w.group;
  int k = static_cast<int>(w.transversal.size());
  if (w.s.degree() != k || w.t.degree() != k) return fail("S/T degree mismatch");
  if (static_cast<int>(w.subgroup.members.size()) * k != G.order())
    return fail("|H| * k != |G|");
  if (w.transversal.empty() || w.transversal[0] != FiniteGroup::identity)
    return fail("u_1 is not the identity");
  if (w.s(0) != 0) return fail("S(1) != 1");
  if (w.t(0) != 0) return fail("T(1) != 1");

  // left and right transversal: the k cosets u_i H and H u_i partition G
  std::vector<bool> seen(G.order(), false);
  for (int u : w.transversal)
    for (int h : w.subgroup.members) {
      int x = G.mul(u, h);
      if (seen[x]) return fail("not a left transversal");
      seen[x] = true;
    }
  std::fill(seen.begin(), seen.end(), false);
  for (int u : w.transversal)
    for (int h : w.subgroup.members) {
      int x = G.mul(h, u);
      if (seen[x]) return fail("not a right transversal");
      seen[x] = true;
    }

  for (int i = 0; i < k; ++i) {
    int lhs = G.mul(w.transversal[i], w.transversal[w.s(i)]);
    int rep = w.transversal[w.t(i)];
    if (!subgroup_contains(w.subgroup, G.mul(G.inv(rep), lhs)))
      return fail("coset condition u_i u_S(i) H = u_T(i) H fails at i=" +
                  std::to_string(i + 1));
  }
  return WitnessCheck{};
}

namespace {

// First complete mapping of G, by enumeration for tractable orders and by
// seeded search above that; absent iff none exists (Hall-Paige test).
std::optional<Perm> some_complete_mapping(const FiniteGroup& G, long long node_limit) {
  if (!hall_paige_condition(G)) return std::nullopt;
  if (G.order() <= kHardCap) {
    std::optional<Perm> found;
    EnumerateOptions opt;
    opt.limit = 1;
    opt.override_guard = true;
    opt.node_limit = node_limit;
    auto res = enumerate_cms(G, opt, [&](const Perm& p) {
      found = p;
      return false;
    });
    if (found) return found;
    if (res.complete) return std::nullopt;  // exhausted: genuinely none
    SearchBudget budget;
    budget.seed = 7;
    auto rnd = random_cm(G, nullptr, budget);
    return rnd.witness;
  }
  return std::nullopt;
}

}  // namespace

std::optional<TransversalWitness> derive_witness_from_quotient(const FiniteGroup& G,
                                                               const Subgroup& N) {
  QuotientResult q = quotient_group(G, N);
  std::optional<Perm> g = some_complete_mapping(q.group, 4000000);
  if (!g) return std::nullopt;

  // normalize so that g fixes the identity coset: replace g by rho(g(1)^-1) o g
  if ((*g)(0) != 0) {
    Perm shift = regular_rep(q.group, q.group.inv((*g)(0)), Side::right);
    g = compose(shift, *g);
  }

  int k = q.group.order();
  // u_i = smallest element of coset i (cosets are ordered by smallest member,
  // so u_1 = identity)
  std::vector<int> u(k, -1);
  for (int x = 0; x < G.order(); ++x)
    if (u[q.projection[x]] < 0) u[q.projection[x]] = x;

  std::vector<int> s_img(k), t_img(k);
  for (int i = 0; i < k; ++i) {
    s_img[i] = (*g)(i);
    t_img[i] = q.group.mul(i, s_img[i]);  // associated orthomorphism of g
  }
  TransversalWitness w{G, N, std::move(u), Perm(std::move(s_img)), Perm(std::move(t_img))};
  auto check = verify_transversal_witness(w);
  if (!check.ok)
    throw std::logic_error("derive_witness_from_quotient: " + check.violation);
  return w;
}

std::optional<TransversalWitness> derive_witness_from_complement(const FiniteGroup& G,
                                                                 const Subgroup& H,
                                                                 const Subgroup& K) {
  if (static_cast<int>(H.members.size() * K.members.size()) != G.order())
    throw std::invalid_argument("derive_witness_from_complement: |H||K| != |G|");
  for (int x : K.members)
    if (x != FiniteGroup::identity && subgroup_contains(H, x))
      throw std::invalid_argument("derive_witness_from_complement: H and K intersect");

  FiniteGroup Kgrp = subgroup_as_group(G, K);
  std::optional<Perm> theta = some_complete_mapping(Kgrp, 4000000);
  if (!theta) return std::nullopt;
  if ((*theta)(0) != 0) {
    Perm shift = regular_rep(Kgrp, Kgrp.inv((*theta)(0)), Side::right);
    theta = compose(shift, *theta);
  }

  int k = static_cast<int>(K.members.size());
  std::vector<int> u = K.members;  // sorted, identity first
  std::vector<int> s_img(theta->images().begin(), theta->images().end());
  std::vector<int> t_img(k, -1);
  for (int i = 0; i < k; ++i) {
    int prod = G.mul(u[i], u[s_img[i]]);
    for (int j = 0; j < k; ++j)
      if (subgroup_contains(H, G.mul(G.inv(u[j]), prod))) {
        t_img[i] = j;
        break;
      }
    if (t_img[i] < 0)
      throw std::logic_error("derive_witness_from_complement: coset lookup failed");
  }
  TransversalWitness w{G, H, std::move(u), Perm(std::move(s_img)), Perm(std::move(t_img))};
  auto check = verify_transversal_witness(w);
  if (!check.ok)
    throw std::logic_error("derive_witness_from_complement: " + check.violation);
  return w;
}

Perm lift_cm(const TransversalWitness& w, const Perm& h) {
  auto check = verify_transversal_witness(w);
  if (!check.ok) throw std::invalid_argument("lift_cm: invalid witness: " + check.violation);
  const FiniteGroup& G = w.group;
  const Subgroup& H = w.subgroup;
  int hsize = static_cast<int>(H.members.size());
  if (h.degree() != hsize) throw std::invalid_argument("lift_cm: h degree mismatch");
  FiniteGroup Hgrp = subgroup_as_group(G, H);
  if (!is_complete_mapping(Hgrp, h))
    throw std::invalid_argument("lift_cm: h is not a complete mapping of H");
  if (hsize > kHardCap) throw std::invalid_argument("lift_cm: block size beyond capacity");

  int k = static_cast<int>(w.transversal.size());
  std::vector<int> img(G.order(), -1);

  // block i = 1: preset to h on H itself
  for (int i = 0; i < hsize; ++i) img[H.members[i]] = H.members[h(i)];

  // Fast path: solve coset pair (u_i H -> u_S(i) H with products on
  // u_T(i) H) independently per block. Feasible whenever products from a
  // block stay inside its target coset (always the case for normal H);
  // otherwise fall back to one constrained search over all of G \ H.
  bool blocks_ok = true;
  for (int i = 1; i < k && blocks_ok; ++i) {
    std::vector<int> domain(hsize), image(hsize), target(hsize);
    for (int j = 0; j < hsize; ++j) {
      domain[j] = G.mul(w.transversal[i], H.members[j]);
      image[j] = G.mul(w.transversal[w.s(i)], H.members[j]);
      target[j] = G.mul(w.transversal[w.t(i)], H.members[j]);
    }
    std::vector<int> target_pos(G.order(), -1);
    for (int j = 0; j < hsize; ++j) target_pos[target[j]] = j;

    std::uint64_t used_image = 0, used_product = 0;
    std::vector<int> assign(hsize, -1);
    auto rec = [&](auto&& self, int a) -> bool {
      if (a == hsize) return true;
      for (int b = 0; b < hsize; ++b) {
        if (used_image >> b & 1) continue;
        int prod = G.mul(domain[a], image[b]);
        int tp = target_pos[prod];
        if (tp < 0 || (used_product >> tp & 1)) continue;
        used_image |= 1ull << b;
        used_product |= 1ull << tp;
        assign[a] = b;
        if (self(self, a + 1)) return true;
        assign[a] = -1;
        used_image &= ~(1ull << b);
        used_product &= ~(1ull << tp);
      }
      return false;
    };
    if (!rec(rec, 0)) {
      blocks_ok = false;
      break;
    }
    for (int a = 0; a < hsize; ++a) img[domain[a]] = image[assign[a]];
  }

  if (!blocks_ok) {
    // whole-complement search: extend h to G \ H so that both the images
    // and the products cover G \ H (images/products on H are already spoken
    // for by the preset block, which pins candidates to the complement)
    if (G.order() > kHardCap)
      throw std::invalid_argument("lift_cm: fallback search beyond bitset capacity");
    for (int x = 0; x < G.order(); ++x)
      if (!subgroup_contains(H, x)) img[x] = -1;
    std::vector<int> domain;
    for (int x = 0; x < G.order(); ++x)
      if (!subgroup_contains(H, x)) domain.push_back(x);
    std::uint64_t used_image = 0, used_product = 0;
    for (int m : H.members) {
      used_image |= 1ull << img[m];
      used_product |= 1ull << G.mul(m, img[m]);
    }
    auto rec = [&](auto&& self, std::size_t a) -> bool {
      if (a == domain.size()) return true;
      int x = domain[a];
      for (int v : domain) {
        if (used_image >> v & 1) continue;
        int prod = G.mul(x, v);
        if (used_product >> prod & 1) continue;
        used_image |= 1ull << v;
        used_product |= 1ull << prod;
        img[x] = v;
        if (self(self, a + 1)) return true;
        img[x] = -1;
        used_image &= ~(1ull << v);
        used_product &= ~(1ull << prod);
      }
      return false;
    };
    if (!rec(rec, 0))
      throw std::logic_error("lift_cm: extension search exhausted (internal inconsistency)");
  }

  Perm f(std::move(img));
  if (!is_complete_mapping(G, f))
    throw std::logic_error("lift_cm: result failed verification");
  for (int m : H.members)
    if (!subgroup_contains(H, f(m)))
      throw std::logic_error("lift_cm: result does not stabilize H");
  return f;
}

const char* to_string(PropertyPVerdict v) {
  switch (v) {
    case PropertyPVerdict::holds: return "holds";
    case PropertyPVerdict::fails_only_even: return "fails_only_even";
    case PropertyPVerdict::fails_no_cm: return "fails_no_cm";
    case PropertyPVerdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

struct WitnessPair {
  std::optional<Perm> even, odd;
  bool complete() const { return even && odd; }
  void offer(const FiniteGroup& G, Perm p, std::vector<std::string>& trace,
             const std::string& how) {
    if (!is_complete_mapping(G, p)) throw std::logic_error("property_p: bad witness from " + how);
    auto& slot = parity_by_cycles(p) == Parity::even ? even : odd;
    if (!slot) {
      trace.push_back(how + "/" + to_string(parity_by_cycles(p)));
      slot = std::move(p);
    }
  }
};

PropertyPReport property_p_impl(const FiniteGroup& G, const PropertyPOptions& opt, int depth);

// Both-parity witnesses for a subgroup treated as a group of its own.
bool subgroup_has_property_p(const FiniteGroup& G, const Subgroup& S,
                             const PropertyPOptions& opt, int depth, Perm* even_out,
                             Perm* odd_out) {
  FiniteGroup sub = subgroup_as_group(G, S);
  PropertyPOptions inner = opt;
  inner.max_structural_depth = depth;
  PropertyPReport rep = property_p_impl(sub, inner, depth);
  if (rep.verdict != PropertyPVerdict::holds) return false;
  *even_out = *rep.even_witness;
  *odd_out = *rep.odd_witness;
  return true;
}

PropertyPReport property_p_impl(const FiniteGroup& G, const PropertyPOptions& opt,
                                int depth) {
  PropertyPReport rep;
  rep.group = G.name();
  WitnessPair found;

  if (!hall_paige_condition(G)) {
    rep.verdict = PropertyPVerdict::fails_no_cm;
    rep.trace.push_back("hall-paige-condition/false");
    return rep;
  }

  // 1. fixtures: on-disk store, then constructed families
  if (opt.store) {
    for (const auto& recd : opt.store->for_group(G.name())) {
      if (found.complete()) break;
      Perm p = parse_perm(recd.cycles, G.order());
      found.offer(G, std::move(p), rep.trace, "fixture:" + recd.provenance);
    }
  }
  if (!found.complete()) {
    for (auto& [p, par] : builtin_fixtures(G)) {
      if (found.complete()) break;
      found.offer(G, std::move(p), rep.trace, "fixture:builtin");
    }
  }

  // 2. bounded enumeration (guarded at order 16); with an exhausted space
  // this settles the verdict
  bool census_complete = false;
  if (!found.complete() && G.order() <= kEnumGuard) {
    EnumerateOptions eopt;
    eopt.override_guard = true;
    eopt.node_limit = opt.enumeration_nodes;
    auto res = enumerate_cms(G, eopt, [&](const Perm& p) {
      found.offer(G, p, rep.trace, "enumeration");
      return !found.complete();
    });
    census_complete = res.complete;
    if (census_complete && !found.complete()) {
      rep.even_witness = found.even;
      rep.odd_witness = found.odd;
      if (!found.even && !found.odd) {
        rep.verdict = PropertyPVerdict::fails_no_cm;
        rep.trace.push_back("enumeration/none");
      } else {
        rep.verdict = PropertyPVerdict::fails_only_even;
        rep.trace.push_back("enumeration/exhausted");
      }
      return rep;
    }
  }

  // 3. structural route: lift through a transversal witness over a subgroup
  // with property (P), then splice to flip parity
  if (!found.complete() && depth > 0) {
    auto try_witness = [&](const TransversalWitness& w, const std::string& how) {
      if (found.complete()) return;
      Perm even_h = Perm::identity(1), odd_h = Perm::identity(1);
      if (!subgroup_has_property_p(G, w.subgroup, opt, depth - 1, &even_h, &odd_h)) return;
      Perm lifted = lift_cm(w, even_h);
      found.offer(G, lifted, rep.trace, how);
      Perm flipped = splice(G, w.subgroup, lifted, odd_h);
      found.offer(G, flipped, rep.trace, how + "+splice");
    };

    // the two exceptional order-32 groups carry a recorded witness
    if (G.name() == "sd32:i2" || G.name() == "sd32:i6") {
      TransversalWitness w = theta_transversal_witness(
          G.name() == "sd32:i2" ? Sd32Variant::i2 : Sd32Variant::i6);
      try_witness(w, "lifting:theta");
    }

    if (!found.complete()) {
      for (const auto& N : normal_subgroups(G)) {
        if (found.complete()) break;
        if (N.members.size() < 4) continue;  // property (P) needs order > 3
        QuotientResult q = quotient_group(G, N);
        if (!hall_paige_condition(q.group)) continue;
        auto w = derive_witness_from_quotient(G, N);
        if (w) try_witness(*w, "lifting:quotient");
      }
    }
  }

  // 4. seeded random search for whichever parity is still missing
  if (!found.complete()) {
    for (Parity want : {Parity::even, Parity::odd}) {
      auto& slot = want == Parity::even ? found.even : found.odd;
      if (slot) continue;
      auto res = random_cm(
          G, [&](const Perm& p) { return parity_by_cycles(p) == want; }, opt.budget);
      if (res.witness)
        found.offer(G, std::move(*res.witness), rep.trace,
                    "random:seed=" + std::to_string(res.seed));
    }
  }

  rep.even_witness = found.even;
  rep.odd_witness = found.odd;
  if (found.complete()) rep.verdict = PropertyPVerdict::holds;
  else if (census_complete)
    rep.verdict = found.even || found.odd ? PropertyPVerdict::fails_only_even
                                          : PropertyPVerdict::fails_no_cm;
  else
    rep.verdict = PropertyPVerdict::unknown;
  return rep;
}

}  // namespace

PropertyPReport property_p_report(const FiniteGroup& G, const PropertyPOptions& opt) {
  return property_p_impl(G, opt, opt.max_structural_depth);
}

}  // namespace cmkit
