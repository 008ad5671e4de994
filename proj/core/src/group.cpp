#include "cmkit/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cmkit {

namespace {

void validate_group(int n, const std::vector<int>& mul, const std::string& name) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("FiniteGroup '" + name + "': " + why);
  };
  if (n < 1) fail("order must be positive");
  if (mul.size() != static_cast<std::size_t>(n) * n) fail("table size mismatch");
  for (int v : mul)
    if (v < 0 || v >= n) fail("table entry out of range");
  std::vector<bool> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < n; ++b) {
      int v = mul[static_cast<std::size_t>(a) * n + b];
      if (seen[v]) fail("row not a bijection");
      seen[v] = true;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (int a = 0; a < n; ++a) {
      int v = mul[static_cast<std::size_t>(a) * n + b];
      if (seen[v]) fail("column not a bijection");
      seen[v] = true;
    }
  }
  for (int g = 0; g < n; ++g) {
    if (mul[g] != g) fail("identity law fails on the left");
    if (mul[static_cast<std::size_t>(g) * n] != g) fail("identity law fails on the right");
  }
  auto prod = [&](int a, int b) { return mul[static_cast<std::size_t>(a) * n + b]; };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (prod(prod(a, b), c) != prod(a, prod(b, c))) fail("not associative");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int t = 0; t < 100000; ++t) {
      int a = static_cast<int>(next() % n);
      int b = static_cast<int>(next() % n);
      int c = static_cast<int>(next() % n);
      if (prod(prod(a, b), c) != prod(a, prod(b, c))) fail("not associative");
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, int n, std::vector<int> mul_flat,
                                    std::vector<std::string> labels) {
  validate_group(n, mul_flat, name);
  FiniteGroup G;
  G.n_ = n;
  G.mul_ = std::move(mul_flat);
  G.name_ = std::move(name);
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("FiniteGroup '" + G.name_ + "': label count mismatch");
  G.labels_ = std::move(labels);
  G.inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (G.mul(g, h) == identity) {
        G.inv_[g] = h;
        break;
      }
    }
    if (G.inv_[g] < 0 || G.mul(G.inv_[g], g) != identity)
      throw std::invalid_argument("FiniteGroup '" + G.name_ + "': inverse law fails");
  }
  return G;
}

int element_order(const FiniteGroup& G, int g) {
  int x = g, ord = 1;
  while (x != FiniteGroup::identity) {
    x = G.mul(x, g);
    ++ord;
  }
  return ord;
}

int commutator(const FiniteGroup& G, int g, int h) {
  return G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h));
}

Perm regular_rep(const FiniteGroup& G, int g, Side side) {
  std::vector<int> img(G.order());
  for (int h = 0; h < G.order(); ++h)
    img[h] = side == Side::left ? G.mul(g, h) : G.mul(h, g);
  return Perm(std::move(img));
}

bool hall_paige_condition(const FiniteGroup& G) {
  int n = G.order();
  if (n % 2 == 1) return true;
  int two_part = 1;
  while (n % 2 == 0) {
    two_part *= 2;
    n /= 2;
  }
  for (int g = 0; g < G.order(); ++g)
    if (element_order(G, g) == two_part) return false;  // cyclic Sylow 2
  return true;
}

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<int> generators) {
  std::set<int> members{FiniteGroup::identity};
  std::vector<int> frontier{FiniteGroup::identity};
  for (int g : generators) {
    if (g < 0 || g >= G.order())
      throw std::invalid_argument("subgroup_closure: generator out of range");
    if (members.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : generators) {
      for (int y : {G.mul(x, g), G.mul(g, x), G.inv(x)}) {
        if (members.insert(y).second) frontier.push_back(y);
      }
    }
  }
  Subgroup H;
  H.members.assign(members.begin(), members.end());
  H.generators = std::move(generators);
  if (G.order() % static_cast<int>(H.members.size()) != 0)
    throw std::logic_error("subgroup_closure: Lagrange violation");
  return H;
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.members.resize(G.order());
  for (int i = 0; i < G.order(); ++i) H.members[i] = i;
  for (int i = 1; i < G.order(); ++i) H.generators.push_back(i);
  return H;
}

Subgroup commutator_subgroup(const FiniteGroup& G) {
  std::set<int> comms;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) comms.insert(commutator(G, g, h));
  std::vector<int> gens(comms.begin(), comms.end());
  Subgroup H = subgroup_closure(G, gens);
  // keep a small generating set for reporting
  std::vector<int> small;
  Subgroup probe = subgroup_closure(G, {});
  for (int c : gens) {
    if (subgroup_contains(probe, c)) continue;
    small.push_back(c);
    probe = subgroup_closure(G, small);
    if (probe.members.size() == H.members.size()) break;
  }
  H.generators = std::move(small);
  return H;
}

bool subgroup_contains(const Subgroup& H, int g) {
  return std::binary_search(H.members.begin(), H.members.end(), g);
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (int g = 0; g < G.order(); ++g)
    for (int h : H.members)
      if (!subgroup_contains(H, G.conj(h, g))) return false;
  return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H, std::string name) {
  int m = static_cast<int>(H.members.size());
  std::vector<int> index_of(G.order(), -1);
  for (int i = 0; i < m; ++i) index_of[H.members[i]] = i;
  std::vector<int> mul(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = G.mul(H.members[a], H.members[b]);
      if (index_of[p] < 0)
        throw std::invalid_argument("subgroup_as_group: members not closed");
      mul[static_cast<std::size_t>(a) * m + b] = index_of[p];
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int g : H.members) labels.push_back(G.label(g));
  if (name.empty()) name = G.name() + "|sub" + std::to_string(m);
  return FiniteGroup::from_table(std::move(name), m, std::move(mul), std::move(labels));
}

QuotientResult quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  int n = G.order();
  std::vector<int> coset_min(n, -1);  // element -> smallest member of its coset
  for (int g = 0; g < n; ++g) {
    if (coset_min[g] >= 0) continue;
    std::vector<int> coset;
    for (int h : N.members) coset.push_back(G.mul(g, h));
    int mn = *std::min_element(coset.begin(), coset.end());
    for (int x : coset) coset_min[x] = mn;
  }
  std::vector<int> reps;  // sorted smallest members; identity coset first
  for (int g = 0; g < n; ++g)
    if (coset_min[g] == g) reps.push_back(g);
  std::vector<int> proj(n);
  for (int g = 0; g < n; ++g)
    proj[g] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), coset_min[g]) -
                               reps.begin());
  int q = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      mul[static_cast<std::size_t>(a) * q + b] = proj[G.mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  labels.reserve(q);
  for (int r : reps) labels.push_back(G.label(r) + "N");
  FiniteGroup Q = FiniteGroup::from_table(G.name() + "/N" + std::to_string(N.members.size()),
                                          q, std::move(mul), std::move(labels));
  return QuotientResult{std::move(Q), std::move(proj)};
}

namespace {

std::vector<std::vector<int>> coset_partition(const FiniteGroup& G, const Subgroup& H,
                                              Side side) {
  int n = G.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<int> coset;
    for (int h : H.members)
      coset.push_back(side == Side::left ? G.mul(g, h) : G.mul(h, g));
    std::sort(coset.begin(), coset.end());
    for (int x : coset) seen[x] = true;
    out.push_back(std::move(coset));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

}  // namespace

CosetDecomposition cosets_and_transversal(const FiniteGroup& G, const Subgroup& H) {
  CosetDecomposition dec;
  dec.left = coset_partition(G, H, Side::left);
  dec.right = coset_partition(G, H, Side::right);
  int n = G.order();
  int k = static_cast<int>(dec.left.size());

  // right-coset id of each element = index into dec.right
  std::vector<int> right_id(n, -1);
  for (int i = 0; i < static_cast<int>(dec.right.size()); ++i)
    for (int x : dec.right[i]) right_id[x] = i;

  // depth-first choice of a representative per left coset; the coset of the
  // identity is pinned to u_1 = 1. Prune on right-coset collisions.
  std::vector<int> chosen(k, -1);
  std::vector<bool> right_used(dec.right.size(), false);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    const auto& candidates = dec.left[i];
    for (int u : candidates) {
      if (i == 0 && u != FiniteGroup::identity) continue;
      int rid = right_id[u];
      if (right_used[rid]) continue;
      right_used[rid] = true;
      chosen[i] = u;
      if (self(self, i + 1)) return true;
      right_used[rid] = false;
    }
    return false;
  };
  if (dfs(dfs, 0)) dec.two_sided = chosen;
  return dec;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, int max_gens) {
  int n = G.order();
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;

  auto normal_closure = [&](std::vector<int> gens) {
    // close the generator set under conjugation, then take the subgroup
    std::set<int> closed(gens.begin(), gens.end());
    std::vector<int> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
      int h = frontier.back();
      frontier.pop_back();
      for (int g = 0; g < n; ++g) {
        int c = G.conj(h, g);
        if (closed.insert(c).second) frontier.push_back(c);
      }
    }
    return subgroup_closure(G, std::vector<int>(closed.begin(), closed.end()));
  };

  auto consider = [&](std::vector<int> gens) {
    Subgroup N = normal_closure(std::move(gens));
    int m = static_cast<int>(N.members.size());
    if (m == 1 || m == n) return;
    if (seen.insert(N.members).second) out.push_back(std::move(N));
  };

  for (int a = 1; a < n; ++a) {
    consider({a});
    if (max_gens < 2) continue;
    for (int b = a + 1; b < n; ++b) {
      consider({a, b});
      if (max_gens < 3) continue;
      for (int c = b + 1; c < n; ++c) consider({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return out;
}

}  // namespace cmkit
