#include "cmkit/permgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cmkit/mappings.hpp"

namespace cmkit {

GeneratedGroup::GeneratedGroup(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("GeneratedGroup: degree must be positive");
}

GeneratedGroup::GeneratedGroup(const std::vector<Perm>& generators)
    : GeneratedGroup(generators.empty() ? 1 : generators[0].degree()) {
  for (const auto& g : generators) add_generator(g);
}

void GeneratedGroup::rebuild_orbit(int level) {
  Level& lv = levels_[level];
  lv.coset.assign(degree_, std::nullopt);
  lv.orbit.clear();
  lv.coset[lv.beta] = Perm::identity(degree_);
  lv.orbit.push_back(lv.beta);
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    int point = lv.orbit[i];
    for (const Perm& g : lv.gens) {
      int image = g(point);
      if (!lv.coset[image]) {
        lv.coset[image] = compose(g, *lv.coset[point]);
        lv.orbit.push_back(image);
      }
    }
  }
}

Perm GeneratedGroup::sift(const Perm& p, int from_level, int* drop_level) const {
  Perm residue = p;
  for (int i = from_level; i < static_cast<int>(levels_.size()); ++i) {
    const Level& lv = levels_[i];
    int image = residue(lv.beta);
    if (!lv.coset[image]) {
      if (drop_level) *drop_level = i;
      return residue;
    }
    residue = compose(lv.coset[image]->inverse(), residue);
  }
  if (drop_level) *drop_level = static_cast<int>(levels_.size());
  return residue;
}

// Attach a strong generator to every level whose base prefix it fixes
// (maintaining the invariant that levels_[i].gens generates the i-th
// stabilizer), then re-close the touched levels bottom-up.
void GeneratedGroup::insert(const Perm& p, int from_level) {
  if (p.is_identity()) return;
  int prefix = from_level;
  while (prefix < static_cast<int>(levels_.size()) && p(levels_[prefix].beta) ==
                                                          levels_[prefix].beta)
    ++prefix;
  if (prefix == static_cast<int>(levels_.size())) {
    Level lv;
    for (int x = 0; x < degree_; ++x)
      if (p(x) != x) {
        lv.beta = x;
        break;
      }
    levels_.push_back(std::move(lv));
  }
  for (int i = from_level; i <= prefix; ++i) levels_[i].gens.push_back(p);
  for (int i = prefix; i >= from_level; --i) close_level(i);
}

// Schreier closure of one level, assuming all deeper levels are complete.
void GeneratedGroup::close_level(int level) {
  rebuild_orbit(level);
  // the scan set is fixed: inserting residues only touches deeper levels
  const std::vector<int> orbit = levels_[level].orbit;
  const std::vector<Perm> gens = levels_[level].gens;
  std::vector<Perm> coset_reps;
  coset_reps.reserve(orbit.size());
  for (int point : orbit) coset_reps.push_back(*levels_[level].coset[point]);
  std::vector<int> rep_index(degree_, -1);
  for (std::size_t i = 0; i < orbit.size(); ++i) rep_index[orbit[i]] = static_cast<int>(i);

  for (std::size_t oi = 0; oi < orbit.size(); ++oi) {
    for (const Perm& g : gens) {
      const Perm& u_point = coset_reps[oi];
      const Perm& u_image = coset_reps[rep_index[g(orbit[oi])]];
      Perm schreier = compose(u_image.inverse(), compose(g, u_point));
      if (schreier.is_identity()) continue;
      Perm residue = sift(schreier, level + 1, nullptr);
      if (!residue.is_identity()) insert(residue, level + 1);
    }
  }
}

bool GeneratedGroup::add_generator(const Perm& p) {
  if (p.degree() != degree_)
    throw std::invalid_argument("GeneratedGroup::add_generator: degree mismatch");
  input_generators_.push_back(p);
  if (sift(p, 0, nullptr).is_identity()) return false;
  insert(p, 0);
  recompute_order();
  return true;
}

bool GeneratedGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("GeneratedGroup::contains: degree mismatch");
  return sift(p, 0, nullptr).is_identity();
}

void GeneratedGroup::recompute_order() {
  order_ = BigUint(1);
  for (const auto& lv : levels_) order_.mul_u32(static_cast<std::uint32_t>(lv.orbit.size()));
}

std::vector<int> GeneratedGroup::base() const {
  std::vector<int> out;
  for (const auto& lv : levels_) out.push_back(lv.beta);
  return out;
}

std::vector<Perm> GeneratedGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& lv : levels_)
    for (const auto& g : lv.gens) out.push_back(g);
  return out;
}

bool GeneratedGroup::is_transitive() const {
  if (levels_.empty()) return degree_ == 1;
  // orbit of 0 under all strong generators
  std::vector<Perm> gens = strong_generators();
  std::vector<bool> seen(degree_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens)
      if (!seen[g(x)]) {
        seen[g(x)] = true;
        ++count;
        stack.push_back(g(x));
      }
  }
  return count == degree_;
}

bool GeneratedGroup::is_primitive() const {
  if (!is_transitive()) return false;
  if (degree_ == 1) return true;
  std::vector<Perm> gens = strong_generators();
  // minimal block system containing {0, beta}, for each beta != 0
  for (int beta = 1; beta < degree_; ++beta) {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> queue{{0, beta}};
    parent[find(beta)] = find(0);
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        int ra = find(g(a)), rb = find(g(b));
        if (ra != rb) {
          parent[ra] = rb;
          queue.emplace_back(g(a), g(b));
        }
      }
    }
    int size = 0;
    int root = find(0);
    for (int x = 0; x < degree_; ++x)
      if (find(x) == root) ++size;
    if (size != degree_) return false;  // proper nontrivial block found
  }
  return true;
}

BigUint agl_order(int p, int d) {
  BigUint q(1);
  for (int i = 0; i < d; ++i) q.mul_u32(static_cast<std::uint32_t>(p));
  std::uint64_t qv = q.to_u64();
  BigUint out = q;  // translations
  std::uint64_t pi = 1;
  for (int i = 0; i < d; ++i) {
    out *= BigUint(qv - pi);
    pi *= static_cast<std::uint64_t>(p);
  }
  return out;
}

std::optional<std::pair<int, int>> prime_power(int n) {
  if (n < 2) return std::nullopt;
  int p = n;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      p = q;
      break;
    }
  int d = 0, m = n;
  while (m % p == 0) {
    m /= p;
    ++d;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, d);
}

std::string Classification::describe() const {
  switch (kind) {
    case trivial: return "trivial";
    case alternating: return "alternating";
    case symmetric: return "symmetric";
    case affine_match: return "affine(" + order.to_string() + ")";
    case other: return "other(" + order.to_string() + ")";
  }
  return "?";
}

namespace {

// digit-wise add of indices in base p (the translation structure used by
// the affine verification)
int digit_add(int a, int b, int p, int d) {
  int out = 0, place = 1;
  for (int i = 0; i < d; ++i) {
    out += ((a % p) + (b % p)) % p * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

int digit_sub(int a, int b, int p, int d) {
  int out = 0, place = 1;
  for (int i = 0; i < d; ++i) {
    out += ((a % p) - (b % p) + p) % p * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

}  // namespace

Classification classify(const GeneratedGroup& GG) {
  int n = GG.degree();
  const BigUint& order = GG.order();
  if (order == BigUint(1)) return {Classification::trivial, order};
  BigUint sym = BigUint::factorial(static_cast<unsigned>(n));
  if (order == sym) return {Classification::symmetric, order};
  if (n >= 3) {
    // compare 2 * order with n! instead of dividing n! by 2
    BigUint doubled = order;
    doubled.mul_u32(2);
    if (doubled == sym) return {Classification::alternating, order};
  }
  if (auto pp = prime_power(n)) {
    auto [p, d] = *pp;
    if (order == agl_order(p, d)) {
      // structural verification: all translations are members and every
      // strong generator is affine (g(x) - g(0) additive)
      bool ok = true;
      for (int v = 1; v < n && ok; ++v) {
        std::vector<int> img(n);
        for (int x = 0; x < n; ++x) img[x] = digit_add(x, v, p, d);
        ok = GG.contains(Perm(std::move(img)));
      }
      for (const Perm& g : GG.strong_generators()) {
        if (!ok) break;
        int c = g(0);
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n && ok; ++y) {
            int lhs = digit_sub(g(digit_add(x, y, p, d)), c, p, d);
            int rhs = digit_add(digit_sub(g(x), c, p, d), digit_sub(g(y), c, p, d), p, d);
            ok = lhs == rhs;
          }
      }
      if (ok) return {Classification::affine_match, order};
    }
  }
  return {Classification::other, order};
}

namespace {

constexpr int kExhaustiveGuard = 11;

GeneratedGroup p_group(const FiniteGroup& G, const PGroupOptions& opt, bool ortho) {
  int n = G.order();
  GeneratedGroup GG(n);
  if (opt.mode == PMode::exhaustive) {
    if (n > kExhaustiveGuard)
      throw std::invalid_argument("p_comp/p_orth: exhaustive mode guarded at order 11");
    EnumerateOptions eopt;
    eopt.orthomorphisms = ortho;
    eopt.override_guard = true;
    enumerate_cms(G, eopt, [&](const Perm& p) {
      GG.add_generator(p);
      return true;
    });
    return GG;
  }

  // sampled mode: seeds, then translations (in the group once any complete
  // mapping is: rho(x) o f and f are both generators-to-be), then random
  // finds until the order stabilizes
  auto add_cm = [&](const Perm& f) {
    // feed a complete mapping, or its orthomorphism counterpart f o inv
    if (ortho) return GG.add_generator(compose_with_inversion(G, f, Side::right));
    return GG.add_generator(f);
  };
  int quiet = 0;
  for (const Perm& f : opt.seeds) {
    if (!is_complete_mapping(G, f))
      throw std::invalid_argument("p_comp/p_orth: seed is not a complete mapping");
    add_cm(f);
  }
  for (int x = 0; x < n; ++x) GG.add_generator(regular_rep(G, x, Side::right));

  std::uint64_t seed = opt.budget.seed;
  for (int i = 0; i < opt.max_random_finds && quiet < opt.stabilization; ++i) {
    SearchBudget b = opt.budget;
    b.seed = seed + 1000003ull * static_cast<std::uint64_t>(i);
    auto res = random_cm(G, nullptr, b);
    if (!res.witness) break;
    bool grew = add_cm(*res.witness);
    quiet = grew ? 0 : quiet + 1;
  }
  return GG;
}

}  // namespace

GeneratedGroup p_comp(const FiniteGroup& G, const PGroupOptions& opt) {
  return p_group(G, opt, false);
}

GeneratedGroup p_orth(const FiniteGroup& G, const PGroupOptions& opt) {
  return p_group(G, opt, true);
}

double estimate_cm_count(const FiniteGroup& G) {
  double n = G.order();
  Subgroup derived = commutator_subgroup(G);
  double abelianization = n / static_cast<double>(derived.members.size());
  double log_value = -0.5 + std::log(abelianization) + 2.0 * std::lgamma(n + 1.0) -
                     n * std::log(n);
  return std::exp(log_value);
}

}  // namespace cmkit
