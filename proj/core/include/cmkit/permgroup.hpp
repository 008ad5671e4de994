#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmkit/bigint.hpp"
#include "cmkit/group.hpp"
#include "cmkit/perm.hpp"
#include "cmkit/search.hpp"

namespace cmkit {

// A permutation group in base / strong-generating-set form, built with a
// deterministic Schreier-Sims procedure. Supports exact order, membership,
// transitivity and primitivity tests, and incremental generator addition.
class GeneratedGroup {
public:
  explicit GeneratedGroup(int degree);
  explicit GeneratedGroup(const std::vector<Perm>& generators);

  int degree() const { return degree_; }
  // true when the generator enlarged the group
  bool add_generator(const Perm& p);
  bool contains(const Perm& p) const;

  const BigUint& order() const { return order_; }
  std::vector<int> base() const;
  std::vector<Perm> strong_generators() const;
  int generator_count() const { return static_cast<int>(input_generators_.size()); }
  const std::vector<Perm>& input_generators() const { return input_generators_; }

  bool is_transitive() const;
  bool is_primitive() const;  // transitive with only trivial block systems

private:
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;                  // strong generators at this level
    std::vector<std::optional<Perm>> coset;  // orbit point -> u with u(beta) = point
    std::vector<int> orbit;                  // orbit of beta in discovery order
  };

  int degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Perm> input_generators_;
  BigUint order_ = BigUint(1);

  void rebuild_orbit(int level);
  // returns the residue of p after sifting from the given level down
  Perm sift(const Perm& p, int from_level, int* drop_level) const;
  void insert(const Perm& p, int from_level);
  void close_level(int level);
  void recompute_order();
};

// order-based identification against Sym, Alt, and (for prime-power degree
// p^d) the affine group AGL_d(p); the affine match additionally verifies
// that all translations are members and that every strong generator is
// affine in the base-p digit encoding of the point set.
struct Classification {
  enum Kind { trivial, alternating, symmetric, affine_match, other } kind;
  BigUint order;
  std::string describe() const;
};
Classification classify(const GeneratedGroup& GG);

BigUint agl_order(int p, int d);
// degree as p^d with p prime, when it is a prime power
std::optional<std::pair<int, int>> prime_power(int n);

// ---------------------------------------------------------------------------
// The groups generated by all complete mappings / orthomorphisms of G.

enum class PMode { exhaustive, sampled };

struct PGroupOptions {
  PMode mode = PMode::exhaustive;
  // sampled mode: stop after this many consecutive generator additions
  // that do not grow the group
  int stabilization = 25;
  int max_random_finds = 400;
  SearchBudget budget;
  std::vector<Perm> seeds;  // extra candidate generators (verified first)
};

// Exhaustive mode enumerates every complete mapping (resp. orthomorphism;
// |G| <= 11 guarded). Sampled mode feeds translations, any provided seeds,
// and seeded random finds until the order stabilizes.
GeneratedGroup p_comp(const FiniteGroup& G, const PGroupOptions& opt = {});
GeneratedGroup p_orth(const FiniteGroup& G, const PGroupOptions& opt = {});

// e^(-1/2) * |G/G'| * (|G|!)^2 / |G|^|G| as a floating-point value.
double estimate_cm_count(const FiniteGroup& G);

}  // namespace cmkit
