#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmkit/perm.hpp"

namespace cmkit {

// A finite group of order n given by its multiplication table on the
// element indices {0..n-1}. The identity is always index 0; every
// constructor validates the group axioms (associativity exhaustively for
// n <= 64, on a fixed sample of 10^5 triples above that).
class FiniteGroup {
public:
  static constexpr int identity = 0;

  // mul_flat is the row-major n x n table: mul_flat[a*n+b] = a*b.
  static FiniteGroup from_table(std::string name, int n, std::vector<int> mul_flat,
                                std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x

  const std::string& name() const { return name_; }
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  FiniteGroup() = default;
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
};

int element_order(const FiniteGroup& G, int g);
int commutator(const FiniteGroup& G, int g, int h);  // g^-1 h^-1 g h

// Translation permutation: left = h -> g*h, right = h -> h*g.
Perm regular_rep(const FiniteGroup& G, int g, Side side);

// Sylow 2-subgroups trivial or noncyclic; equivalently |G| odd or no
// element of order equal to the 2-part of |G|.
bool hall_paige_condition(const FiniteGroup& G);

// Subgroups are value types tied to a parent group passed alongside.
struct Subgroup {
  std::vector<int> members;     // sorted, contains 0
  std::vector<int> generators;  // some generating set
};

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<int> generators);
Subgroup whole_group(const FiniteGroup& G);
Subgroup commutator_subgroup(const FiniteGroup& G);
bool subgroup_contains(const Subgroup& H, int g);
bool is_normal(const FiniteGroup& G, const Subgroup& H);

// The subgroup as a group in its own right; element i of the result is
// members[i] of the parent (sorted ascending, so the identity stays at 0).
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H,
                              std::string name = {});

struct QuotientResult {
  FiniteGroup group;            // cosets, sorted by smallest member
  std::vector<int> projection;  // parent element -> coset index
};

// Requires N normal (checked).
QuotientResult quotient_group(const FiniteGroup& G, const Subgroup& N);

struct CosetDecomposition {
  std::vector<std::vector<int>> left;   // gH, sorted by smallest member
  std::vector<std::vector<int>> right;  // Hg, sorted by smallest member
  // Representatives u_1..u_k with u_1 = identity forming simultaneously a
  // left and a right transversal, when one exists; aligned with `left`.
  std::optional<std::vector<int>> two_sided;
};

CosetDecomposition cosets_and_transversal(const FiniteGroup& G, const Subgroup& H);

// All normal subgroups arising as normal closures of <= max_gens elements
// (proper and nontrivial ones only, deduplicated).
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, int max_gens = 3);

}  // namespace cmkit
