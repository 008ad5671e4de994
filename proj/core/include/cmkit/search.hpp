#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmkit/constructions.hpp"
#include "cmkit/fixture_store.hpp"
#include "cmkit/group.hpp"
#include "cmkit/mappings.hpp"
#include "cmkit/perm.hpp"

namespace cmkit {

using PermPredicate = std::function<bool(const Perm&)>;

// Depth-first enumeration of the complete mappings (or orthomorphisms) of G
// in lexicographic order of image sequences, with used-image and
// used-product bitsets. Degree is guarded at 16 unless explicitly
// overridden (hard cap 64, the bitset width).
struct EnumerateOptions {
  long long limit = -1;             // stop after this many yields (< 0: no limit)
  PermPredicate predicate;          // only yields satisfying this are counted
  bool orthomorphisms = false;      // enumerate g^-1 f(g) bijections instead
  bool override_guard = false;
  std::optional<int> first_image;   // restrict f(0), for work splitting
  long long node_limit = -1;        // search-tree node budget (< 0: no limit)
};

struct EnumerateResult {
  long long count = 0;   // yields matching the predicate
  long long nodes = 0;   // search tree nodes visited
  bool complete = true;  // false when a limit cut the run short
};

// visit returns false to stop early.
EnumerateResult enumerate_cms(const FiniteGroup& G, const EnumerateOptions& opt,
                              const std::function<bool(const Perm&)>& visit);

std::vector<Perm> collect_cms(const FiniteGroup& G, long long limit = -1,
                              bool override_guard = false);

struct ParityCensus {
  long long even = 0;
  long long odd = 0;
};
// Exact parity-split census of all complete mappings (|G| <= 16).
ParityCensus count_by_parity(const FiniteGroup& G, bool override_guard = false);

// Budgeted, seeded, restartable randomized backtracking.
struct SearchBudget {
  std::uint64_t seed = 1;
  long long nodes_per_restart = 200000;
  int restarts = 32;
};

struct RandomSearchResult {
  std::optional<Perm> witness;
  long long nodes = 0;
  std::uint64_t seed = 0;
};

RandomSearchResult random_cm(const FiniteGroup& G, const PermPredicate& predicate,
                             const SearchBudget& budget);

// ---------------------------------------------------------------------------
// Transversal witnesses and the lifting construction.

struct WitnessCheck {
  bool ok = true;
  std::string violation;  // first violated condition when !ok
};
WitnessCheck verify_transversal_witness(const TransversalWitness& w);

// From a normal subgroup N with a complete mapping on G/N: representatives
// u_i = smallest element of each coset, S from the (normalized) quotient
// mapping, T from its associated orthomorphism. Absent when the quotient
// admits no complete mapping.
std::optional<TransversalWitness> derive_witness_from_quotient(const FiniteGroup& G,
                                                               const Subgroup& N);

// From a complement pair (H, K): u = elements of K, S from a complete
// mapping theta of K normalized to fix the identity, T by coset lookup.
// Absent when K admits no complete mapping.
std::optional<TransversalWitness> derive_witness_from_complement(const FiniteGroup& G,
                                                                 const Subgroup& H,
                                                                 const Subgroup& K);

// Block-constrained lift: a complete mapping of G that stabilizes H and
// restricts to h on it, mapping coset u_i H onto u_{S(i)} H with products
// covering u_{T(i)} H. Existence is guaranteed by the witness conditions;
// exhaustion of a block search is reported as a logic error.
Perm lift_cm(const TransversalWitness& w, const Perm& h);

// ---------------------------------------------------------------------------
// Property (P): complete mappings of both parities.

enum class PropertyPVerdict { holds, fails_only_even, fails_no_cm, unknown };
const char* to_string(PropertyPVerdict v);

struct PropertyPReport {
  std::string group;
  std::optional<Perm> even_witness;
  std::optional<Perm> odd_witness;
  PropertyPVerdict verdict = PropertyPVerdict::unknown;
  std::vector<std::string> trace;  // method steps: fixture / enumeration / lifting / random
};

struct PropertyPOptions {
  SearchBudget budget;
  const FixtureStore* store = nullptr;  // optional on-disk fixtures
  long long enumeration_nodes = 4000000;
  int max_structural_depth = 2;
};

PropertyPReport property_p_report(const FiniteGroup& G, const PropertyPOptions& opt = {});

}  // namespace cmkit
