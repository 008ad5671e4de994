#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmkit/families.hpp"
#include "cmkit/group.hpp"
#include "cmkit/mappings.hpp"
#include "cmkit/perm.hpp"

namespace cmkit {

// ---------------------------------------------------------------------------
// Classic even complete mapping of the D/Q/SD families (m = 2^(n-2)):
//   x^l       -> x^l            0 <= l < m
//   x^l       -> x^(l-m) y      m <= l < 2m
//   x^l y     -> x^-(l+1)       0 <= l < m
//   x^l y     -> x^(m-l-1) y    m <= l < 2m
// Cycle census: m fixed points, m/2 transpositions, m/2 four-cycles.
Perm hall_paige_even_cm(TwoGenKind kind, int n);

// The associated orthomorphism of hall_paige_even_cm(SD, n); even, with
// inversion count (29/2)k^2 - 2k under sd_exponent_order(n), k = 2^(n-3).
Perm sd_orthomorphism(int n);

// Order on SD_2^n by (epsilon, l): rank(x^l y^e) = e*2^(n-1) + l.
TotalOrder sd_exponent_order(int n);

// Case id (1..9) of an element of SD_2^n in the nine-case description of
// sd_orthomorphism: splits epsilon = 0 by thirds of the exponent range and
// epsilon = 1 by exponent parity.
int sd_orthomorphism_case(int n, int element);

// Per-case-pair inversion subtotals of sd_orthomorphism(n): entry [a][b]
// counts inverted pairs whose lower element is in case a+1 and upper in b+1.
std::array<std::array<long long, 9>, 9> sd_inversion_case_table(int n);

// ---------------------------------------------------------------------------
// A complete mapping of M_2^n (n >= 4) consisting of one 2^n-cycle, plus the
// harmonious ordering read off the cycle starting at the identity.
struct HarmoniousResult {
  Perm perm;
  std::vector<int> ordering;
};
HarmoniousResult modular_harmonious(int n);

// ---------------------------------------------------------------------------
// The 41-case even complete mapping of M_16k (even k >= 2) on mk_modular_16k.
// Inversion count under index order: 59k^2 + 19k - 6.
Perm modular_even_cm_16k(int k);

// One row of the defining case table. An element y^eps x^l with
// l % 4 == r and l0 <= l <= l1 (bounds evaluated as coef*k + off) maps to
// y^f_eps x^(l + f_zeta*k + f_eta mod 8k). The out_* / assoc_* descriptors
// state where the images of f and of g -> g*f(g) land (residues mod 4 and
// mod 8 respectively).
struct CaseRow41 {
  int eps, r;
  int l0_k, l0_c, l1_k, l1_c;
  int f_eps, f_zeta, f_eta;
  int out_eps, out_r, out_l0_k, out_l0_c, out_l1_k, out_l1_c;
  int assoc_eps, assoc_r, assoc_l0_k, assoc_l0_c, assoc_l1_k, assoc_l1_c;
};
const std::array<CaseRow41, 41>& case_table_41();

// Which row (0-based) an element of mk_modular_16k(k) falls in; used by the
// partition invariants and by modular_even_cm_16k itself.
int case_row_of(int k, int element);

// Partition checks for the three descriptor columns at a given even k.
bool case_table_inputs_partition(int k);
bool case_table_outputs_partition(int k);
bool case_table_assoc_partition(int k);

// ---------------------------------------------------------------------------
// Verbatim order-16 fixtures: the group built from its presentation and the
// recorded permutation of stated parity.
struct Order16Fixture {
  FiniteGroup group;
  Perm perm;
  Parity parity;
};
// ids: 2, 3, 4, 10, 11, 12, 13 for both parities; 6 for Parity::even only.
Order16Fixture order16_fixture(int id, Parity parity);
std::vector<std::pair<int, Parity>> order16_fixture_ids();

// ---------------------------------------------------------------------------
// Field fixtures: explicit complete mappings of small additive groups.
enum class FieldFixtureId { f9, f11, f16, z9 };
struct FieldFixture {
  FiniteGroup group;
  Perm perm;
};
FieldFixture field_fixture(FieldFixtureId id);

// ---------------------------------------------------------------------------
// Multiplication by a fixed primitive element of F_2^d (2 <= d <= 8), via a
// pinned primitive polynomial per degree; a (2^d - 1)-cycle fixing 0, hence
// an even complete mapping of mk_elementary_abelian(2, d).
Perm singer_even_cm(int d);
int primitive_polynomial_gf2(int d);  // coefficient bitmask incl. leading term

// M (given row-major, d x d over F_p) induces a linear complete mapping of
// F_p^d iff M and M + I are both invertible.
bool is_linear_complete_mapping(const std::vector<std::vector<int>>& M, int p);
Perm linear_perm(const std::vector<std::vector<int>>& M, int p);

// ---------------------------------------------------------------------------
// Two-sided transversal witnesses for the two exceptional order-32 groups:
// H = <x, y^2> resp. <x, yt>, U = {1, y, z, yz}, Theta = (y, z, yz).
struct TransversalWitness {
  FiniteGroup group;
  Subgroup subgroup;
  std::vector<int> transversal;  // u_1 = identity
  Perm s;                        // 0-based on {0..k-1}, s(0) = 0
  Perm t;                        // u_i * u_{s(i)} * H = u_{t(i)} * H
};
TransversalWitness theta_transversal_witness(Sd32Variant variant);

}  // namespace cmkit
