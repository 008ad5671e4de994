#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cmkit/group.hpp"
#include "cmkit/perm.hpp"

namespace cmkit {

enum class LatinProvenance { cayley, l_h, mann_product, external };

// An n x n array over {0..n-1} in which every row is a permutation. Latin
// squares additionally have permutation columns; Mann products of Latin
// squares are only guaranteed to be row-Latin, hence the split.
class RowLatinSquare {
public:
  RowLatinSquare(int degree, std::vector<int> cells, LatinProvenance prov);
  int degree() const { return n_; }
  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  LatinProvenance provenance() const { return prov_; }
  Perm row_perm(int i) const;
  bool columns_are_permutations() const;

protected:
  int n_;
  std::vector<int> cells_;
  LatinProvenance prov_;
};

class LatinSquare : public RowLatinSquare {
public:
  LatinSquare(int degree, std::vector<int> cells, LatinProvenance prov);
  Perm col_perm(int j) const;
  Perm symbol_perm(int x) const;
};

// L_h over G: cell (i,j) = h(g_i) * g_j. With h = id this is the Cayley
// table A; with a complete mapping f it is C_f; with the associated
// orthomorphism of f it is B_f.
LatinSquare l_h_square(const FiniteGroup& G, const Perm& h);
LatinSquare cayley_square(const FiniteGroup& G);

// Row/column/symbol parity triple with the fundamental relation
// pr + pc + ps = C(n,2) mod 2 (asserted on every construction).
struct FHWType {
  Parity rows, cols, symbols;
  bool operator==(const FHWType&) const = default;
};
std::string to_string(const FHWType& t);
FHWType parities(const LatinSquare& L);

// Counts of the minority parity class among rows resp. columns, each in
// {0..n/2}; an isotopism invariant.
struct KType {
  int k = 0, m = 0;
  bool operator==(const KType&) const = default;
};
KType kotlar_type(const LatinSquare& L);

// Mann product: row permutations compose index-wise. The result is only
// row-Latin in general; as_latin() promotes it after checking columns.
RowLatinSquare mann_product(const RowLatinSquare& L1, const RowLatinSquare& L2);
std::optional<LatinSquare> as_latin(const RowLatinSquare& L);

// Orthogonality by superposition, cross-checked against Mann's criterion
// (L2 = L1 * Q for a Latin Q, i.e. the quotient square is Latin).
bool is_orthogonal(const LatinSquare& L1, const LatinSquare& L2);

// F_2-sum over g of the parity of the translation by g; equals 1 exactly
// when |G| = 2 mod 4 (checked against the computed sum).
Parity sigma(const FiniteGroup& G);

// The expected parity triple of L_h(G) as a function of |G| mod 4 and the
// parity of h.
FHWType fhw_expected(int order_mod_4, Parity h_parity);
bool fhw_theorem_check(const FiniteGroup& G, const Perm& h);

// Text format: line 1 = n, then n rows of n zero-based indices.
LatinSquare read_latin_square(std::istream& in);
LatinSquare read_latin_square_text(const std::string& text);
void write_latin_square(std::ostream& out, const LatinSquare& L);

}  // namespace cmkit
