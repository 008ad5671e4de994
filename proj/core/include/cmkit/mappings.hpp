#pragma once

#include <span>
#include <vector>

#include "cmkit/group.hpp"
#include "cmkit/perm.hpp"

namespace cmkit {

// f is a complete mapping of G when g -> g*f(g) is a bijection too.
bool is_complete_mapping(const FiniteGroup& G, const Perm& f);

// f is an orthomorphism of G when g -> g^-1*f(g) is a bijection too.
bool is_orthomorphism(const FiniteGroup& G, const Perm& f);

// The orthomorphism g -> g*f(g) attached to a complete mapping f.
Perm associated_orthomorphism(const FiniteGroup& G, const Perm& f);

// Side::right: f o inv, turning complete mappings into orthomorphisms and
// conversely. Side::left: inv o f, valid for abelian G only.
Perm compose_with_inversion(const FiniteGroup& G, const Perm& f, Side side);

// seq lists every element once; true when the cyclic consecutive products
// seq[i]*seq[i+1] are pairwise distinct, equivalently when the n-cycle
// (seq[0],...,seq[n-1]) is a complete mapping (both are computed).
bool is_harmonious_ordering(const FiniteGroup& G, std::span<const int> seq);

// seq lists every element once starting at the identity; true when the
// partial products b_1..b_(n-1) are pairwise distinct and the full product
// is the identity. Cross-checked against the equivalent statement that
// (b_1,...,b_(n-1)) as an (n-1)-cycle is an orthomorphism.
bool is_r_sequencing(const FiniteGroup& G, std::span<const int> seq);

// Replace a complete mapping f of G that stabilizes H by h on H (h acts on
// H's own indices). The result is verified to be a complete mapping; its
// parity is parity(f) + parity(h) + parity(f restricted to H).
Perm splice(const FiniteGroup& G, const Subgroup& H, const Perm& f, const Perm& h);

// One Feistel round on 2n_half bits: (vl, vr) -> (vr, vl ^ F[vr]), where F
// is an arbitrary image table on {0..2^n_half-1}. Always a permutation of
// {0..2^(2*n_half)-1}; a complete mapping of F_2^(2*n_half) iff F is a
// bijection. Index layout: v = vl * 2^n_half + vr.
Perm feistel_round(std::span<const int> F, int n_half);
Perm feistel_round_inverse(std::span<const int> F, int n_half);

// Injectivity of v -> v ^ (v (+) 1) ^ S(v (+) 1) on half-width words, where
// ^ is the vector addition of F_2^w and (+) is integer addition mod 2^w on
// bit strings read as numbers.
bool gost_fs_injective(const Perm& S);

}  // namespace cmkit
