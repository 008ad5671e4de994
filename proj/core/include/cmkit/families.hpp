#pragma once

#include <string>
#include <vector>

#include "cmkit/group.hpp"

namespace cmkit {

// Cyclic group of order m, element i = the exponent i, labeled "0".."m-1".
FiniteGroup mk_cyclic(int m);

// Componentwise product, |G|*|H| elements indexed G-major: (a,b) -> a*|H|+b.
FiniteGroup mk_direct_product(const FiniteGroup& G, const FiniteGroup& H);

// Additive group of F_p^d. Element index encodes the coordinate vector in
// base p with e_i at digit i-1, so e_1 = 1, e_2 = p, ..., e_d = p^(d-1).
FiniteGroup mk_elementary_abelian(int p, int d);

// The five order-2^n families with a cyclic subgroup of index 2, in the
// normal form x^l y^e with index 2l+e:
//   AC: C_{2^(n-1)} x C_2                      (n >= 3)
//   D : y^-1 x y = x^-1                        (n >= 3)
//   Q : y^2 = x^(2^(n-2)), y^-1 x y = x^-1     (n >= 4)
//   SD: y^-1 x y = x^(2^(n-2)-1)               (n >= 4)
//   M : y^-1 x y = x^(2^(n-2)+1)               (n >= 4)
enum class TwoGenKind { AC, D, Q, SD, M };
const char* to_string(TwoGenKind k);
FiniteGroup mk_two_generated_2group(TwoGenKind kind, int n);

// The modular group of order 16k for even k >= 2, in the normal form
// y^e x^l with index e*8k + l (note the reversed power order):
//   <x,y : x^(8k) = y^2 = 1, y^-1 x y = x^(4k+1)>
FiniteGroup mk_modular_16k(int k);

// The two exceptional order-32 groups built by explicit normal-form
// collection from their presentations:
//   i2: C_4 acting on C_4 x C_2 by y -> yz; elements x^a y^b z^c,
//       index 8a + 2b + c.
//   i6: C_4 acting on C_2^3 by y -> z -> t -> yzt; elements x^a y^b z^c t^d,
//       index 8a + 4b + 2c + d.
enum class Sd32Variant { i2, i6 };
FiniteGroup mk_semidirect_32(Sd32Variant variant);

// A refined polycyclic presentation on generators g_1..g_r (r <= 5).
// power_words[i] is the normal-form word for g_i^rel_order[i];
// comm_words[j][i] (j > i) is the word for [g_j, g_i] = g_j^-1 g_i^-1 g_j g_i.
// Words are letter sequences of generator indices and may only use
// generators strictly later than the ones they relate.
struct PcPresentation {
  std::vector<int> rel_orders;                       // one per generator, >= 2
  std::vector<std::vector<int>> power_words;         // one per generator
  std::vector<std::vector<std::vector<int>>> comm_words;  // [j][i], j > i
  int ngens() const { return static_cast<int>(rel_orders.size()); }
};

// Elements are normal-form words ordered by number of generators involved,
// then lexicographically by the generator subset; for four involutory
// generators x,y,z,t that is 1, x, y, z, t, xy, xz, xt, yz, yt, zt, xyz,
// xyt, xzt, yzt, xyzt. Multiplication is by collection.
FiniteGroup mk_from_pc_presentation(const PcPresentation& pc, std::string name,
                                    std::vector<std::string> gen_names = {});

// The noncyclic order-16 groups by small-group id (2..14). Ids 2, 3, 4, 6,
// 10, 11, 12, 13, 14 are built from their polycyclic presentations (names
// "small16:i"); ids 5, 7, 8, 9 alias the AC/D/SD/Q family constructors.
FiniteGroup mk_small16(int id);

// The quaternion group of order 8 (x^2 = y^2 = [y,x] = z, z^2 = 1),
// via its polycyclic presentation; named "q8".
FiniteGroup mk_q8();

}  // namespace cmkit
