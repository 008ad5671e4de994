#include "cmkit/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cmkit {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Perm hall_paige_even_cm(TwoGenKind kind, int n) {
  if (kind != TwoGenKind::D && kind != TwoGenKind::Q && kind != TwoGenKind::SD)
    throw std::invalid_argument("hall_paige_even_cm: kind must be D, Q or SD");
  int min_n = kind == TwoGenKind::D ? 3 : 4;
  if (n < min_n) throw std::invalid_argument("hall_paige_even_cm: n too small");
  int m = 1 << (n - 2);
  int half = 2 * m;
  int order = 1 << n;
  auto idx = [&](int l, int e) { return 2 * mod(l, half) + e; };
  std::vector<int> img(order);
  for (int l = 0; l < half; ++l) {
    if (l < m) {
      img[idx(l, 0)] = idx(l, 0);
      img[idx(l, 1)] = idx(-(l + 1), 0);
    } else {
      img[idx(l, 0)] = idx(l - m, 1);
      img[idx(l, 1)] = idx(m - (l + 1), 1);
    }
  }
  return Perm(std::move(img));
}

Perm sd_orthomorphism(int n) {
  if (n < 4) throw std::invalid_argument("sd_orthomorphism: n must be >= 4");
  FiniteGroup G = mk_two_generated_2group(TwoGenKind::SD, n);
  return associated_orthomorphism(G, hall_paige_even_cm(TwoGenKind::SD, n));
}

TotalOrder sd_exponent_order(int n) {
  int half = 1 << (n - 1);
  std::vector<int> rank(2 * half);
  for (int l = 0; l < half; ++l)
    for (int e = 0; e < 2; ++e) rank[2 * l + e] = e * half + l;
  return TotalOrder(std::move(rank));
}

int sd_orthomorphism_case(int n, int element) {
  int k = 1 << (n - 3);
  int l = element / 2, e = element % 2;
  if (e == 0) {
    if (l < 2 * k) return 1;
    if (l < 3 * k) return 2;
    return 3;
  }
  if (l % 2 != 0) {
    if (l <= 2 * k - 1) return 4;
    if (l <= 3 * k - 1) return 7;
    return 8;
  }
  if (l <= k - 2) return 5;
  if (l <= 2 * k - 2) return 6;
  return 9;
}

std::array<std::array<long long, 9>, 9> sd_inversion_case_table(int n) {
  Perm g = sd_orthomorphism(n);
  TotalOrder ord = sd_exponent_order(n);
  int N = g.degree();
  std::array<std::array<long long, 9>, 9> table{};
  for (int ra = 0; ra < N; ++ra) {
    int a = ord.element_at_rank(ra);
    for (int rb = ra + 1; rb < N; ++rb) {
      int b = ord.element_at_rank(rb);
      if (ord.rank(g(b)) < ord.rank(g(a)))
        table[sd_orthomorphism_case(n, a) - 1][sd_orthomorphism_case(n, b) - 1]++;
    }
  }
  return table;
}

HarmoniousResult modular_harmonious(int n) {
  if (n < 4) throw std::invalid_argument("modular_harmonious: n must be >= 4");
  int m = 1 << (n - 2);
  int half = 2 * m;
  int order = 1 << n;
  auto idx = [&](int l, int e) { return 2 * mod(l, half) + e; };
  std::vector<int> img(order);
  for (int l = 0; l < half; ++l) {
    if (l >= 1 && l <= m) img[idx(l, 0)] = idx(l + 1, 0);
    else img[idx(l, 0)] = idx(l + m + 1, 1);
    if (l <= m - 1) img[idx(l, 1)] = idx(l + m + 2, 0);
    else img[idx(l, 1)] = idx(l + 2, 1);
  }
  Perm f(std::move(img));
  FiniteGroup G = mk_two_generated_2group(TwoGenKind::M, n);
  if (!is_complete_mapping(G, f))
    throw std::logic_error("modular_harmonious: mapping failed verification");
  std::vector<int> ordering;
  ordering.reserve(order);
  int x = FiniteGroup::identity;
  do {
    ordering.push_back(x);
    x = f(x);
  } while (x != FiniteGroup::identity && static_cast<int>(ordering.size()) <= order);
  if (static_cast<int>(ordering.size()) != order)
    throw std::logic_error("modular_harmonious: not a single cycle");
  return HarmoniousResult{std::move(f), std::move(ordering)};
}

const std::array<CaseRow41, 41>& case_table_41() {
  // eps r  l0      l1      f            out descriptor        assoc descriptor
  static const std::array<CaseRow41, 41> rows = {{
      {0, 0, 0, 0, 0, 0, /*f*/ 0, 0, 0, /*out*/ 0, 0, 0, 0, 0, 0, /*as*/ 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 4, 2, 0, 1, 0, -3, 1, 1, 0, 1, 2, -3, 1, 5, 0, 5, 4, -3},
      {0, 0, 2, 4, 4, -4, 0, 0, -1, 0, 3, 2, 3, 4, -5, 0, 7, 4, 7, 8, -9},
      {0, 0, 4, 0, 4, 0, 1, 0, 0, 1, 0, 4, 0, 4, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 4, 4, 6, 0, 0, 4, -3, 0, 1, 0, 1, 2, -3, 0, 5, 4, 5, 8, -3},
      {0, 0, 6, 4, 8, -4, 1, 4, -1, 1, 3, 2, 3, 4, -5, 1, 7, 0, 7, 4, -9},
      {0, 1, 0, 1, 0, 1, 1, 0, -2, 1, 3, 8, -1, 8, -1, 1, 0, 4, 0, 4, 0},
      {0, 1, 0, 5, 2, 1, 0, 0, -3, 0, 2, 0, 2, 2, -2, 0, 7, 0, 7, 4, -1},
      {0, 1, 2, 5, 4, -3, 1, 4, -2, 1, 3, 6, 3, 8, -5, 1, 0, 4, 8, 8, -8},
      {0, 1, 4, 1, 4, 1, 0, 4, -2, 0, 3, 8, -1, 8, -1, 0, 0, 4, 0, 4, 0},
      {0, 1, 4, 5, 6, 1, 1, 0, -3, 1, 2, 4, 2, 6, -2, 1, 7, 4, 7, 8, -1},
      {0, 1, 6, 5, 8, -3, 0, 0, -2, 0, 3, 6, 3, 8, -5, 0, 0, 4, 8, 8, -8},
      {0, 2, 0, 2, 2, -2, 1, 0, 0, 1, 2, 0, 2, 2, -2, 1, 4, 0, 4, 4, -4},
      {0, 2, 2, 2, 4, -2, 1, 4, -2, 1, 0, 6, 0, 8, -4, 1, 2, 0, 2, 4, -6},
      {0, 2, 4, 2, 6, -2, 0, 0, 0, 0, 2, 4, 2, 6, -2, 0, 4, 0, 4, 4, -4},
      {0, 2, 6, 2, 8, -2, 0, 4, -2, 0, 0, 2, 0, 4, -4, 0, 2, 0, 2, 4, -6},
      {0, 3, 0, 3, 2, -1, 0, 4, 0, 0, 3, 4, 3, 6, -1, 0, 6, 4, 6, 8, -2},
      {0, 3, 2, 3, 4, -1, 1, 4, -1, 1, 2, 6, 2, 8, -2, 1, 5, 4, 5, 8, -3},
      {0, 3, 4, 3, 6, -1, 1, 0, 0, 1, 3, 4, 3, 6, -1, 1, 6, 4, 6, 8, -2},
      {0, 3, 6, 3, 8, -1, 0, 4, -1, 0, 2, 2, 2, 4, -2, 0, 5, 0, 5, 4, -3},
      {1, 0, 0, 0, 0, 0, 1, 4, -2, 1, 2, 4, -2, 4, -2, 0, 6, 4, -2, 4, -2},
      {1, 0, 0, 4, 2, -4, 0, 0, 0, 0, 0, 0, 4, 2, -4, 1, 0, 0, 8, 4, -8},
      {1, 0, 2, 0, 2, 0, 0, 0, -1, 0, 3, 2, -1, 2, -1, 1, 7, 4, -1, 4, -1},
      {1, 0, 2, 4, 4, 0, 0, 4, -2, 0, 2, 6, 2, 8, -2, 1, 6, 0, 6, 4, -2},
      {1, 0, 4, 4, 6, -4, 1, 0, 0, 1, 0, 4, 4, 6, -4, 0, 0, 0, 8, 4, -8},
      {1, 0, 6, 0, 6, 0, 1, 4, -1, 1, 3, 2, -1, 2, -1, 0, 7, 8, -1, 8, -1},
      {1, 0, 6, 4, 8, -4, 1, 4, -2, 1, 2, 2, 2, 4, -6, 0, 6, 0, 6, 4, -10},
      {1, 1, 0, 1, 2, -3, 0, 4, 0, 0, 1, 4, 1, 6, -3, 1, 2, 4, 2, 8, -6},
      {1, 1, 2, 1, 4, -3, 1, 0, -1, 1, 0, 2, 0, 4, -4, 0, 1, 0, 1, 4, -7},
      {1, 1, 4, 1, 6, -3, 1, 0, 0, 1, 1, 4, 1, 6, -3, 0, 2, 4, 2, 8, -6},
      {1, 1, 6, 1, 8, -3, 0, 0, -1, 0, 0, 6, 0, 8, -4, 1, 1, 4, 1, 8, -7},
      {1, 2, 0, 2, 0, 2, 1, 4, -3, 1, 3, 4, -1, 4, -1, 0, 1, 4, 1, 4, 1},
      {1, 2, 0, 6, 2, -2, 0, 0, -3, 0, 3, 0, 3, 2, -5, 1, 1, 0, 9, 4, -7},
      {1, 2, 2, 2, 4, -2, 1, 0, -1, 1, 1, 2, 1, 4, -3, 0, 3, 4, 3, 8, -5},
      {1, 2, 4, 2, 4, 2, 0, 0, -3, 0, 3, 4, -1, 4, -1, 1, 1, 0, 1, 0, 1},
      {1, 2, 4, 6, 6, -2, 1, 4, -3, 1, 3, 0, 3, 2, -5, 0, 1, 4, 9, 8, -7},
      {1, 2, 6, 2, 8, -2, 0, 4, -1, 0, 1, 2, 1, 4, -3, 1, 3, 0, 3, 4, -5},
      {1, 3, 0, 3, 2, -1, 0, 4, -3, 0, 0, 4, 0, 6, -4, 1, 3, 4, 3, 8, -5},
      {1, 3, 2, 3, 4, -1, 1, 4, -2, 1, 1, 6, 1, 8, -3, 0, 4, 4, 4, 8, -4},
      {1, 3, 4, 3, 6, -1, 1, 4, -3, 1, 0, 0, 0, 2, -4, 0, 3, 0, 3, 4, -5},
      {1, 3, 6, 3, 8, -1, 0, 0, -2, 0, 1, 6, 1, 8, -3, 1, 4, 4, 4, 8, -4},
  }};
  return rows;
}

int case_row_of(int k, int element) {
  const auto& rows = case_table_41();
  int xo = 8 * k;
  int eps = element / xo, l = element % xo;
  for (int i = 0; i < 41; ++i) {
    const auto& row = rows[i];
    if (row.eps != eps || l % 4 != row.r) continue;
    int l0 = row.l0_k * k + row.l0_c;
    int l1 = row.l1_k * k + row.l1_c;
    if (l >= l0 && l <= l1) return i;
  }
  return -1;
}

Perm modular_even_cm_16k(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("modular_even_cm_16k: k must be even and >= 2");
  const auto& rows = case_table_41();
  int xo = 8 * k, n = 16 * k;
  std::vector<int> img(n);
  for (int g = 0; g < n; ++g) {
    int which = case_row_of(k, g);
    if (which < 0) throw std::logic_error("modular_even_cm_16k: uncovered element");
    const auto& row = rows[which];
    int l = g % xo;
    img[g] = row.f_eps * xo + mod(l + row.f_zeta * k + row.f_eta, xo);
  }
  Perm f(std::move(img));
  FiniteGroup G = mk_modular_16k(k);
  if (!is_complete_mapping(G, f))
    throw std::logic_error("modular_even_cm_16k: mapping failed verification");
  return f;
}

namespace {

bool descriptor_partition(int k, bool assoc, bool outputs) {
  const auto& rows = case_table_41();
  int xo = 8 * k;
  std::vector<int> hits(2 * xo, 0);
  for (const auto& row : rows) {
    int eps, r, l0, l1, modulus;
    if (assoc) {
      eps = row.assoc_eps;
      r = row.assoc_r;
      l0 = row.assoc_l0_k * k + row.assoc_l0_c;
      l1 = row.assoc_l1_k * k + row.assoc_l1_c;
      modulus = 8;
    } else if (outputs) {
      eps = row.out_eps;
      r = row.out_r;
      l0 = row.out_l0_k * k + row.out_l0_c;
      l1 = row.out_l1_k * k + row.out_l1_c;
      modulus = 4;
    } else {
      eps = row.eps;
      r = row.r;
      l0 = row.l0_k * k + row.l0_c;
      l1 = row.l1_k * k + row.l1_c;
      modulus = 4;
    }
    for (int l = l0; l <= l1; ++l)
      if (mod(l, modulus) == r) hits[eps * xo + mod(l, xo)]++;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace

bool case_table_inputs_partition(int k) { return descriptor_partition(k, false, false); }
bool case_table_outputs_partition(int k) { return descriptor_partition(k, false, true); }
bool case_table_assoc_partition(int k) { return descriptor_partition(k, true, false); }

namespace {

struct FixtureDatum {
  int id;
  Parity parity;
  const char* cycles;
};

const FixtureDatum kOrder16Fixtures[] = {
    {2, Parity::even, "(1,4,6,2,16,9,5)(3,10,7,11,8)(13,14,15)"},
    {2, Parity::odd, "(1,12,15,4,14,9,8,16,3,11)(2,7,5,13,6)"},
    {3, Parity::even, "(2,15,12,11,7,3,9,4,5,13,14,6)(10,16)"},
    {3, Parity::odd, "(1,6,9,16,12,8,13,4,10,7,3,15,5,2)"},
    {4, Parity::even, "(1,8,10,12,13,4,11,3,9,15,2)(5,14,6,7,16)"},
    {4, Parity::odd, "(1,2,11,8,15,12,7,14,3,5,13,16,4,9)"},
    {6, Parity::even, "(1,7,8,4,6,13,3,2,12,14,9,10,5,15,16)"},
    {10, Parity::even, "(1,12,4,5,7,6,13,8)(3,14,9)(10,11,15,16)"},
    {10, Parity::odd, "(1,13,16,10,8,15,12,14,2)(3,5,7,6,11,4)"},
    {11, Parity::even, "(1,6,10,8,14,7,13,11)(2,15,4,9,16)(3,12)"},
    {11, Parity::odd, "(1,13,3,14,12,2,8,11,16)(4,7,6,15,10,5)"},
    {12, Parity::even, "(1,16,9)(2,11,3,12,7,14)(4,6,5,13,10,15)"},
    {12, Parity::odd, "(1,13,5,14,8)(3,7)(4,15,11,10)(6,9,12,16)"},
    {13, Parity::even, "(1,11,4,16,8,13,9,3,10,7,12,5,2)(6,14,15)"},
    {13, Parity::odd, "(1,15,7,2,3,10,6,8,16)(4,5,14,11,13,9)"},
};

}  // namespace

Order16Fixture order16_fixture(int id, Parity parity) {
  for (const auto& d : kOrder16Fixtures) {
    if (d.id != id || d.parity != parity) continue;
    FiniteGroup G = mk_small16(id);
    Perm p = parse_perm(d.cycles, 16);
    if (parity_by_cycles(p) != parity)
      throw std::logic_error("order16_fixture: recorded parity mismatch");
    if (!is_complete_mapping(G, p))
      throw std::logic_error("order16_fixture: fixture failed verification");
    return Order16Fixture{std::move(G), std::move(p), parity};
  }
  throw std::invalid_argument("order16_fixture: unknown id/parity combination");
}

std::vector<std::pair<int, Parity>> order16_fixture_ids() {
  std::vector<std::pair<int, Parity>> out;
  for (const auto& d : kOrder16Fixtures) out.emplace_back(d.id, d.parity);
  return out;
}

FieldFixture field_fixture(FieldFixtureId id) {
  switch (id) {
    case FieldFixtureId::f9: {
      FiniteGroup G = mk_elementary_abelian(3, 2);  // e1 = 1, e2 = 3
      Perm p = Perm::from_cycles(9, {{1, 7, 3, 8, 2, 5, 4}});
      if (!is_complete_mapping(G, p))
        throw std::logic_error("field_fixture: f9 failed verification");
      return FieldFixture{std::move(G), std::move(p)};
    }
    case FieldFixtureId::f11: {
      FiniteGroup G = mk_cyclic(11);
      Perm p = Perm::from_cycles(11, {{1, 4, 2, 8, 5, 3}});
      if (!is_complete_mapping(G, p))
        throw std::logic_error("field_fixture: f11 failed verification");
      return FieldFixture{std::move(G), std::move(p)};
    }
    case FieldFixtureId::f16: {
      FiniteGroup G = mk_elementary_abelian(2, 4);  // e_i = bit i-1
      Perm p = Perm::from_cycles(
          16, {{5, 14, 7}, {0, 12, 6, 1, 9, 4, 10, 15, 11, 13, 2, 3}});
      if (!is_complete_mapping(G, p))
        throw std::logic_error("field_fixture: f16 failed verification");
      return FieldFixture{std::move(G), std::move(p)};
    }
    case FieldFixtureId::z9: {
      FiniteGroup G = mk_cyclic(9);
      Perm p = Perm::from_cycles(9, {{0, 1, 3, 6, 8}, {2, 4, 7, 5}});
      if (!is_complete_mapping(G, p))
        throw std::logic_error("field_fixture: z9 failed verification");
      return FieldFixture{std::move(G), std::move(p)};
    }
  }
  throw std::invalid_argument("field_fixture: unknown id");
}

int primitive_polynomial_gf2(int d) {
  switch (d) {
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    case 8: return 0b100011101;
    default:
      throw std::invalid_argument("primitive_polynomial_gf2: d must be in 2..8");
  }
}

Perm singer_even_cm(int d) {
  int poly = primitive_polynomial_gf2(d);
  int n = 1 << d;
  std::vector<int> img(n);
  img[0] = 0;
  for (int v = 1; v < n; ++v) {
    int w = v << 1;
    if (w & n) w ^= poly;
    img[v] = w;
  }
  Perm p(std::move(img));
  auto type = cycle_type(p);
  if (type.size() != 2 || type.back() != n - 1)
    throw std::logic_error("singer_even_cm: multiplier is not primitive");
  return p;
}

namespace {

bool invertible_mod_p(std::vector<std::vector<int>> M, int p) {
  int d = static_cast<int>(M.size());
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (M[row][col] % p != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    std::swap(M[col], M[pivot]);
    // scale pivot row to 1
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (M[col][col] * t % p == 1) inv = t;
    for (int j = 0; j < d; ++j) M[col][j] = M[col][j] * inv % p;
    for (int row = 0; row < d; ++row) {
      if (row == col || M[row][col] % p == 0) continue;
      int factor = M[row][col] % p;
      for (int j = 0; j < d; ++j)
        M[row][j] = ((M[row][j] - factor * M[col][j]) % p + p * p) % p;
    }
  }
  return true;
}

}  // namespace

bool is_linear_complete_mapping(const std::vector<std::vector<int>>& M, int p) {
  int d = static_cast<int>(M.size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("is_linear_complete_mapping: matrix not square");
  auto Mplus = M;
  for (int i = 0; i < d; ++i) Mplus[i][i] = (Mplus[i][i] + 1) % p;
  return invertible_mod_p(M, p) && invertible_mod_p(Mplus, p);
}

Perm linear_perm(const std::vector<std::vector<int>>& M, int p) {
  int d = static_cast<int>(M.size());
  int n = 1;
  for (int i = 0; i < d; ++i) n *= p;
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> coord(d);
    int x = v;
    for (int i = 0; i < d; ++i, x /= p) coord[i] = x % p;
    int out = 0, place = 1;
    for (int i = 0; i < d; ++i, place *= p) {
      int c = 0;
      for (int j = 0; j < d; ++j) c += M[i][j] * coord[j];
      out += (c % p) * place;
    }
    img[v] = out;
  }
  return Perm(std::move(img));
}

TransversalWitness theta_transversal_witness(Sd32Variant variant) {
  FiniteGroup G = mk_semidirect_32(variant);
  Subgroup H;
  std::vector<int> u;
  if (variant == Sd32Variant::i2) {
    H = subgroup_closure(G, {8, 4});  // <x, y^2>
    u = {0, 2, 1, 3};                 // 1, y, z, yz
  } else {
    H = subgroup_closure(G, {8, 5});  // <x, yt>
    u = {0, 4, 2, 6};                 // 1, y, z, yz  (K = <y, z>)
  }
  if (H.members.size() != 8)
    throw std::logic_error("theta_transversal_witness: H has unexpected order");
  // Theta fixes 1 and cycles (y, z, yz): positions (0)(1 2 3)
  Perm s(std::vector<int>{0, 2, 3, 1});
  std::vector<int> t_img(4, -1);
  for (int i = 0; i < 4; ++i) {
    int prod = G.mul(u[i], u[s(i)]);
    for (int j = 0; j < 4; ++j) {
      if (subgroup_contains(H, G.mul(G.inv(u[j]), prod))) {
        t_img[i] = j;
        break;
      }
    }
    if (t_img[i] < 0)
      throw std::logic_error("theta_transversal_witness: product left the transversal cosets");
  }
  return TransversalWitness{std::move(G), std::move(H), std::move(u), std::move(s),
                            Perm(std::move(t_img))};
}

}  // namespace cmkit
