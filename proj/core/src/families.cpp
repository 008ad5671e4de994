#include "cmkit/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cmkit {

namespace {

std::vector<int> make_table(int n) { return std::vector<int>(static_cast<std::size_t>(n) * n); }

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteGroup mk_cyclic(int m) {
  if (m < 1) throw std::invalid_argument("mk_cyclic: order must be positive");
  auto mul = make_table(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  return FiniteGroup::from_table("cyclic:" + std::to_string(m), m, std::move(mul),
                                 std::move(labels));
}

FiniteGroup mk_direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  int n = G.order() * H.order();
  int m = H.order();
  auto mul = make_table(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ga = a / m, ha = a % m, gb = b / m, hb = b % m;
      mul[static_cast<std::size_t>(a) * n + b] = G.mul(ga, gb) * m + H.mul(ha, hb);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < n; ++a)
    labels.push_back("(" + G.label(a / m) + "," + H.label(a % m) + ")");
  return FiniteGroup::from_table("(" + G.name() + ")x(" + H.name() + ")", n,
                                 std::move(mul), std::move(labels));
}

FiniteGroup mk_elementary_abelian(int p, int d) {
  if (p < 2) throw std::invalid_argument("mk_elementary_abelian: p must be prime");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("mk_elementary_abelian: p must be prime");
  if (d < 1) throw std::invalid_argument("mk_elementary_abelian: d must be positive");
  long long n_ll = 1;
  for (int i = 0; i < d; ++i) n_ll *= p;
  if (n_ll > 65536) throw std::invalid_argument("mk_elementary_abelian: p^d too large");
  int n = static_cast<int>(n_ll);

  auto add = [&](int a, int b) {
    int out = 0, place = 1;
    for (int i = 0; i < d; ++i) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  };
  auto mul = make_table(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = add(a, b);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) {
    std::string s;
    int x = v;
    for (int i = 1; i <= d; ++i, x /= p) {
      int c = x % p;
      if (!c) continue;
      if (!s.empty()) s += "+";
      if (c > 1) s += std::to_string(c);
      s += "e" + std::to_string(i);
    }
    labels.push_back(s.empty() ? "0" : s);
  }
  return FiniteGroup::from_table("elem:" + std::to_string(p) + ":" + std::to_string(d),
                                 n, std::move(mul), std::move(labels));
}

const char* to_string(TwoGenKind k) {
  switch (k) {
    case TwoGenKind::AC: return "AC";
    case TwoGenKind::D: return "D";
    case TwoGenKind::Q: return "Q";
    case TwoGenKind::SD: return "SD";
    case TwoGenKind::M: return "M";
  }
  return "?";
}

FiniteGroup mk_two_generated_2group(TwoGenKind kind, int n) {
  int min_n = (kind == TwoGenKind::AC || kind == TwoGenKind::D) ? 3 : 4;
  if (n < min_n)
    throw std::invalid_argument(std::string("mk_two_generated_2group: n too small for ") +
                                to_string(kind));
  int half = 1 << (n - 1);  // order of x
  int m = 1 << (n - 2);
  int order = 1 << n;

  // (x^l1 y^e1)(x^l2 y^e2) = x^(l1 + a(e1,l2)) y^(e1+e2) * correction
  auto product = [&](int l1, int e1, int l2, int e2) {
    int l, e = (e1 + e2) & 1;
    switch (kind) {
      case TwoGenKind::AC: l = mod(l1 + l2, half); break;
      case TwoGenKind::D:
        l = mod(l1 + (e1 ? -l2 : l2), half);
        break;
      case TwoGenKind::Q:
        l = mod(l1 + (e1 ? -l2 : l2) + (e1 && e2 ? m : 0), half);
        break;
      case TwoGenKind::SD:
        l = mod(l1 + (e1 ? (m - 1) * l2 : l2), half);
        break;
      case TwoGenKind::M:
        l = mod(l1 + (e1 ? (m + 1) * l2 : l2), half);
        break;
      default: throw std::logic_error("unreachable");
    }
    return 2 * l + e;
  };

  auto mul = make_table(order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      mul[static_cast<std::size_t>(a) * order + b] = product(a / 2, a % 2, b / 2, b % 2);

  std::vector<std::string> labels;
  labels.reserve(order);
  for (int i = 0; i < order; ++i) {
    int l = i / 2, e = i % 2;
    std::string s;
    if (l == 1) s = "x";
    else if (l > 1) s = "x^" + std::to_string(l);
    if (e) s += s.empty() ? "y" : " y";
    labels.push_back(s.empty() ? "1" : s);
  }
  return FiniteGroup::from_table(std::string("2group:") + to_string(kind) + ":" +
                                     std::to_string(n),
                                 order, std::move(mul), std::move(labels));
}

FiniteGroup mk_modular_16k(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("mk_modular_16k: k must be even and >= 2");
  int xo = 8 * k;  // order of x
  int n = 16 * k;
  // (y^e1 x^l1)(y^e2 x^l2) = y^(e1+e2) x^(l1+l2), plus 4k when e2 = 1 and l1 odd
  auto mul = make_table(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int e1 = a / xo, l1 = a % xo, e2 = b / xo, l2 = b % xo;
      int l = mod(l1 + l2 + ((e2 == 1 && l1 % 2 != 0) ? 4 * k : 0), xo);
      mul[static_cast<std::size_t>(a) * n + b] = ((e1 + e2) & 1) * xo + l;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    int e = i / xo, l = i % xo;
    std::string s = e ? "y" : "";
    if (l == 1) s += s.empty() ? "x" : " x";
    else if (l > 1) s += (s.empty() ? "x^" : " x^") + std::to_string(l);
    labels.push_back(s.empty() ? "1" : s);
  }
  return FiniteGroup::from_table("modular16k:" + std::to_string(k), n, std::move(mul),
                                 std::move(labels));
}

FiniteGroup mk_semidirect_32(Sd32Variant variant) {
  auto mul = make_table(32);
  std::vector<std::string> labels(32);
  if (variant == Sd32Variant::i2) {
    // x^a y^b z^c, a,b in 0..3, c in 0..1; x^-1 y x = yz, z central
    auto idx = [](int a, int b, int c) { return 8 * a + 2 * b + c; };
    for (int a1 = 0; a1 < 4; ++a1)
      for (int b1 = 0; b1 < 4; ++b1)
        for (int c1 = 0; c1 < 2; ++c1)
          for (int a2 = 0; a2 < 4; ++a2)
            for (int b2 = 0; b2 < 4; ++b2)
              for (int c2 = 0; c2 < 2; ++c2) {
                int a = (a1 + a2) % 4;
                int b = (b1 + b2) % 4;
                int c = (c1 + c2 + a2 * b1) % 2;
                mul[static_cast<std::size_t>(idx(a1, b1, c1)) * 32 + idx(a2, b2, c2)] =
                    idx(a, b, c);
              }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 2; ++c) {
          std::string s;
          if (a) s += a == 1 ? "x" : "x^" + std::to_string(a);
          if (b) s += std::string(s.empty() ? "" : " ") + (b == 1 ? "y" : "y^" + std::to_string(b));
          if (c) s += std::string(s.empty() ? "" : " ") + "z";
          labels[idx(a, b, c)] = s.empty() ? "1" : s;
        }
    return FiniteGroup::from_table("sd32:i2", 32, std::move(mul), std::move(labels));
  }
  // i6: x^a y^b z^c t^d with x acting on <y,z,t> = F_2^3 by y->z->t->yzt
  auto idx = [](int a, int v) { return 8 * a + v; };  // v = 4b+2c+d
  auto act = [](int v) {  // one application of conjugation by x
    int b = (v >> 2) & 1, c = (v >> 1) & 1, d = v & 1;
    // y -> z, z -> t, t -> y+z+t
    int nb = d, nc = b ^ d, nd = c ^ d;
    return (nb << 2) | (nc << 1) | nd;
  };
  for (int a1 = 0; a1 < 4; ++a1)
    for (int v1 = 0; v1 < 8; ++v1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int v2 = 0; v2 < 8; ++v2) {
          int w = v1;
          for (int t = 0; t < a2; ++t) w = act(w);
          mul[static_cast<std::size_t>(idx(a1, v1)) * 32 + idx(a2, v2)] =
              idx((a1 + a2) % 4, w ^ v2);
        }
  for (int a = 0; a < 4; ++a)
    for (int v = 0; v < 8; ++v) {
      std::string s;
      if (a) s += a == 1 ? "x" : "x^" + std::to_string(a);
      const char* gens[] = {"y", "z", "t"};
      for (int i = 0; i < 3; ++i)
        if ((v >> (2 - i)) & 1) s += std::string(s.empty() ? "" : " ") + gens[i];
      labels[idx(a, v)] = s.empty() ? "1" : s;
    }
  return FiniteGroup::from_table("sd32:i6", 32, std::move(mul), std::move(labels));
}

namespace {

// Collection from the left: normalize a letter word against the presentation.
std::vector<int> collect(const PcPresentation& pc, std::vector<int> word) {
  const int r = pc.ngens();
  long long steps = 0;
  for (;;) {
    if (++steps > 2000000)
      throw std::invalid_argument("mk_from_pc_presentation: collection did not terminate");
    bool changed = false;
    for (std::size_t i = 0; i + 1 <= word.size(); ++i) {
      // power relation: rel_orders[g] equal letters in a row
      int g = word[i];
      std::size_t run = 1;
      while (i + run < word.size() && word[i + run] == g) ++run;
      if (static_cast<int>(run) >= pc.rel_orders[g]) {
        std::vector<int> next(word.begin(), word.begin() + i);
        next.insert(next.end(), pc.power_words[g].begin(), pc.power_words[g].end());
        next.insert(next.end(), word.begin() + i + pc.rel_orders[g], word.end());
        word = std::move(next);
        changed = true;
        break;
      }
      if (i + 1 < word.size() && word[i] > word[i + 1]) {
        // g_j g_i -> g_i g_j [g_j, g_i]
        int j = word[i], k = word[i + 1];
        std::vector<int> next(word.begin(), word.begin() + i);
        next.push_back(k);
        next.push_back(j);
        const auto& c = pc.comm_words[j][k];
        next.insert(next.end(), c.begin(), c.end());
        next.insert(next.end(), word.begin() + i + 2, word.end());
        word = std::move(next);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  (void)r;
  return word;
}

}  // namespace

FiniteGroup mk_from_pc_presentation(const PcPresentation& pc, std::string name,
                                    std::vector<std::string> gen_names) {
  const int r = pc.ngens();
  if (r < 1 || r > 5)
    throw std::invalid_argument("mk_from_pc_presentation: 1..5 generators supported");
  if (static_cast<int>(pc.power_words.size()) != r ||
      static_cast<int>(pc.comm_words.size()) != r)
    throw std::invalid_argument("mk_from_pc_presentation: relation tables malformed");
  for (int i = 0; i < r; ++i) {
    if (pc.rel_orders[i] < 2)
      throw std::invalid_argument("mk_from_pc_presentation: relative orders must be >= 2");
    for (int g : pc.power_words[i])
      if (g <= i || g >= r)
        throw std::invalid_argument(
            "mk_from_pc_presentation: power word must use strictly later generators");
    if (static_cast<int>(pc.comm_words[i].size()) != r)
      throw std::invalid_argument("mk_from_pc_presentation: relation tables malformed");
    for (int j = 0; j < r; ++j)
      for (int g : pc.comm_words[i][j])
        if (g <= i || g >= r)
          throw std::invalid_argument(
              "mk_from_pc_presentation: commutator word must use strictly later generators");
  }
  if (gen_names.empty()) {
    const char* def[] = {"x", "y", "z", "t", "w"};
    for (int i = 0; i < r; ++i) gen_names.push_back(def[i]);
  }

  // enumerate exponent vectors, ordered by (#generators involved, subset lex)
  std::vector<std::vector<int>> exps;
  std::vector<int> cur(r, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      exps.push_back(cur);
      return;
    }
    for (int e = 0; e < pc.rel_orders[i]; ++e) {
      cur[i] = e;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  std::stable_sort(exps.begin(), exps.end(), [](const auto& a, const auto& b) {
    int ca = 0, cb = 0;
    for (int v : a) ca += v > 0;
    for (int v : b) cb += v > 0;
    if (ca != cb) return ca < cb;
    std::vector<int> sa, sb;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) sa.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] > 0) sb.push_back(static_cast<int>(i));
    if (sa != sb) return sa < sb;
    return a < b;
  });

  int n = static_cast<int>(exps.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[exps[i]] = i;

  auto to_word = [&](const std::vector<int>& e) {
    std::vector<int> w;
    for (int i = 0; i < r; ++i)
      for (int t = 0; t < e[i]; ++t) w.push_back(i);
    return w;
  };
  auto to_exp = [&](const std::vector<int>& word) {
    std::vector<int> e(r, 0);
    int last = -1;
    for (int g : word) {
      if (g < last)
        throw std::logic_error("mk_from_pc_presentation: collection result not normal");
      last = g;
      e[g] += 1;
    }
    for (int i = 0; i < r; ++i)
      if (e[i] >= pc.rel_orders[i])
        throw std::logic_error("mk_from_pc_presentation: collection result not normal");
    return e;
  };

  auto mul = make_table(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> wa = to_word(exps[a]);
    for (int b = 0; b < n; ++b) {
      std::vector<int> w = wa;
      std::vector<int> wb = to_word(exps[b]);
      w.insert(w.end(), wb.begin(), wb.end());
      auto e = to_exp(collect(pc, std::move(w)));
      auto it = index_of.find(e);
      if (it == index_of.end())
        throw std::invalid_argument("mk_from_pc_presentation: inconsistent presentation");
      mul[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : exps) {
    std::string s;
    for (int i = 0; i < r; ++i)
      for (int t = 0; t < e[i]; ++t) s += gen_names[i];
    labels.push_back(s.empty() ? "1" : s);
  }
  return FiniteGroup::from_table(std::move(name), n, std::move(mul), std::move(labels));
}

FiniteGroup mk_small16(int id) {
  auto pc4 = [](std::vector<std::pair<int, int>> powers,
                std::vector<std::pair<std::pair<int, int>, int>> comms) {
    PcPresentation pc;
    pc.rel_orders.assign(4, 2);
    pc.power_words.assign(4, {});
    pc.comm_words.assign(4, std::vector<std::vector<int>>(4));
    for (auto [g, w] : powers) pc.power_words[g] = {w};
    for (auto [jk, w] : comms) pc.comm_words[jk.first][jk.second] = {w};
    return pc;
  };
  constexpr int x = 0, y = 1, z = 2, t = 3;
  switch (id) {
    case 2:  // C4 x C4: x^2 = z, y^2 = t
      return mk_from_pc_presentation(pc4({{x, z}, {y, t}}, {}), "small16:2");
    case 3:  // x^2 = t, [y,x] = z
      return mk_from_pc_presentation(pc4({{x, t}}, {{{y, x}, z}}), "small16:3");
    case 4:  // x^2 = t, y^2 = z, [y,x] = z
      return mk_from_pc_presentation(pc4({{x, t}, {y, z}}, {{{y, x}, z}}), "small16:4");
    case 5:
      return mk_two_generated_2group(TwoGenKind::AC, 4);
    case 6:  // x^2 = z, z^2 = t, [y,x] = t
      return mk_from_pc_presentation(pc4({{x, z}, {z, t}}, {{{y, x}, t}}), "small16:6");
    case 7:
      return mk_two_generated_2group(TwoGenKind::D, 4);
    case 8:
      return mk_two_generated_2group(TwoGenKind::SD, 4);
    case 9:
      return mk_two_generated_2group(TwoGenKind::Q, 4);
    case 10:  // C4 x C2 x C2: x^2 = t
      return mk_from_pc_presentation(pc4({{x, t}}, {}), "small16:10");
    case 11:  // C2 x D8: [y,x] = t
      return mk_from_pc_presentation(pc4({}, {{{y, x}, t}}), "small16:11");
    case 12:  // C2 x Q8: x^2 = y^2 = [y,x] = t
      return mk_from_pc_presentation(pc4({{x, t}, {y, t}}, {{{y, x}, t}}), "small16:12");
    case 13:  // central product D8 o C4: z^2 = [y,x] = t
      return mk_from_pc_presentation(pc4({{z, t}}, {{{y, x}, t}}), "small16:13");
    case 14:  // C2^4
      return mk_from_pc_presentation(pc4({}, {}), "small16:14");
    default:
      throw std::invalid_argument("mk_small16: id must be in 2..14");
  }
}

FiniteGroup mk_q8() {
  PcPresentation pc;
  pc.rel_orders.assign(3, 2);
  pc.power_words = {{2}, {2}, {}};  // x^2 = z, y^2 = z
  pc.comm_words.assign(3, std::vector<std::vector<int>>(3));
  pc.comm_words[1][0] = {2};  // [y,x] = z
  return mk_from_pc_presentation(pc, "q8");
}

}  // namespace cmkit
