#include "cmkit/mappings.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmkit {

namespace {

void require_degree(const FiniteGroup& G, const Perm& f, const char* what) {
  if (f.degree() != G.order())
    throw std::invalid_argument(std::string(what) + ": degree mismatch");
}

bool products_bijective(const FiniteGroup& G, const Perm& f, bool invert_first) {
  std::vector<bool> seen(G.order(), false);
  for (int g = 0; g < G.order(); ++g) {
    int p = G.mul(invert_first ? G.inv(g) : g, f(g));
    if (seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

}  // namespace

bool is_complete_mapping(const FiniteGroup& G, const Perm& f) {
  require_degree(G, f, "is_complete_mapping");
  return products_bijective(G, f, false);
}

bool is_orthomorphism(const FiniteGroup& G, const Perm& f) {
  require_degree(G, f, "is_orthomorphism");
  return products_bijective(G, f, true);
}

Perm associated_orthomorphism(const FiniteGroup& G, const Perm& f) {
  if (!is_complete_mapping(G, f))
    throw std::invalid_argument("associated_orthomorphism: not a complete mapping");
  std::vector<int> img(G.order());
  for (int g = 0; g < G.order(); ++g) img[g] = G.mul(g, f(g));
  return Perm(std::move(img));
}

Perm compose_with_inversion(const FiniteGroup& G, const Perm& f, Side side) {
  require_degree(G, f, "compose_with_inversion");
  std::vector<int> img(G.order());
  if (side == Side::right) {
    for (int g = 0; g < G.order(); ++g) img[g] = f(G.inv(g));
  } else {
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        if (G.mul(a, b) != G.mul(b, a))
          throw std::invalid_argument("compose_with_inversion: left form needs abelian G");
    for (int g = 0; g < G.order(); ++g) img[g] = G.inv(f(g));
  }
  return Perm(std::move(img));
}

namespace {

void require_covering(const FiniteGroup& G, std::span<const int> seq, const char* what) {
  if (static_cast<int>(seq.size()) != G.order())
    throw std::invalid_argument(std::string(what) + ": sequence length mismatch");
  std::vector<bool> seen(G.order(), false);
  for (int g : seq) {
    if (g < 0 || g >= G.order() || seen[g])
      throw std::invalid_argument(std::string(what) + ": sequence is not a permutation of G");
    seen[g] = true;
  }
}

}  // namespace

bool is_harmonious_ordering(const FiniteGroup& G, std::span<const int> seq) {
  require_covering(G, seq, "is_harmonious_ordering");
  int n = G.order();
  std::vector<bool> seen(n, false);
  bool distinct = true;
  for (int i = 0; i < n; ++i) {
    int p = G.mul(seq[i], seq[(i + 1) % n]);
    if (seen[p]) distinct = false;
    seen[p] = true;
  }
  // the equivalent complete-mapping form must agree
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[seq[i]] = seq[(i + 1) % n];
  bool as_cm = is_complete_mapping(G, Perm(std::move(img)));
  if (as_cm != distinct)
    throw std::logic_error("is_harmonious_ordering: definitional routes disagree");
  return distinct;
}

bool is_r_sequencing(const FiniteGroup& G, std::span<const int> seq) {
  require_covering(G, seq, "is_r_sequencing");
  if (seq[0] != FiniteGroup::identity)
    throw std::invalid_argument("is_r_sequencing: sequence must start at the identity");
  int n = G.order();
  std::vector<int> partial(n);
  int b = FiniteGroup::identity;
  for (int i = 0; i < n; ++i) {
    b = G.mul(b, seq[i]);
    partial[i] = b;
  }
  std::vector<bool> seen(n, false);
  bool distinct = true;
  for (int i = 0; i + 1 < n; ++i) {
    if (seen[partial[i]]) distinct = false;
    seen[partial[i]] = true;
  }
  bool ok = distinct && partial[n - 1] == FiniteGroup::identity;
  if (distinct) {
    // cross-check: (b_1,...,b_(n-1)) as an (n-1)-cycle is an orthomorphism
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int i = 0; i + 1 < n; ++i) img[partial[i]] = partial[(i + 1) % (n - 1)];
    bool ortho = is_orthomorphism(G, Perm(std::move(img)));
    if (ortho != ok)
      throw std::logic_error("is_r_sequencing: definitional routes disagree");
  }
  return ok;
}

Perm splice(const FiniteGroup& G, const Subgroup& H, const Perm& f, const Perm& h) {
  require_degree(G, f, "splice");
  if (static_cast<int>(H.members.size()) != h.degree())
    throw std::invalid_argument("splice: h degree must equal |H|");
  if (!is_complete_mapping(G, f))
    throw std::invalid_argument("splice: f is not a complete mapping");
  for (int m : H.members)
    if (!subgroup_contains(H, f(m)))
      throw std::invalid_argument("splice: f does not stabilize H");
  FiniteGroup Hgrp = subgroup_as_group(G, H);
  if (!is_complete_mapping(Hgrp, h))
    throw std::invalid_argument("splice: h is not a complete mapping of H");
  std::vector<int> img(f.images().begin(), f.images().end());
  for (int i = 0; i < h.degree(); ++i) img[H.members[i]] = H.members[h(i)];
  Perm out(std::move(img));
  if (!is_complete_mapping(G, out))
    throw std::logic_error("splice: result failed verification");
  return out;
}

Perm feistel_round(std::span<const int> F, int n_half) {
  if (n_half < 1 || n_half > 15)
    throw std::invalid_argument("feistel_round: half width out of range");
  int half = 1 << n_half;
  if (static_cast<int>(F.size()) != half)
    throw std::invalid_argument("feistel_round: image table size mismatch");
  for (int v : F)
    if (v < 0 || v >= half)
      throw std::invalid_argument("feistel_round: image out of range");
  std::vector<int> img(static_cast<std::size_t>(half) * half);
  for (int vl = 0; vl < half; ++vl)
    for (int vr = 0; vr < half; ++vr)
      img[vl * half + vr] = vr * half + (vl ^ F[vr]);
  return Perm(std::move(img));
}

Perm feistel_round_inverse(std::span<const int> F, int n_half) {
  int half = 1 << n_half;
  if (static_cast<int>(F.size()) != half)
    throw std::invalid_argument("feistel_round_inverse: image table size mismatch");
  std::vector<int> img(static_cast<std::size_t>(half) * half);
  for (int wl = 0; wl < half; ++wl)
    for (int wr = 0; wr < half; ++wr)
      img[wl * half + wr] = (wr ^ F[wl]) * half + wl;
  return Perm(std::move(img));
}

bool gost_fs_injective(const Perm& S) {
  int half = S.degree();
  if ((half & (half - 1)) != 0 || half < 2)
    throw std::invalid_argument("gost_fs_injective: degree must be a power of two");
  std::vector<bool> seen(half, false);
  for (int v = 0; v < half; ++v) {
    int u = (v + 1) % half;  // bit string as a number, +1 mod 2^w
    int fv = v ^ u ^ S(u);
    if (seen[fv]) return false;
    seen[fv] = true;
  }
  return true;
}

}  // namespace cmkit
