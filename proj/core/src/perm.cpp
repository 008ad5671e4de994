#include "cmkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cmkit {

namespace {

void check_bijection(const std::vector<int>& img, const char* what) {
  std::vector<bool> seen(img.size(), false);
  for (int v : img) {
    if (v < 0 || v >= static_cast<int>(img.size()) || seen[v])
      throw std::invalid_argument(std::string(what) + ": not a bijection");
    seen[v] = true;
  }
}

}  // namespace

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  check_bijection(img_, "Perm");
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= degree || used[a])
        throw std::invalid_argument("Perm::from_cycles: bad or repeated point");
      used[a] = true;
      img[a] = b;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(f.degree());
  for (int i = 0; i < f.degree(); ++i) img[i] = f(g(i));
  return Perm(std::move(img));
}

Perm conjugate(const Perm& f, const Perm& s) {
  return compose(compose(s, f), s.inverse());
}

std::vector<int> cycle_type(const Perm& f) {
  std::vector<bool> seen(f.degree(), false);
  std::vector<int> lengths;
  for (int i = 0; i < f.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = f(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Parity parity_by_cycles(const Perm& f) {
  int even_cycles = 0;
  for (int len : cycle_type(f))
    if (len % 2 == 0) ++even_cycles;
  return static_cast<Parity>(even_cycles & 1);
}

TotalOrder::TotalOrder(std::vector<int> rank) : rank_(std::move(rank)) {
  check_bijection(rank_, "TotalOrder");
  pos_.resize(rank_.size());
  for (int x = 0; x < degree(); ++x) pos_[rank_[x]] = x;
}

TotalOrder TotalOrder::by_index(int degree) {
  std::vector<int> rank(degree);
  for (int i = 0; i < degree; ++i) rank[i] = i;
  return TotalOrder(std::move(rank));
}

long long inversion_count(const Perm& f, const TotalOrder& ord) {
  if (f.degree() != ord.degree())
    throw std::invalid_argument("inversion_count: degree mismatch");
  int n = f.degree();
  std::vector<int> seq(n);
  for (int r = 0; r < n; ++r) seq[r] = ord.rank(f(ord.element_at_rank(r)));
  long long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (seq[b] < seq[a]) ++count;
  return count;
}

Parity parity_by_inversions(const Perm& f, const TotalOrder& ord) {
  return static_cast<Parity>(inversion_count(f, ord) & 1);
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Perm parse_perm(const std::string& text, int degree) {
  std::string s = strip(text);
  if (s.empty() || s == "()") return Perm::identity(degree);
  if (s[0] == '(') {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != '(') throw std::invalid_argument("parse_perm: expected '('");
      std::size_t close = s.find(')', i);
      if (close == std::string::npos)
        throw std::invalid_argument("parse_perm: unbalanced cycle");
      std::string body = s.substr(i + 1, close - i - 1);
      if (!body.empty()) {
        std::vector<int> cyc;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          int v = std::stoi(tok);
          if (v < 1 || v > degree)
            throw std::invalid_argument("parse_perm: point out of range");
          cyc.push_back(v - 1);  // cycles are 1-based on the wire
        }
        cycles.push_back(std::move(cyc));
      }
      i = close + 1;
    }
    return Perm::from_cycles(degree, cycles);
  }
  // zero-based image list
  std::vector<int> img;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) img.push_back(std::stoi(tok));
  if (static_cast<int>(img.size()) != degree)
    throw std::invalid_argument("parse_perm: image list length mismatch");
  return Perm(std::move(img));
}

std::string to_cycle_string(const Perm& f) {
  std::vector<bool> seen(f.degree(), false);
  std::string out;
  for (int i = 0; i < f.degree(); ++i) {
    if (seen[i] || f(i) == i) {
      seen[i] = true;
      continue;
    }
    out.push_back('(');
    bool first = true;
    for (int j = i; !seen[j]; j = f(j)) {
      seen[j] = true;
      if (!first) out.push_back(',');
      out += std::to_string(j + 1);
      first = false;
    }
    out.push_back(')');
  }
  if (out.empty()) out = "()";
  return out;
}

std::string to_image_string(const Perm& f) {
  std::string out;
  for (int i = 0; i < f.degree(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(f(i));
  }
  return out;
}

}  // namespace cmkit
