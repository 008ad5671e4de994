#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cmkit {

enum class Side { left, right };

// Parity of a permutation as an element of F_2 (0 = even, 1 = odd).
enum class Parity : int { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline const char* to_string(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

// A permutation of {0..n-1}, stored as its image table.
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  // Cycles given as 0-based point lists; unmentioned points are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  std::span<const int> images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  bool operator==(const Perm&) const = default;

private:
  std::vector<int> img_;
};

// compose(f, g): x -> f(g(x)).
Perm compose(const Perm& f, const Perm& g);

// conjugate(f, s): s o f o s^-1, i.e. f rewritten along the relabeling s.
Perm conjugate(const Perm& f, const Perm& s);

// Multiset of cycle lengths (ascending, fixed points included).
std::vector<int> cycle_type(const Perm& f);

// Parity = number of even-length cycles mod 2.
Parity parity_by_cycles(const Perm& f);

// A strict total order of {0..n-1}, given by a rank bijection.
class TotalOrder {
public:
  explicit TotalOrder(std::vector<int> rank);
  static TotalOrder by_index(int degree);

  int degree() const { return static_cast<int>(rank_.size()); }
  int rank(int x) const { return rank_[x]; }
  int element_at_rank(int r) const { return pos_[r]; }

private:
  std::vector<int> rank_, pos_;
};

// |{(a,b): a < b and f(b) < f(a)}| under the given order.
long long inversion_count(const Perm& f, const TotalOrder& ord);
Parity parity_by_inversions(const Perm& f, const TotalOrder& ord);

// Text formats: cycle notation with 1-based points, e.g. "(1,7,8)(2,3)"
// (identity prints as "()"), or a comma-separated 0-based image list.
// parse_perm accepts either, keyed off the leading character.
Perm parse_perm(const std::string& text, int degree);
std::string to_cycle_string(const Perm& f);
std::string to_image_string(const Perm& f);

}  // namespace cmkit
