#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cmkit {

// Unsigned arbitrary-precision integer (little-endian base-2^32 limbs).
// Covers exactly what exact group-order bookkeeping needs: products of
// small factors, factorials, comparison and decimal printing.
class BigUint {
public:
  BigUint() : limbs_{0} {}
  BigUint(std::uint64_t v);

  static BigUint factorial(unsigned n);

  BigUint& mul_u32(std::uint32_t m);
  BigUint& operator*=(const BigUint& rhs);
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  std::strong_ordering operator<=>(const BigUint& o) const;

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // valid only when fits_u64()
  double to_double() const;
  std::string to_string() const;  // decimal

private:
  std::vector<std::uint32_t> limbs_;  // no leading zero limbs except the value 0
  void trim();
};

}  // namespace cmkit
