#include "cmkit/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmkit {

BigUint::BigUint(std::uint64_t v) {
  limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::factorial(unsigned n) {
  BigUint r(1);
  for (unsigned i = 2; i <= n; ++i) r.mul_u32(i);
  return r;
}

BigUint& BigUint::mul_u32(std::uint32_t m) {
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  trim();
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                          out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() <=> o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
  std::uint64_t v = limbs_[0];
  if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return v;
}

double BigUint::to_double() const {
  double r = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
  return r;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  // repeated divmod by 1e9
  std::vector<std::uint32_t> work(limbs_);
  std::string out;
  while (!(work.size() == 1 && work[0] == 0)) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (work.size() > 1 && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    bool last = (work.size() == 1 && work[0] == 0);
    if (!last) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

}  // namespace cmkit
