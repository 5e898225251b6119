#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian.
// Only the handful of operations the bound/counting formulas need.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    if (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  double to_double() const {
    double v = 0.0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * 4294967296.0 + *it;
    return v;
  }

  void mul_small(std::uint32_t m) {
    if (m == 0) {
      limbs_.clear();
      return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  // Divides in place, returns the remainder.
  std::uint32_t divmod_small(std::uint32_t d) {
    if (d == 0) throw std::domain_error("BigUint division by zero");
    std::uint64_t rem = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
      std::uint64_t cur = (rem << 32) | *it;
      *it = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  void add_small(std::uint64_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry != 0; ++i) {
      if (i == limbs_.size()) limbs_.push_back(0);
      std::uint64_t cur = limbs_[i] + (carry & 0xffffffffu);
      limbs_[i] = static_cast<std::uint32_t>(cur);
      carry = (carry >> 32) + (cur >> 32);
    }
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) out.push_back(static_cast<char>('0' + tmp.divmod_small(10)));
    return std::string(out.rbegin(), out.rend());
  }

  // Binomial coefficient C(n, k), exact. Interleaves multiply and divide so
  // every intermediate value is itself a binomial coefficient.
  static BigUint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint acc(1);
    for (std::uint64_t i = 0; i < k; ++i) {
      std::uint64_t factor = n - i;
      if (factor >> 32) throw std::overflow_error("binomial: argument exceeds 32-bit factor range");
      acc.mul_small(static_cast<std::uint32_t>(factor));
      if (std::uint32_t r = acc.divmod_small(static_cast<std::uint32_t>(i + 1)); r != 0)
        throw std::logic_error("binomial: non-exact intermediate division");
    }
    return acc;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace lrc
