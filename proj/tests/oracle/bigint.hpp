#pragma once

// Minimal arbitrary-precision unsigned integer for test oracles: enough to
// form g^e exactly and reduce it modulo a small m. Deliberately independent
// of the square-and-multiply path under test.

#include <cstdint>
#include <vector>

namespace testoracle {

class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v) {
    limbs_.push_back(std::uint32_t(v));
    if (v >> 32) limbs_.push_back(std::uint32_t(v >> 32));
  }

  void mul_small(std::uint64_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t t = std::uint64_t(limb) * m + carry;
      limb = std::uint32_t(t);
      carry = t >> 32;
    }
    while (carry) {
      limbs_.push_back(std::uint32_t(carry));
      carry >>= 32;
    }
  }

  // Remainder modulo m < 2^31 by schoolbook long division, top limb first.
  std::uint64_t mod_small(std::uint64_t m) const {
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;)
      rem = ((rem << 32) | limbs_[i]) % m;
    return rem;
  }

 private:
  std::vector<std::uint32_t> limbs_;
};

// g^e mod m computed through the full product, never through residues.
inline std::uint64_t exact_pow_mod(std::uint64_t g, std::uint64_t e, std::uint64_t m) {
  BigUint acc(1);
  for (std::uint64_t i = 0; i < e; ++i) acc.mul_small(g);
  return acc.mod_small(m);
}

}  // namespace testoracle
