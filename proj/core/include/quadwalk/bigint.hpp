#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadwalk {

// Unsigned big integer on 64-bit limbs, little-endian. Covers exactly what
// the exact dynamic programs need: addition, small-factor multiplication,
// comparison, decimal printing and a rounded double view.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(v);
  }

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& o);
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  BigUint& mul_small(std::uint64_t f);
  friend BigUint operator*(BigUint a, std::uint64_t f) { return a.mul_small(f); }

  // a += b * f, fused to avoid temporaries in DP inner loops
  void add_mul(const BigUint& b, std::uint64_t f);

  int compare(const BigUint& o) const;
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }

  static BigUint pow(std::uint64_t base, unsigned exp);

  double to_double() const;
  // value / 2^k exactly rounded to double, for probabilities num/den^n
  double to_double_shifted(long& exp2) const;

  std::string to_decimal() const;

  size_t limb_count() const { return limbs_.size(); }

private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

// num / den as a double, where both may exceed the double range
double big_ratio(const BigUint& num, const BigUint& den);

}  // namespace quadwalk
