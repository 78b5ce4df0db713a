#include "quadwalk/bigint.hpp"

#include <algorithm>
#include <cmath>

namespace quadwalk {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o) {
  const size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  u64 carry = 0;
  for (size_t k = 0; k < n; ++k) {
    u128 s = static_cast<u128>(limbs_[k]) + carry;
    if (k < o.limbs_.size()) s += o.limbs_[k];
    limbs_[k] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::mul_small(u64 f) {
  if (f == 0 || limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  u64 carry = 0;
  for (u64& limb : limbs_) {
    const u128 p = static_cast<u128>(limb) * f + carry;
    limb = static_cast<u64>(p);
    carry = static_cast<u64>(p >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

void BigUint::add_mul(const BigUint& b, u64 f) {
  if (f == 0 || b.limbs_.empty()) return;
  const size_t n = std::max(limbs_.size(), b.limbs_.size());
  limbs_.resize(n, 0);
  u64 carry = 0;
  for (size_t k = 0; k < n; ++k) {
    u128 s = static_cast<u128>(limbs_[k]) + carry;
    if (k < b.limbs_.size()) s += static_cast<u128>(b.limbs_[k]) * f;
    limbs_[k] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  while (carry) {
    limbs_.push_back(static_cast<u64>(carry));
    carry = 0;
  }
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t k = limbs_.size(); k-- > 0;) {
    if (limbs_[k] != o.limbs_[k]) return limbs_[k] < o.limbs_[k] ? -1 : 1;
  }
  return 0;
}

BigUint BigUint::pow(u64 base, unsigned exp) {
  BigUint r(1);
  for (unsigned k = 0; k < exp; ++k) r.mul_small(base);
  return r;
}

double BigUint::to_double() const {
  double v = 0;
  for (size_t k = limbs_.size(); k-- > 0;) v = v * 18446744073709551616.0 + static_cast<double>(limbs_[k]);
  return v;
}

double BigUint::to_double_shifted(long& exp2) const {
  // top 128 bits as a double plus a binary exponent
  if (limbs_.empty()) {
    exp2 = 0;
    return 0.0;
  }
  const size_t top = limbs_.size() - 1;
  double v = static_cast<double>(limbs_[top]);
  if (top >= 1) v = v * 18446744073709551616.0 + static_cast<double>(limbs_[top - 1]);
  exp2 = static_cast<long>((top >= 1 ? top - 1 : 0) * 64);
  return v;
}

std::string BigUint::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::vector<u64> work = limbs_;
  std::string out;
  constexpr u64 kChunk = 1000000000000000000ull;  // 10^18
  while (!work.empty()) {
    u128 rem = 0;
    for (size_t k = work.size(); k-- > 0;) {
      const u128 cur = (rem << 64) | work[k];
      work[k] = static_cast<u64>(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string digits = std::to_string(static_cast<u64>(rem));
    if (!work.empty()) digits.insert(0, 18 - digits.size(), '0');
    out.insert(0, digits);
  }
  return out;
}

double big_ratio(const BigUint& num, const BigUint& den) {
  long en = 0, ed = 0;
  const double vn = num.to_double_shifted(en);
  const double vd = den.to_double_shifted(ed);
  if (vd == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (vn / vd) * std::ldexp(1.0, static_cast<int>(en - ed));
}

}  // namespace quadwalk
