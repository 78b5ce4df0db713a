#include "quadwalk/classify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "quadwalk/errors.hpp"

namespace quadwalk {

double angle(const Moments& m) {
  if (!(m.m_xx > 0) || !(m.m_yy > 0))
    fail(ErrorCode::CorrelationOutOfRange, "second moments must be positive");
  double arg = -m.m_xy / std::sqrt(m.m_xx * m.m_yy);
  if (std::abs(arg) > 1.0 + 1e-12)
    fail(ErrorCode::CorrelationOutOfRange, "correlation " + std::to_string(-arg));
  arg = std::clamp(arg, -1.0, 1.0);
  return std::acos(arg);
}

AngleReport classify(double theta, int denominator_cap) {
  constexpr double kTol = 1e-9;
  AngleReport rep;
  rep.theta = theta;
  rep.pi_over_theta = std::numbers::pi / theta;
  rep.denominator_cap = denominator_cap;

  // theta/pi in (0,1): find a convergent q/p with p <= cap matching to 1e-9.
  // Any rational within 1e-9 < 1/(2 cap^2) of the target is necessarily a
  // convergent, so scanning convergents is exhaustive here.
  const double target = theta / std::numbers::pi;
  std::int64_t h_prev = 0, k_prev = 1;  // numerator/denominator recurrences
  std::int64_t h = 1, k = 0;
  double frac = target;
  bool found = false;
  std::int64_t best_num = 0, best_den = 1;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_floor = std::floor(frac);
    const auto a = static_cast<std::int64_t>(a_floor);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > denominator_cap) break;
    h_prev = h; k_prev = k;
    h = h_next; k = k_next;
    if (std::abs(target - static_cast<double>(h) / static_cast<double>(k)) <= kTol) {
      found = true;
      best_num = h;
      best_den = k;
      break;
    }
    const double rem = frac - a_floor;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }

  if (!found) {
    rep.rationality = Rationality::PresumedIrrational;
    rep.group_finite = false;
    rep.group_order = 0;
    rep.nature = Nature::NonAlgebraic;
    return rep;
  }

  // theta/pi = best_num/best_den in lowest terms => pi/theta = den/num
  const std::int64_t g = std::gcd(best_num, best_den);
  const std::int64_t num = best_num / g;
  const std::int64_t den = best_den / g;
  rep.p = den;  // pi/theta = p/q
  rep.q = num;
  rep.group_finite = true;
  // order = 2 * min{ m >= 1 : m * theta/pi integral } = 2 * den
  rep.group_order = 2 * den;
  if (num == 1) {
    rep.rationality = Rationality::Integer;
    rep.nature = Nature::Rational;
  } else {
    rep.rationality = Rationality::Rational;
    rep.nature = Nature::AlgebraicNonRational;
  }
  return rep;
}

std::string to_string(Rationality r) {
  switch (r) {
    case Rationality::Integer: return "integer";
    case Rationality::Rational: return "rational";
    case Rationality::PresumedIrrational: return "presumed_irrational";
  }
  return "?";
}

std::string to_string(Nature n) {
  switch (n) {
    case Nature::Rational: return "rational";
    case Nature::AlgebraicNonRational: return "algebraic_nonrational";
    case Nature::NonAlgebraic: return "nonalgebraic";
  }
  return "?";
}

}  // namespace quadwalk
