#pragma once

#include <cstdint>
#include <string>

#include "quadwalk/walk_model.hpp"

namespace quadwalk {

// Opening angle of the boundary curve at 1:
//   theta = arccos( -m_xy / sqrt(m_xx * m_yy) ), in (0, pi).
// It controls the pole exponent pi/theta of the conformal gluing map and the
// exit-time tail exponent pi/(2 theta).
double angle(const Moments& m);

enum class Rationality { Integer, Rational, PresumedIrrational };
enum class Nature { Rational, AlgebraicNonRational, NonAlgebraic };

// Numerical classification of pi/theta: integrality/rationality decide the
// nature of the generating function and the order of the group of the walk.
struct AngleReport {
  double theta = 0;
  double pi_over_theta = 0;
  Rationality rationality = Rationality::PresumedIrrational;
  // For Integer: pi/theta = p. For Rational: pi/theta = p/q in lowest terms.
  std::int64_t p = 0;
  std::int64_t q = 1;
  int denominator_cap = 0;   // search bound used for the rationality decision
  bool group_finite = false;
  std::int64_t group_order = 0;  // valid when group_finite
  Nature nature = Nature::NonAlgebraic;
};

// Continued-fraction search for theta/pi = q/p with denominator <= cap,
// accepted at tolerance 1e-9. Irrationality is undecidable numerically, so a
// miss is reported as PresumedIrrational together with the cap.
AngleReport classify(double theta, int denominator_cap = 100);

std::string to_string(Rationality r);
std::string to_string(Nature n);

}  // namespace quadwalk
