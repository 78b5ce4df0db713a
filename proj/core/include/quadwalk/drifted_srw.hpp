#pragma once

#include <vector>

#include "quadwalk/walk_model.hpp"

namespace quadwalk {

// Nearest-neighbour walk with axial steps only and non-zero drift; the one
// family with closed-form harmonic functions, parametrized by gamma in
// [0, pi/2] (one minimal harmonic function per direction).
struct DriftedSRW {
  double p10 = 0, pm10 = 0, p01 = 0, p0m1 = 0;

  WalkModel to_walk_model() const;
  void validate() const;  // all four positive, sum one, drift non-zero
};

// Exponential-base constants of the gamma family:
//   f_gamma(i,j) = (s+^i - s-^i)(st+^j - st-^j)       gamma in (0, pi/2)
//   f_gamma(i,j) = (s+^i - s-^i) j st+^j              gamma = 0
//   f_gamma(i,j) = i s+^i (st+^j - st-^j)             gamma = pi/2
// with s+- = r +- sqrt(r^2 - pm10/p10) and st+- the transposed analogue.
//
// The published transposed radius formula divides by p10 where the x<->y
// symmetry calls for p01; both variants are computed, the harmonicity
// residual adjudicates, and the kernel condition
//   p10 s + pm10/s + p01 t + p0m1/t = 1
// supplies the corrected radius when the published one fails.
struct GammaFamily {
  double gamma = 0;
  enum class Kind { AtZero, Interior, AtHalfPi } kind = Kind::Interior;

  double r = 0, rt = 0;          // operative radii (rt possibly corrected)
  double sp = 0, sm = 0;         // s+ and s-
  double stp = 0, stm = 0;       // transposed pair

  bool adjudicated = false;      // published rt failed, corrected rt in use
  double rt_published = 0;
  double residual_published = 0; // harmonicity residual of the published form
  double residual = 0;           // residual of the operative constants
};

GammaFamily gamma_family(const DriftedSRW& model, double gamma);

// Unnormalized closed-form value; zero on the axes.
double f_gamma(const GammaFamily& family, int i0, int j0);

// Errors e_k = max over the box of |f_gamma(i,j)/f_gamma(1,1) - i*j| for the
// drift sequence p10 = p01 = 1/4 + eps/2, pm10 = p0m1 = 1/4 - eps/2; the
// zero-drift limit of the family is the product harmonic function i*j.
std::vector<double> convergence_check(const std::vector<double>& drifts, double gamma,
                                      int box);

}  // namespace quadwalk
