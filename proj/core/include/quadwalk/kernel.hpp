#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "quadwalk/poly.hpp"
#include "quadwalk/walk_model.hpp"

namespace quadwalk {

// One orientation of the kernel: the three section polynomials of
//   L = section_a(t) s^2 + section_b(t) s + section_c(t),
// their discriminant, and its branch points. Under zero drift the
// discriminant has a double root at 1; the two remaining roots are obtained
// from the exactly deflated residual quadratic.
struct KernelSide {
  Poly a, b, c;    // degree <= 2 sections
  Poly delta;      // b^2 - 4ac, degree <= 4
  Poly residual;   // delta / (t-1)^2, degree <= 2

  double r1 = 0;        // branch point inside the closed unit disc
  double r4 = 0;        // branch point outside (ignored when infinite)
  bool r4_infinite = false;
  bool degenerate = false;  // r1 == r4 (residual is a perfect square)

  Complex section_value(const Complex& t, const Poly& p) const { return p(t); }
};

// Everything algebraic attached to the kernel of a walk: both orientations,
// branch evaluation and the group generators.
struct KernelData {
  WalkModel model;
  KernelSide x;  // sections in x, roots x1..x4 (x2 = x3 = 1)
  KernelSide y;  // sections in y, roots y1..y4

  double x1() const { return x.r1; }
  double x4() const { return x.r4; }
  double y1() const { return y.r1; }
  double y4() const { return y.r4; }
};

KernelData build_kernel(const WalkModel& model);

// Kernel evaluated through the x-sections: a(x) y^2 + b(x) y + c(x).
Complex kernel_L(const KernelData& kd, const Complex& x, const Complex& y);
// Same value through the y-sections; the two must agree pointwise.
Complex kernel_L_transposed_form(const KernelData& kd, const Complex& x, const Complex& y);

// Q(x,y) = x^2 y^2 L(1/x,1/y) = xy (E(x,y) - 1) with E the step generating
// polynomial; the zero set Q = 0 carries the group of the walk.
Complex kernel_Q(const WalkModel& model, const Complex& x, const Complex& y);

// One of the two solutions of L(x,y) = 0 viewed as a quadratic in the first
// variable; `at_infinity` marks the vanishing leading section.
struct BranchValue {
  Complex value{};
  bool at_infinity = false;
};

// Solutions x of L(x,y) = 0, ordered so |X0| <= |X1|; on the conjugate cut
// the tie breaks towards negative imaginary part first.
BranchValue branch_X(const KernelData& kd, const Complex& y, int which);
// Solutions y of L(x,y) = 0.
BranchValue branch_Y(const KernelData& kd, const Complex& x, int which);

// Samples of the closed curve X([y1,1]) (first branch forward, second branch
// backward); points at infinity are dropped.
std::vector<Complex> boundary_curve(const KernelData& kd, int n_samples);

// Group generators acting on the zero set of Q.
std::pair<Complex, Complex> xi(const WalkModel& model, const Complex& x, const Complex& y);
std::pair<Complex, Complex> eta(const WalkModel& model, const Complex& x, const Complex& y);

}  // namespace quadwalk
