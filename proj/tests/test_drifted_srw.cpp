#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quadwalk/drifted_srw.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/oracle.hpp"

using namespace quadwalk;

namespace {

const DriftedSRW kSymmetric{0.3, 0.2, 0.3, 0.2};    // p10 = p01: published form holds
const DriftedSRW kAsymmetric{0.3, 0.15, 0.35, 0.2}; // p10 != p01: exposes the misprint

double kernel_condition(const DriftedSRW& m, double s, double t) {
  return m.p10 * s + m.pm10 / s + m.p01 * t + m.p0m1 / t;
}

}  // namespace

TEST_CASE("radius at gamma = pi/4 matches the rationalized limit") {
  const GammaFamily fam = gamma_family(kSymmetric, std::numbers::pi / 4);
  const double expected =
      (1.0 - 4.0 * kSymmetric.p0m1 * kSymmetric.p01 + 4.0 * kSymmetric.pm10 * kSymmetric.p10) /
      (4.0 * kSymmetric.p10);
  CHECK(fam.r == doctest::Approx(expected).epsilon(1e-12));
  CHECK(fam.r == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(fam.sp == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fam.sm == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("product identities of the exponential bases") {
  for (double gamma : {0.0, 0.2, std::numbers::pi / 4, 1.0, std::numbers::pi / 2}) {
    const GammaFamily fam = gamma_family(kSymmetric, gamma);
    CHECK(fam.sp * fam.sm ==
          doctest::Approx(kSymmetric.pm10 / kSymmetric.p10).epsilon(1e-12));
    CHECK(fam.stp * fam.stm ==
          doctest::Approx(kSymmetric.p0m1 / kSymmetric.p01).epsilon(1e-12));
    CHECK(fam.sp >= fam.sm);
    CHECK(fam.sm > 0);
  }
}

TEST_CASE("the symmetric model needs no correction and is harmonic to 1e-10") {
  const WalkModel walk = kSymmetric.to_walk_model();
  for (int k = 0; k < 20; ++k) {
    const double gamma = k * (std::numbers::pi / 2) / 19.0;
    const GammaFamily fam = gamma_family(kSymmetric, gamma);
    CHECK(!fam.adjudicated);
    const ResidualReport rep = harmonicity_residual(
        [&fam](int i, int j) { return f_gamma(fam, i, j); }, 30, walk);
    CHECK(rep.max_relative_residual <= 1e-10);
    CHECK(rep.positivity_ok);
  }
}

TEST_CASE("the asymmetric model triggers the misprint adjudication") {
  const WalkModel walk = kAsymmetric.to_walk_model();
  for (double gamma : {0.0, 0.4, std::numbers::pi / 4, 1.2, std::numbers::pi / 2}) {
    const GammaFamily fam = gamma_family(kAsymmetric, gamma);
    CHECK(fam.adjudicated);
    CHECK(fam.residual_published > 1e-10);
    CHECK(fam.residual <= 1e-10);
    // corrected radius comes from the kernel condition 2 p10 r + 2 p01 rt = 1
    CHECK(fam.rt ==
          doctest::Approx((1.0 - 2.0 * kAsymmetric.p10 * fam.r) / (2.0 * kAsymmetric.p01))
              .epsilon(1e-12));
    CHECK(fam.rt != doctest::Approx(fam.rt_published).epsilon(1e-6));
    // all four base pairs sit on the kernel
    CHECK(kernel_condition(kAsymmetric, fam.sp, fam.stp) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(kernel_condition(kAsymmetric, fam.sm, fam.stm) == doctest::Approx(1.0).epsilon(1e-10));
    const ResidualReport rep = harmonicity_residual(
        [&fam](int i, int j) { return f_gamma(fam, i, j); }, 30, walk);
    CHECK(rep.max_relative_residual <= 1e-10);
  }
}

TEST_CASE("closed form vanishes on the axes and factors at (1,1)") {
  const GammaFamily fam = gamma_family(kSymmetric, 0.9);
  CHECK(f_gamma(fam, 0, 5) == 0.0);
  CHECK(f_gamma(fam, 5, 0) == 0.0);
  CHECK(f_gamma(fam, 1, 1) ==
        doctest::Approx((fam.sp - fam.sm) * (fam.stp - fam.stm)).epsilon(1e-12));
}

TEST_CASE("endpoint families use the degenerate factor forms") {
  const GammaFamily zero = gamma_family(kSymmetric, 0.0);
  CHECK(zero.kind == GammaFamily::Kind::AtZero);
  CHECK(zero.stp == doctest::Approx(zero.stm).epsilon(1e-10));
  CHECK(f_gamma(zero, 2, 3) ==
        doctest::Approx((zero.sp * zero.sp - zero.sm * zero.sm) * 3.0 *
                        std::pow(zero.stp, 3)));

  const GammaFamily half = gamma_family(kSymmetric, std::numbers::pi / 2);
  CHECK(half.kind == GammaFamily::Kind::AtHalfPi);
  CHECK(half.sp == doctest::Approx(half.sm).epsilon(1e-10));
  CHECK(half.sp == doctest::Approx(std::sqrt(kSymmetric.pm10 / kSymmetric.p10)).epsilon(1e-12));
}

TEST_CASE("gamma outside [0, pi/2] and degenerate models are rejected") {
  CHECK_THROWS_AS(gamma_family(kSymmetric, -0.1), Error);
  CHECK_THROWS_AS(gamma_family(kSymmetric, 2.0), Error);
  DriftedSRW zero_drift{0.25, 0.25, 0.25, 0.25};
  try {
    zero_drift.validate();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonZeroDrift);
  }
  DriftedSRW missing{0.5, 0.5, 0.0, 0.0};
  CHECK_THROWS_AS(missing.validate(), Error);
}

TEST_CASE("convergence towards the product form as the drift vanishes") {
  const std::vector<double> drifts{0.1, 0.05, 0.025};
  const std::vector<double> errors =
      convergence_check(drifts, std::numbers::pi / 4, 10);
  REQUIRE(errors.size() == 3);
  CHECK(errors[0] > errors[1]);
  CHECK(errors[1] > errors[2]);

  // independent oracle: at gamma = pi/4 the family is (1-a^i)(1-a^j) with
  // a = (1-2eps)/(1+2eps), normalized by (1-a)^2
  for (size_t k = 0; k < drifts.size(); ++k) {
    const double a = (1.0 - 2.0 * drifts[k]) / (1.0 + 2.0 * drifts[k]);
    double expected = 0;
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j) {
        const double v = (1.0 - std::pow(a, i)) * (1.0 - std::pow(a, j)) /
                         ((1.0 - a) * (1.0 - a));
        expected = std::max(expected, std::abs(v - static_cast<double>(i) * j));
      }
    CHECK(errors[k] == doctest::Approx(expected).epsilon(1e-9));
  }

  CHECK(convergence_check({0.1}, std::numbers::pi / 4, 1)[0] == doctest::Approx(0.0));
  CHECK_THROWS_AS(convergence_check({0.0}, std::numbers::pi / 4, 5), Error);
}
