#include <doctest.h>

#include <cmath>

#include "quadwalk/bigint.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/harmonic.hpp"
#include "quadwalk/oracle.hpp"

using namespace quadwalk;

TEST_CASE("big integers: arithmetic, comparison, decimal printing") {
  BigUint a(0xffffffffffffffffull);
  a += BigUint(1);
  CHECK(a.limb_count() == 2);
  CHECK(a.to_decimal() == "18446744073709551616");  // 2^64

  // 2^130 crosses two limb boundaries
  CHECK(BigUint::pow(2, 130).to_decimal() == "1361129467683753853853498429727072845824");
  CHECK(BigUint::pow(10, 19).to_decimal() == "10000000000000000000");

  BigUint b(7);
  b.mul_small(1000000007ull);
  CHECK(b.to_decimal() == "7000000049");

  BigUint c;
  c.add_mul(BigUint(3), 5);
  CHECK(c == BigUint(15));
  CHECK(BigUint(3) < BigUint(4));
  CHECK(big_ratio(BigUint(3), BigUint(8)) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(big_ratio(BigUint::pow(2, 200), BigUint::pow(2, 201)) ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("harmonicity residual: exact product form versus a broken candidate") {
  const WalkModel srw = catalog("srw");
  // 1/4 [(i+1)j + (i-1)j + i(j+1) + i(j-1)] = ij exactly
  const ResidualReport good = harmonicity_residual(
      [](int i, int j) { return static_cast<double>(i) * j; }, 30, srw);
  CHECK(good.max_relative_residual <= 1e-15);
  CHECK(good.positivity_ok);
  CHECK(good.boundary_zero_ok);

  // f = i + j fails next to the boundary: at (1,1) the neighbour sum is 1.5
  const ResidualReport bad = harmonicity_residual(
      [](int i, int j) { return static_cast<double>(i + j); }, 30, srw);
  CHECK(bad.max_relative_residual >= 0.2499);
  CHECK(bad.argmax.first <= 2);
  CHECK(bad.argmax.second <= 2);
}

TEST_CASE("exit-time dynamic program: exact anchors for srw") {
  const WalkModel srw = catalog("srw");
  const TailFit fit = exit_tail_dp(srw, {1, 1}, 16);
  // one-step enumeration: only up/right survive
  CHECK(fit.p(1) == doctest::Approx(0.5).epsilon(1e-15));
  // two-step enumeration over the 16 paths
  CHECK(fit.p(2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(fit.conservation_drift <= 1e-12);
  for (int n = 1; n <= 16; ++n) CHECK(fit.p(n) <= fit.p(n - 1) + 1e-15);

  const TailFit exact = exit_tail_dp(srw, {1, 1}, 16, /*rational=*/true);
  CHECK(exact.exact);
  CHECK(exact.exact_equals(1, 1, 2));
  CHECK(exact.exact_equals(2, 3, 8));
  CHECK(!exact.exact_equals(2, 1, 2));
  CHECK(exact.conservation_drift == 0.0);
  for (int n = 0; n <= 16; ++n)
    CHECK(exact.p(n) == doctest::Approx(fit.p(n)).epsilon(1e-13));
}

TEST_CASE("rational mode needs exact inputs and respects the horizon cap") {
  std::array<double, 9> p{};
  p[WalkModel::index(1, 0)] = p[WalkModel::index(-1, 0)] = 0.25;
  p[WalkModel::index(0, 1)] = p[WalkModel::index(0, -1)] = 0.25;
  const WalkModel inexact = WalkModel::from_doubles(p);
  CHECK_THROWS_AS(exit_tail_dp(inexact, {1, 1}, 8, true), Error);
  CHECK_THROWS_AS(exit_tail_dp(catalog("srw"), {1, 1}, 200, true), Error);
  CHECK_THROWS_AS(exit_tail_dp(catalog("srw"), {1, 1}, 4000, false), Error);
}

TEST_CASE("survival slope approaches -pi/(2 theta)") {
  const TailFit fit = exit_tail_dp(catalog("srw"), {1, 1}, 512);
  CHECK(fit.fitted_slope >= -1.1);
  CHECK(fit.fitted_slope <= -0.9);

  // the bias shrinks monotonically as the horizon doubles, on every model
  struct Target {
    const char* name;
    double slope;  // -pi/(2 theta)
  };
  for (const Target t : {Target{"srw", -1.0}, Target{"tandem", -1.5},
                         Target{"gessel", -2.0 / 3.0}}) {
    const WalkModel m = catalog(t.name);
    const double e128 = std::abs(exit_tail_dp(m, {1, 1}, 128).fitted_slope - t.slope);
    const double e256 = std::abs(exit_tail_dp(m, {1, 1}, 256).fitted_slope - t.slope);
    const double e512 = std::abs(exit_tail_dp(m, {1, 1}, 512).fitted_slope - t.slope);
    CHECK(e256 < e128);
    CHECK(e512 < e256);
  }
}

TEST_CASE("monte carlo curve agrees with the dynamic program") {
  const WalkModel srw = catalog("srw");
  const int horizon = 64;
  const std::int64_t samples = 200000;
  const TailFit dp = exit_tail_dp(srw, {1, 1}, horizon);
  const TailFit mc = exit_tail_mc(srw, {1, 1}, horizon, samples, 20240901);
  for (int n = 1; n <= horizon; ++n) {
    const double p = dp.p(n);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    CHECK(std::abs(mc.p(n) - p) <= 4.0 * sigma + 1e-12);
  }

  // fixed seed, bit-identical curve
  const TailFit again = exit_tail_mc(srw, {1, 1}, horizon, samples, 20240901);
  for (int n = 0; n <= horizon; ++n) CHECK(again.p(n) == mc.p(n));

  // enumeration anchors at a million samples
  const TailFit big = exit_tail_mc(srw, {1, 1}, 2, 1000000, 7);
  CHECK(std::abs(big.p(1) - 0.5) <= 0.002);
  CHECK(std::abs(big.p(2) - 0.375) <= 0.002);
}

TEST_CASE("excursion counts: enumeration anchors") {
  const WalkModel srw = catalog("srw");
  const ExcursionTable loops = excursions(srw, {1, 1}, {1, 1}, 8);
  CHECK(loops.counts[0] == BigUint(1));
  CHECK(loops.counts[1].is_zero());
  CHECK(loops.counts[2] == BigUint(2));  // up-down, right-left
  CHECK(loops.counts[3].is_zero());

  const ExcursionTable moved = excursions(srw, {1, 1}, {2, 2}, 2);
  CHECK(moved.counts[0].is_zero());
  CHECK(moved.counts[1].is_zero());  // no diagonal step
  CHECK(moved.counts[2] == BigUint(2));

  // tandem three-step loop: the only interior order is E, NW, S
  const ExcursionTable tl = excursions(catalog("tandem"), {1, 1}, {1, 1}, 6);
  CHECK(tl.counts[1].is_zero());
  CHECK(tl.counts[2].is_zero());
  CHECK(tl.counts[3] == BigUint(1));

  // allowing the axes can only add paths
  const ExcursionTable strict = excursions(srw, {1, 1}, {1, 1}, 10, true);
  const ExcursionTable axes = excursions(srw, {1, 1}, {1, 1}, 10, false);
  for (int n = 0; n <= 10; ++n) {
    CHECK((strict.counts[n].compare(axes.counts[n]) <= 0));
  }
  CHECK(strict.counts[4] == BigUint(10));
}

TEST_CASE("excursion counts satisfy the one-step recursion") {
  const WalkModel srw = catalog("srw");
  const Cell start{1, 1};
  // N_{n+1}(start -> e) = sum over steps s of N_n(start -> e - s)
  const Cell e{2, 1};
  const int n = 9;
  const ExcursionTable to_e = excursions(srw, start, e, n + 1);
  BigUint sum;
  for (const Cell& pre : {Cell{1, 1}, Cell{3, 1}, Cell{2, 2}}) {  // (2,0) is outside
    sum += excursions(srw, start, pre, n).counts[n];
  }
  CHECK(to_e.counts[n + 1] == sum);
}

TEST_CASE("excursions respect the counting cap") {
  CHECK_THROWS_AS(excursions(catalog("srw"), {1, 1}, {1, 1}, 600), Error);
}

TEST_CASE("survival ratios estimate the harmonic function (srw)") {
  const WalkModel srw = catalog("srw");
  const CoeffGrid grid = HarmonicSolution::solve(srw).extract_coefficients(4);
  std::vector<TailFit> tails;
  for (const Cell& s : {Cell{1, 1}, Cell{1, 2}, Cell{2, 2}})
    tails.push_back(exit_tail_dp(srw, s, 512));
  const RatioReport rep = exit_time_ratio_check(tails, grid);
  REQUIRE(rep.rows.size() == 2);
  for (const RatioRow& row : rep.rows) {
    if (row.start == Cell{1, 2}) CHECK(row.deviation <= 0.2);
    if (row.start == Cell{2, 2}) CHECK(row.deviation <= 0.4);
  }
}

TEST_CASE("excursion ratios estimate the harmonic function (srw)") {
  const WalkModel srw = catalog("srw");
  const CoeffGrid grid = HarmonicSolution::solve(srw).extract_coefficients(4);
  std::vector<ExcursionTable> tables;
  tables.push_back(excursions(srw, {1, 1}, {1, 1}, 128));
  tables.push_back(excursions(srw, {2, 2}, {1, 1}, 128));
  const RatioReport rep = excursion_ratio_check(tables, grid);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].expected == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(rep.rows[0].deviation <= 0.55);  // finite-n bias at n = 128
}

TEST_CASE("a single start point yields an empty ratio report") {
  const CoeffGrid grid = HarmonicSolution::solve(catalog("srw")).extract_coefficients(4);
  std::vector<TailFit> one;
  one.push_back(exit_tail_dp(catalog("srw"), {1, 1}, 32));
  CHECK(exit_time_ratio_check(one, grid).rows.empty());
}
