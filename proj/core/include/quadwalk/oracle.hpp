#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "quadwalk/bigint.hpp"
#include "quadwalk/harmonic.hpp"
#include "quadwalk/walk_model.hpp"

namespace quadwalk {

using Cell = std::pair<int, int>;

// Discrete-Dirichlet check of a coefficient grid: the harmonic identity
// f(i,j) = sum p(di,dj) f(i+di, j+dj) with zero boundary, evaluated at every
// cell whose nine neighbours stay inside the grid.
struct ResidualReport {
  double max_relative_residual = 0;
  Cell argmax{0, 0};
  bool positivity_ok = true;
  bool boundary_zero_ok = true;  // boundary rows are implicit exact zeros
};

ResidualReport harmonicity_residual(const CoeffGrid& grid, const WalkModel& model);

// Same check for an arbitrary function on a box (used by closed forms).
ResidualReport harmonicity_residual(const std::function<double(int, int)>& f, int box,
                                    const WalkModel& model);

// Survival series P[tau > n] of the walk started inside the open quadrant,
// tau being the first entry into {i = 0 or j = 0}.
struct TailFit {
  Cell start{1, 1};
  std::vector<double> survival;  // index n = 0..n_max
  double fitted_slope = 0;       // log-log least squares over [n_max/2, n_max]
  double kappa_hat = 0;          // exp(intercept) of the same fit
  double conservation_drift = 0; // max |survival + exited - 1|

  bool exact = false;            // exact rational DP results attached
  std::uint64_t den_base = 0;    // survival[n] = exact_num[n] / den_base^n
  std::vector<BigUint> exact_num;

  double p(int n) const { return survival[static_cast<size_t>(n)]; }
  // exact comparison survival[n] == p/q (rational mode only)
  bool exact_equals(int n, std::uint64_t p, std::uint64_t q) const;
};

// Exact forward dynamic program on the box the walk can reach (it cannot
// leave it, so truncation is lossless). Float masses by default; exact
// big-rational masses when `rational` is set (n_max <= 128, exact inputs).
TailFit exit_tail_dp(const WalkModel& model, Cell start, int n_max, bool rational = false);

// Seeded Monte Carlo estimate of the same curve; bit-reproducible for a
// fixed (seed, samples) pair.
TailFit exit_tail_mc(const WalkModel& model, Cell start, int n_max,
                     std::int64_t samples, std::uint64_t seed);

// Exact path counts N_n(start -> end), each admissible step weighted 1.
// strict mode keeps paths in {i,j >= 1}; otherwise the axes are allowed.
struct ExcursionTable {
  Cell start{1, 1}, end{1, 1};
  bool strict = true;
  std::vector<BigUint> counts;  // index n = 0..n_max
  double count(int n) const { return counts[static_cast<size_t>(n)].to_double(); }
};

ExcursionTable excursions(const WalkModel& model, Cell start, Cell end, int n_max,
                          bool strict = true);

// Ratio comparison against the harmonic function: survival (or excursion
// count) ratios between start points estimate f(start)/f(1,1).
struct RatioRow {
  Cell start{0, 0};
  double ratio = 0;
  double expected = 0;
  double deviation = 0;
};
struct RatioReport {
  std::vector<RatioRow> rows;
  double max_deviation = 0;
};

RatioReport exit_time_ratio_check(const std::vector<TailFit>& tails, const CoeffGrid& grid);
RatioReport excursion_ratio_check(const std::vector<ExcursionTable>& tables,
                                  const CoeffGrid& grid);

}  // namespace quadwalk
