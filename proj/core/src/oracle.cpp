#include "quadwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "quadwalk/errors.hpp"

namespace quadwalk {

namespace {

constexpr int kDpCap = 2048;
constexpr int kRationalCap = 128;
constexpr int kExcursionCap = 512;

// QWALK_THREADS controls the row striping of the float dynamic program.
// Results are bit-identical for any setting: stripes write disjoint rows and
// the row sums are reduced in row order.
int dp_threads() {
  const char* env = std::getenv("QWALK_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  if (n < 1) return 1;
  return std::min<int>(n, std::max(1u, std::thread::hardware_concurrency()));
}

struct StepList {
  int di[8], dj[8];
  double p[8];
  int count = 0;
};

StepList nonzero_steps(const WalkModel& m) {
  StepList s;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      if (i == 0 && j == 0) continue;
      const double p = m.prob(i, j);
      if (p > 0.0) {
        s.di[s.count] = i;
        s.dj[s.count] = j;
        s.p[s.count] = p;
        ++s.count;
      }
    }
  return s;
}

void fit_tail(TailFit& fit) {
  const int n_max = static_cast<int>(fit.survival.size()) - 1;
  const int lo = std::max(1, n_max / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int n = lo; n <= n_max; ++n) {
    const double pn = fit.survival[static_cast<size_t>(n)];
    if (pn <= 0) continue;
    const double lx = std::log(static_cast<double>(n));
    const double ly = std::log(pn);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++cnt;
  }
  if (cnt >= 2) {
    const double denom = cnt * sxx - sx * sx;
    fit.fitted_slope = (cnt * sxy - sx * sy) / denom;
    fit.kappa_hat = std::exp((sy - fit.fitted_slope * sx) / cnt);
  }
}

}  // namespace

ResidualReport harmonicity_residual(const CoeffGrid& grid, const WalkModel& model) {
  return harmonicity_residual(
      [&grid](int i, int j) { return grid.f(i, j); }, grid.n, model);
}

ResidualReport harmonicity_residual(const std::function<double(int, int)>& f, int box,
                                    const WalkModel& model) {
  ResidualReport rep;
  for (int i = 1; i <= box; ++i)
    for (int j = 1; j <= box; ++j)
      if (f(i, j) <= 0) {
        rep.positivity_ok = false;
        break;
      }
  // interior-checkable cells: all nine neighbours stay within the box
  for (int i = 1; i + 1 <= box; ++i)
    for (int j = 1; j + 1 <= box; ++j) {
      double acc = 0;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          const double p = model.prob(di, dj);
          if (p == 0.0) continue;
          const int ni = i + di, nj = j + dj;
          if (ni >= 1 && nj >= 1) acc += p * f(ni, nj);
        }
      const double val = f(i, j);
      const double res = std::abs(acc - val) / std::max(std::abs(val), 1e-300);
      if (res > rep.max_relative_residual) {
        rep.max_relative_residual = res;
        rep.argmax = {i, j};
      }
    }
  return rep;
}

TailFit exit_tail_dp(const WalkModel& model, Cell start, int n_max, bool rational) {
  if (n_max < 1 || n_max > (rational ? kRationalCap : kDpCap))
    fail(ErrorCode::BoxOverflow,
         "n_max " + std::to_string(n_max) + " beyond the exact DP cap");
  if (rational && !model.has_exact())
    fail(ErrorCode::ParseError, "rational DP needs exact step probabilities");
  validate(model, /*require_zero_drift=*/false);

  TailFit fit;
  fit.start = start;
  fit.survival.assign(static_cast<size_t>(n_max) + 1, 0.0);
  fit.survival[0] = 1.0;

  const StepList steps = nonzero_steps(model);
  const int width = std::max(start.first, start.second) + n_max + 1;
  const int stride = width + 2;

  if (!rational) {
    const int n_threads = dp_threads();
    std::vector<double> cur(static_cast<size_t>(stride) * stride, 0.0);
    std::vector<double> nxt(cur.size(), 0.0);
    cur[static_cast<size_t>(start.first) * stride + start.second] = 1.0;
    double exited = 0.0;
    int reach = std::max(start.first, start.second);
    for (int t = 1; t <= n_max; ++t) {
      reach = std::min(reach + 1, width);
      // exit flux out of the two inner rows
      double flux = 0;
      {
        double q_row = 0, q_col = 0;
        for (int k = 0; k < steps.count; ++k) {
          if (steps.di[k] == -1) q_row += steps.p[k];
          if (steps.dj[k] == -1) q_col += steps.p[k];
        }
        for (int j = 1; j <= reach; ++j) flux += cur[1 * stride + j] * q_row;
        for (int i = 1; i <= reach; ++i) flux += cur[static_cast<size_t>(i) * stride + 1] * q_col;
        flux -= cur[1 * stride + 1] * model.prob(-1, -1);
      }
      exited += flux;

      auto stripe = [&](int i_begin, int i_end, double* row_sums) {
        for (int i = i_begin; i < i_end; ++i) {
          const size_t row = static_cast<size_t>(i) * stride;
          double sum = 0;
          for (int j = 1; j <= reach; ++j) {
            double acc = 0;
            for (int k = 0; k < steps.count; ++k) {
              const int si = i - steps.di[k], sj = j - steps.dj[k];
              acc += steps.p[k] * cur[static_cast<size_t>(si) * stride + sj];
            }
            nxt[row + j] = acc;
            sum += acc;
          }
          row_sums[i] = sum;
        }
      };

      std::vector<double> row_sums(static_cast<size_t>(reach) + 1, 0.0);
      const int workers = std::min(n_threads, std::max(1, reach / 8));
      if (workers <= 1) {
        stripe(1, reach + 1, row_sums.data());
      } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int wkr = 0; wkr < workers; ++wkr) {
          const int lo = 1 + wkr * reach / workers;
          const int hi = 1 + (wkr + 1) * reach / workers;
          pool.emplace_back(stripe, lo, hi, row_sums.data());
        }
        for (std::thread& th : pool) th.join();
      }
      double total = 0;
      for (int i = 1; i <= reach; ++i) total += row_sums[static_cast<size_t>(i)];
      std::swap(cur, nxt);
      fit.survival[static_cast<size_t>(t)] = total;
      fit.conservation_drift =
          std::max(fit.conservation_drift, std::abs(total + exited - 1.0));
    }
  } else {
    // exact masses: numerators over den^t, den the common denominator
    std::uint64_t den = 1;
    std::uint64_t weight[8];
    {
      const auto& exact = model.exact();
      for (int k = 0; k < steps.count; ++k) {
        const Rational& r = exact[WalkModel::index(steps.di[k], steps.dj[k])];
        den = std::lcm(den, static_cast<std::uint64_t>(r.den));
      }
      for (int k = 0; k < steps.count; ++k) {
        const Rational& r = exact[WalkModel::index(steps.di[k], steps.dj[k])];
        weight[k] = static_cast<std::uint64_t>(r.num) * (den / static_cast<std::uint64_t>(r.den));
      }
    }
    fit.exact = true;
    fit.den_base = den;
    fit.exact_num.resize(static_cast<size_t>(n_max) + 1);
    fit.exact_num[0] = BigUint(1);

    // per-cell exit weights: only the two inner rows lose mass
    std::uint64_t w_row = 0, w_col = 0, w_corner = 0;
    for (int k = 0; k < steps.count; ++k) {
      if (steps.di[k] == -1) w_row += weight[k];
      if (steps.dj[k] == -1) w_col += weight[k];
      if (steps.di[k] == -1 || steps.dj[k] == -1) w_corner += weight[k];
    }

    std::vector<BigUint> cur(static_cast<size_t>(stride) * stride);
    std::vector<BigUint> nxt(cur.size());
    cur[static_cast<size_t>(start.first) * stride + start.second] = BigUint(1);
    BigUint prev_total(1);
    int reach = std::max(start.first, start.second);
    for (int t = 1; t <= n_max; ++t) {
      reach = std::min(reach + 1, width);
      BigUint total;
      for (int i = 1; i <= reach; ++i) {
        const size_t row = static_cast<size_t>(i) * stride;
        for (int j = 1; j <= reach; ++j) {
          BigUint acc;
          for (int k = 0; k < steps.count; ++k) {
            const int si = i - steps.di[k], sj = j - steps.dj[k];
            if (si >= 1 && sj >= 1)
              acc.add_mul(cur[static_cast<size_t>(si) * stride + sj], weight[k]);
          }
          total += acc;
          nxt[row + j] = std::move(acc);
        }
      }
      // exact conservation: retained + exit flux == previous total * den
      BigUint flux;
      for (int j = 2; j <= reach; ++j) flux.add_mul(cur[1 * stride + j], w_row);
      for (int i = 2; i <= reach; ++i)
        flux.add_mul(cur[static_cast<size_t>(i) * stride + 1], w_col);
      flux.add_mul(cur[1 * stride + 1], w_corner);
      prev_total.mul_small(den);
      flux += total;
      if (!(flux == prev_total))
        fail(ErrorCode::BoxOverflow, "exact DP lost mass (internal invariant)");

      fit.exact_num[static_cast<size_t>(t)] = total;
      fit.survival[static_cast<size_t>(t)] =
          big_ratio(total, BigUint::pow(den, static_cast<unsigned>(t)));
      prev_total = total;
      std::swap(cur, nxt);
    }
    fit.conservation_drift = 0.0;  // exact arithmetic, verified step by step
  }

  fit_tail(fit);
  return fit;
}

TailFit exit_tail_mc(const WalkModel& model, Cell start, int n_max,
                     std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) fail(ErrorCode::BoxOverflow, "need at least one sample");
  validate(model, /*require_zero_drift=*/false);
  const StepList steps = nonzero_steps(model);
  double cum[8];
  double acc = 0;
  for (int k = 0; k < steps.count; ++k) {
    acc += steps.p[k];
    cum[k] = acc;
  }
  cum[steps.count - 1] = 1.0 + 1e-16;

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::int64_t> alive(static_cast<size_t>(n_max) + 1, 0);
  for (std::int64_t s = 0; s < samples; ++s) {
    int i = start.first, j = start.second;
    int t = 0;
    while (t < n_max) {
      const double u = uniform();
      int k = 0;
      while (u > cum[k]) ++k;
      i += steps.di[k];
      j += steps.dj[k];
      ++t;
      if (i == 0 || j == 0) break;
    }
    if (i != 0 && j != 0) t = n_max + 1;  // survived the whole horizon
    // path exited at time t (or survived); alive[n] counts tau > n
    const int last_alive = std::min(t - 1, n_max);
    for (int n = 0; n <= last_alive; ++n) alive[static_cast<size_t>(n)]++;
  }

  TailFit fit;
  fit.start = start;
  fit.survival.resize(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    fit.survival[static_cast<size_t>(n)] =
        static_cast<double>(alive[static_cast<size_t>(n)]) / static_cast<double>(samples);
  fit_tail(fit);
  return fit;
}

bool TailFit::exact_equals(int n, std::uint64_t p, std::uint64_t q) const {
  if (!exact || n < 0 || static_cast<size_t>(n) >= exact_num.size()) return false;
  // survival[n] = num / den^n == p/q  <=>  num*q == p*den^n
  BigUint lhs = exact_num[static_cast<size_t>(n)];
  lhs.mul_small(q);
  BigUint rhs = BigUint::pow(den_base, static_cast<unsigned>(n));
  rhs.mul_small(p);
  return lhs == rhs;
}

ExcursionTable excursions(const WalkModel& model, Cell start, Cell end, int n_max,
                          bool strict) {
  if (n_max < 0 || n_max > kExcursionCap)
    fail(ErrorCode::BoxOverflow, "n_max beyond the exact counting cap");
  validate(model, /*require_zero_drift=*/false);
  const StepList steps = nonzero_steps(model);

  ExcursionTable table;
  table.start = start;
  table.end = end;
  table.strict = strict;
  table.counts.resize(static_cast<size_t>(n_max) + 1);

  const int lo = strict ? 1 : 0;
  // cells further than this from both endpoints cannot lie on any admissible path
  const int dist = std::max(std::abs(start.first - end.first),
                            std::abs(start.second - end.second));
  const int box = (n_max + dist) / 2 +
                  std::max({start.first, start.second, end.first, end.second}) + 2;
  const int stride = box + 2;

  std::vector<BigUint> cur(static_cast<size_t>(stride) * stride);
  std::vector<BigUint> nxt(cur.size());
  auto idx = [stride](int i, int j) { return static_cast<size_t>(i) * stride + j; };
  cur[idx(start.first, start.second)] = BigUint(1);
  table.counts[0] = (start == end) ? BigUint(1) : BigUint();

  for (int t = 1; t <= n_max; ++t) {
    for (int i = lo; i <= box; ++i)
      for (int j = lo; j <= box; ++j) {
        BigUint acc;
        for (int k = 0; k < steps.count; ++k) {
          const int si = i - steps.di[k], sj = j - steps.dj[k];
          if (si >= lo && sj >= lo && si <= box && sj <= box)
            acc += cur[idx(si, sj)];
        }
        nxt[idx(i, j)] = std::move(acc);
      }
    std::swap(cur, nxt);
    table.counts[static_cast<size_t>(t)] = cur[idx(end.first, end.second)];
  }
  return table;
}

RatioReport exit_time_ratio_check(const std::vector<TailFit>& tails, const CoeffGrid& grid) {
  RatioReport rep;
  const TailFit* base = nullptr;
  for (const TailFit& t : tails)
    if (t.start == Cell{1, 1}) base = &t;
  if (!base || tails.size() < 2) return rep;  // nothing to compare

  const int n = static_cast<int>(base->survival.size()) - 1;
  for (const TailFit& t : tails) {
    if (&t == base) continue;
    RatioRow row;
    row.start = t.start;
    row.ratio = t.survival[static_cast<size_t>(n)] / base->survival[static_cast<size_t>(n)];
    row.expected = grid.f(t.start.first, t.start.second) / grid.f(1, 1);
    row.deviation = std::abs(row.ratio - row.expected);
    rep.max_deviation = std::max(rep.max_deviation, row.deviation);
    rep.rows.push_back(row);
  }
  return rep;
}

RatioReport excursion_ratio_check(const std::vector<ExcursionTable>& tables,
                                  const CoeffGrid& grid) {
  RatioReport rep;
  const ExcursionTable* base = nullptr;
  for (const ExcursionTable& t : tables)
    if (t.start == Cell{1, 1}) base = &t;
  if (!base || tables.size() < 2) return rep;

  const int n = static_cast<int>(base->counts.size()) - 1;
  for (const ExcursionTable& t : tables) {
    if (&t == base) continue;
    RatioRow row;
    row.start = t.start;
    row.ratio = t.count(n) / base->count(n);
    row.expected = grid.f(t.start.first, t.start.second) / grid.f(1, 1);
    row.deviation = std::abs(row.ratio - row.expected);
    rep.max_deviation = std::max(rep.max_deviation, row.deviation);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace quadwalk
