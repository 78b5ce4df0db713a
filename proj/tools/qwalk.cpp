// qwalk: analytic and probabilistic toolkit for zero-drift small-step walks
// killed at the boundary of the quarter plane.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "quadwalk/classify.hpp"
#include "quadwalk/drifted_srw.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/harmonic.hpp"
#include "quadwalk/oracle.hpp"
#include "quadwalk/verify.hpp"
#include "quadwalk/walk_model.hpp"

namespace {

using namespace quadwalk;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct ModelSource {
  std::string catalog_name;
  std::string file_path;

  WalkModel resolve() const {
    if (!catalog_name.empty() && !file_path.empty())
      fail(ErrorCode::ParseError, "give either --model or --file, not both");
    if (!catalog_name.empty()) return catalog(catalog_name);
    if (!file_path.empty()) return load_config_file(file_path);
    fail(ErrorCode::ParseError, "no model given (use --model or --file)");
  }
};

void add_model_options(CLI::App* cmd, ModelSource& src) {
  cmd->add_option("--model", src.catalog_name, "catalog model: srw, diagonal, tandem, gessel");
  cmd->add_option("--file", src.file_path, "walk config file (step <i> <j> <prob> lines)");
}

bool parse_cell(const std::string& text, Cell& cell) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    cell.first = std::stoi(text.substr(0, comma));
    cell.second = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return cell.first >= 1 && cell.second >= 1;
}

void print_moments(std::ostream& out, const Moments& m) {
  out << "drift_x=" << fmt(m.drift_x) << "\n";
  out << "drift_y=" << fmt(m.drift_y) << "\n";
  out << "m_xy=" << fmt(m.m_xy) << "\n";
  out << "m_xx=" << fmt(m.m_xx) << "\n";
  out << "m_yy=" << fmt(m.m_yy) << "\n";
}

int cmd_validate(const ModelSource& src, bool allow_drift, std::ostream& out) {
  const WalkModel model = src.resolve();
  const Moments m = validate(model, !allow_drift);
  out << "model=" << (model.name().empty() ? "custom" : model.name()) << "\n";
  out << "valid=1\n";
  print_moments(out, m);
  return 0;
}

int cmd_classify(const ModelSource& src, int cap, std::ostream& out) {
  const WalkModel model = src.resolve();
  const Moments m = validate(model, true);
  const double theta = angle(m);
  const AngleReport rep = classify(theta, cap);
  out << "theta=" << fmt(rep.theta) << "\n";
  out << "pi_over_theta=" << fmt(rep.pi_over_theta) << "\n";
  out << "rationality=" << to_string(rep.rationality) << "\n";
  if (rep.rationality != Rationality::PresumedIrrational)
    out << "pi_over_theta_fraction=" << rep.p << "/" << rep.q << "\n";
  out << "denominator_cap=" << rep.denominator_cap << "\n";
  if (rep.group_finite)
    out << "group_order=" << rep.group_order << "\n";
  else
    out << "group_order=infinite\n";
  out << "nature=" << to_string(rep.nature) << "\n";
  return 0;
}

int cmd_harmonic(const ModelSource& src, int n, std::ostream& out) {
  const WalkModel model = src.resolve();
  const HarmonicSolution sol = HarmonicSolution::solve(model);
  const CoeffGrid grid = sol.extract_coefficients(n);
  out << "theta=" << fmt(sol.theta()) << "\n";
  out << "mu=" << fmt(sol.mu()) << "\n";
  out << "nu=" << fmt(sol.nu()) << "\n";
  out << "mu_transposed=" << fmt(sol.mu_transposed()) << "\n";
  out << "nu_transposed=" << fmt(sol.nu_transposed()) << "\n";
  out << "growth_c=" << fmt(sol.w().growth_constant()) << "\n";
  out << "i,j,f\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out << i << "," << j << "," << fmt(grid.f(i, j)) << "\n";
  return 0;
}

int cmd_verify(const ModelSource& src, int grid_side, std::ostream& out) {
  const WalkModel model = src.resolve();
  const VerifyReport rep = verify_model(model, grid_side);
  for (const Check& c : rep.checks) {
    out << c.name << "=" << fmt(c.value) << " threshold=" << fmt(c.threshold)
        << " pass=" << (c.pass ? 1 : 0) << "\n";
  }
  out << "all_pass=" << (rep.all_pass ? 1 : 0) << "\n";
  if (!rep.all_pass) {
    for (const Check& c : rep.checks)
      if (!c.pass) {
        std::cerr << "verification failed: " << c.name << "\n";
        return 2;
      }
  }
  return 0;
}

int cmd_exit_time(const ModelSource& src, const std::string& start_text, int n,
                  std::int64_t mc_samples, std::uint64_t seed, bool rational,
                  std::ostream& out) {
  Cell start{1, 1};
  if (!start_text.empty() && !parse_cell(start_text, start))
    fail(ErrorCode::ParseError, "bad --start, expected i,j with i,j >= 1");
  const WalkModel model = src.resolve();
  const Moments m = validate(model, true);
  const double theta = angle(m);
  const TailFit dp = exit_tail_dp(model, start, n, rational);

  out << "start=" << start.first << "," << start.second << "\n";
  out << "mode=" << (rational ? "rational" : "float") << "\n";
  out << "target_slope=" << fmt(-std::numbers::pi / (2.0 * theta)) << "\n";
  out << "fitted_slope=" << fmt(dp.fitted_slope) << "\n";
  out << "kappa_hat=" << fmt(dp.kappa_hat) << "\n";
  out << "conservation_drift=" << fmt(dp.conservation_drift) << "\n";

  if (mc_samples > 0) {
    const TailFit mc = exit_tail_mc(model, start, n, mc_samples, seed);
    out << "mc_samples=" << mc_samples << "\n";
    out << "mc_seed=" << seed << "\n";
    out << "mc_fitted_slope=" << fmt(mc.fitted_slope) << "\n";
    out << "n,p,p_mc\n";
    for (int k = 0; k <= n; ++k)
      out << k << "," << fmt(dp.p(k)) << "," << fmt(mc.p(k)) << "\n";
  } else {
    out << "n,p\n";
    for (int k = 0; k <= n; ++k) out << k << "," << fmt(dp.p(k)) << "\n";
  }
  return 0;
}

int cmd_excursions(const ModelSource& src, const std::string& start_text,
                   const std::string& end_text, int n, bool axes, std::ostream& out) {
  Cell start{1, 1}, end{1, 1};
  if (!start_text.empty() && !parse_cell(start_text, start))
    fail(ErrorCode::ParseError, "bad --start, expected i,j with i,j >= 1");
  if (!end_text.empty() && !parse_cell(end_text, end))
    fail(ErrorCode::ParseError, "bad --end, expected i,j with i,j >= 1");
  const WalkModel model = src.resolve();
  validate(model, false);
  const ExcursionTable table = excursions(model, start, end, n, !axes);
  out << "start=" << start.first << "," << start.second << "\n";
  out << "end=" << end.first << "," << end.second << "\n";
  out << "mode=" << (axes ? "axes" : "strict") << "\n";
  out << "n,count\n";
  for (int k = 0; k <= n; ++k)
    out << k << "," << table.counts[static_cast<size_t>(k)].to_decimal() << "\n";
  return 0;
}

int cmd_drifted(double gamma, double drift, int n, std::ostream& out) {
  DriftedSRW m;
  m.p10 = m.p01 = 0.25 + drift / 2.0;
  m.pm10 = m.p0m1 = 0.25 - drift / 2.0;
  const GammaFamily fam = gamma_family(m, gamma);
  out << "gamma=" << fmt(fam.gamma) << "\n";
  out << "r=" << fmt(fam.r) << "\n";
  out << "rt=" << fmt(fam.rt) << "\n";
  out << "rt_published=" << fmt(fam.rt_published) << "\n";
  out << "adjudicated=" << (fam.adjudicated ? 1 : 0) << "\n";
  out << "residual_published=" << fmt(fam.residual_published) << "\n";
  out << "residual=" << fmt(fam.residual) << "\n";
  out << "s_plus=" << fmt(fam.sp) << "\n";
  out << "s_minus=" << fmt(fam.sm) << "\n";
  out << "st_plus=" << fmt(fam.stp) << "\n";
  out << "st_minus=" << fmt(fam.stm) << "\n";
  const double f11 = f_gamma(fam, 1, 1);
  out << "i,j,f\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out << i << "," << j << "," << fmt(f_gamma(fam, i, j) / f11) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quarter-plane killed-walk harmonic function toolkit"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("-o,--output", output_path, "write the report to a file instead of stdout");

  ModelSource src;
  bool allow_drift = false;
  int cap = 100;
  int n_harmonic = 20;
  int n_verify = 30;
  int n_steps = 512;
  int n_excursions = 256;
  int n_drifted = 10;
  std::string start_text, end_text;
  std::int64_t mc_samples = 0;
  std::uint64_t seed = 12345;
  bool rational = false;
  bool axes = false;
  double gamma = std::numbers::pi / 4.0;
  double drift = 0.1;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check model assumptions");
  add_model_options(validate_cmd, src);
  validate_cmd->add_flag("--allow-drift", allow_drift, "skip the zero-drift requirement");

  CLI::App* classify_cmd = app.add_subcommand("classify", "angle, rationality, group order");
  add_model_options(classify_cmd, src);
  classify_cmd->add_option("--cap", cap, "denominator cap for the rationality search");

  CLI::App* harmonic_cmd =
      app.add_subcommand("harmonic", "harmonic function coefficients f(i,j)");
  add_model_options(harmonic_cmd, src);
  harmonic_cmd->add_option("--n", n_harmonic, "grid side");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the consistency check suite");
  add_model_options(verify_cmd, src);
  verify_cmd->add_option("--n", n_verify, "extraction grid side for the residual check");

  CLI::App* exit_cmd = app.add_subcommand("exit-time", "survival curve of the exit time");
  add_model_options(exit_cmd, src);
  exit_cmd->add_option("--start", start_text, "start cell i,j (default 1,1)");
  exit_cmd->add_option("--n", n_steps, "horizon");
  exit_cmd->add_option("--mc", mc_samples, "Monte Carlo sample count (0 = off)");
  exit_cmd->add_option("--seed", seed, "Monte Carlo seed");
  exit_cmd->add_flag("--rational", rational, "exact rational dynamic program");

  CLI::App* exc_cmd = app.add_subcommand("excursions", "exact path counts between cells");
  add_model_options(exc_cmd, src);
  exc_cmd->add_option("--start", start_text, "start cell i,j (default 1,1)");
  exc_cmd->add_option("--end", end_text, "end cell i,j (default 1,1)");
  exc_cmd->add_option("--n", n_excursions, "horizon");
  exc_cmd->add_flag("--axes", axes, "allow paths to touch the axes");

  CLI::App* drift_cmd =
      app.add_subcommand("drifted-srw", "closed-form gamma family of the drifted walk");
  drift_cmd->add_option("--gamma", gamma, "direction parameter in [0, pi/2]");
  drift_cmd->add_option("--drift", drift, "drift eps: p10 = p01 = 1/4 + eps/2");
  drift_cmd->add_option("--n", n_drifted, "grid side");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      std::cerr << "error=ParseError cannot open output file\n";
      return 1;
    }
    out = &file_out;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(src, allow_drift, *out);
    if (classify_cmd->parsed()) return cmd_classify(src, cap, *out);
    if (harmonic_cmd->parsed()) return cmd_harmonic(src, n_harmonic, *out);
    if (verify_cmd->parsed()) return cmd_verify(src, n_verify, *out);
    if (exit_cmd->parsed())
      return cmd_exit_time(src, start_text, n_steps, mc_samples, seed, rational, *out);
    if (exc_cmd->parsed())
      return cmd_excursions(src, start_text, end_text, n_excursions, axes, *out);
    if (drift_cmd->parsed()) return cmd_drifted(gamma, drift, n_drifted, *out);
  } catch (const Error& e) {
    std::cerr << "error=" << e.name() << " detail=" << e.what() << "\n";
    return is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error=Internal detail=" << e.what() << "\n";
    return 2;
  }
  return 0;
}
