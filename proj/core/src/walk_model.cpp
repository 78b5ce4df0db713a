#include "quadwalk/walk_model.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "quadwalk/errors.hpp"

namespace quadwalk {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const std::string ns = text.substr(0, slash);
      const std::string ds = text.substr(slash + 1);
      if (ns.empty() || ds.empty()) return std::nullopt;
      size_t used = 0;
      const std::int64_t n = std::stoll(ns, &used);
      if (used != ns.size()) return std::nullopt;
      const std::int64_t d = std::stoll(ds, &used);
      if (used != ds.size() || d == 0) return std::nullopt;
      return Rational(n, d);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      size_t used = 0;
      const std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) return std::nullopt;
      return Rational::integer(n);
    }
    // decimal literal -> exact decimal fraction
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || frac_len > 17) return std::nullopt;
    size_t used = 0;
    const std::int64_t n = std::stoll(digits, &used);
    if (used != digits.size()) return std::nullopt;
    std::int64_t d = 1;
    for (size_t k = 0; k < frac_len; ++k) d *= 10;
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

WalkModel WalkModel::from_doubles(const std::array<double, 9>& probs, std::string name) {
  WalkModel m;
  m.p_ = probs;
  m.p_[index(0, 0)] = 0.0;
  m.name_ = std::move(name);
  return m;
}

WalkModel WalkModel::from_rationals(const std::array<Rational, 9>& probs, std::string name) {
  WalkModel m;
  for (int k = 0; k < 9; ++k) m.p_[k] = probs[k].to_double();
  m.p_[index(0, 0)] = 0.0;
  m.exact_ = probs;
  (*m.exact_)[index(0, 0)] = Rational();
  m.name_ = std::move(name);
  return m;
}

WalkModel WalkModel::transposed() const {
  WalkModel m;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) m.p_[index(i, j)] = p_[index(j, i)];
  if (exact_) {
    std::array<Rational, 9> e;
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) e[index(i, j)] = (*exact_)[index(j, i)];
    m.exact_ = e;
  }
  m.name_ = name_.empty() ? "" : name_ + "_transposed";
  return m;
}

std::string WalkModel::to_config() const {
  std::ostringstream out;
  if (!name_.empty()) out << "name " << name_ << "\n";
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      if (i == 0 && j == 0) continue;
      if (exact_) {
        const Rational& r = (*exact_)[index(i, j)];
        if (r.is_zero()) continue;
        out << "step " << i << " " << j << " " << r.str() << "\n";
      } else if (p_[index(i, j)] != 0.0) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", p_[index(i, j)]);
        out << "step " << i << " " << j << " " << buf << "\n";
      }
    }
  return out.str();
}

Moments moments(const WalkModel& model) {
  Moments m;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      const double p = model.prob(i, j);
      m.drift_x += i * p;
      m.drift_y += j * p;
      m.m_xy += i * j * p;
      m.m_xx += i * i * p;
      m.m_yy += j * j * p;
    }
  return m;
}

namespace {

// cyclic neighbour order used by the non-degeneracy assumption
constexpr int kCycle[8][2] = {{1, 1},  {1, 0},  {1, -1},  {0, -1},
                              {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}};

}  // namespace

Moments validate(const WalkModel& model, bool require_zero_drift) {
  const bool exact = model.has_exact();

  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      if (model.prob(i, j) < 0.0)
        fail(ErrorCode::NegativeProbability,
             "p(" + std::to_string(i) + "," + std::to_string(j) + ") < 0");
    }

  if (exact) {
    Rational sum;
    for (const Rational& r : model.exact()) sum = sum + r;
    if (!(sum == Rational::integer(1)))
      fail(ErrorCode::SumNotOne, "probabilities sum to " + sum.str());
  } else {
    double sum = 0;
    for (double p : model.probs()) sum += p;
    if (std::abs(sum - 1.0) > 1e-12)
      fail(ErrorCode::SumNotOne, "probabilities sum to " + std::to_string(sum));
  }

  // no three consecutive zeros, cyclically
  auto is_zero = [&](int k) {
    const int idx = WalkModel::index(kCycle[k][0], kCycle[k][1]);
    return exact ? model.exact()[idx].is_zero() : model.probs()[idx] == 0.0;
  };
  for (int k = 0; k < 8; ++k) {
    if (is_zero(k) && is_zero((k + 1) % 8) && is_zero((k + 2) % 8))
      fail(ErrorCode::DegenerateSteps,
           "three consecutive zero steps in the neighbour cycle");
  }

  const Moments m = moments(model);
  if (require_zero_drift) {
    if (exact) {
      Rational dx, dy;
      for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
          const Rational& r = model.exact()[WalkModel::index(i, j)];
          dx = dx + Rational::integer(i) * r;
          dy = dy + Rational::integer(j) * r;
        }
      if (!dx.is_zero() || !dy.is_zero())
        fail(ErrorCode::NonZeroDrift, "drift (" + dx.str() + "," + dy.str() + ")");
    } else if (std::abs(m.drift_x) > 1e-12 || std::abs(m.drift_y) > 1e-12) {
      fail(ErrorCode::NonZeroDrift,
           "drift (" + std::to_string(m.drift_x) + "," + std::to_string(m.drift_y) + ")");
    }
  }
  return m;
}

WalkModel catalog(const std::string& name) {
  std::array<Rational, 9> p{};
  auto at = [&p](int i, int j) -> Rational& { return p[WalkModel::index(i, j)]; };
  if (name == "srw") {
    at(1, 0) = at(0, 1) = at(-1, 0) = at(0, -1) = Rational(1, 4);
  } else if (name == "diagonal") {
    at(1, 1) = at(1, -1) = at(-1, 1) = at(-1, -1) = Rational(1, 4);
  } else if (name == "tandem") {
    at(1, 0) = at(-1, 1) = at(0, -1) = Rational(1, 3);
  } else if (name == "gessel") {
    at(1, 1) = at(1, 0) = at(-1, -1) = at(-1, 0) = Rational(1, 4);
  } else {
    fail(ErrorCode::UnknownModel, name);
  }
  return WalkModel::from_rationals(p, name);
}

WalkModel parse_config(std::istream& in) {
  std::array<Rational, 9> probs{};
  std::string name;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "name") {
      if (!(ls >> name))
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing label");
    } else if (keyword == "step") {
      int i = 0, j = 0;
      std::string prob_text;
      if (!(ls >> i >> j >> prob_text))
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": expected `step <i> <j> <prob>`");
      if (i < -1 || i > 1 || j < -1 || j > 1 || (i == 0 && j == 0))
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": step (" + std::to_string(i) + "," +
                 std::to_string(j) + ") outside the eight neighbours");
      const auto r = parse_rational(prob_text);
      if (!r)
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": bad probability `" + prob_text + "`");
      probs[WalkModel::index(i, j)] = *r;
    } else {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": unknown keyword `" + keyword + "`");
    }
  }
  return WalkModel::from_rationals(probs, name);
}

WalkModel load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_config(in);
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::DegenerateSteps: return "DegenerateSteps";
    case ErrorCode::NonZeroDrift: return "NonZeroDrift";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::BothBranchesInfinite: return "BothBranchesInfinite";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CorrelationOutOfRange: return "CorrelationOutOfRange";
    case ErrorCode::NormalizationFailure: return "NormalizationFailure";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::NonConvergentLimit: return "NonConvergentLimit";
    case ErrorCode::ConstancyViolation: return "ConstancyViolation";
    case ErrorCode::DegenerateMu: return "DegenerateMu";
    case ErrorCode::KernelZero: return "KernelZero";
    case ErrorCode::TorusThroughZero: return "TorusThroughZero";
    case ErrorCode::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::BoxOverflow: return "BoxOverflow";
    case ErrorCode::FormulaInconsistency: return "FormulaInconsistency";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeProbability:
    case ErrorCode::SumNotOne:
    case ErrorCode::DegenerateSteps:
    case ErrorCode::NonZeroDrift:
    case ErrorCode::UnknownModel:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace quadwalk
