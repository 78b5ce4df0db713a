#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "quadwalk/rational.hpp"

namespace quadwalk {

// A homogeneous small-step random walk on the quarter plane: transition
// probabilities p(i,j) to the eight nearest neighbours, p(0,0) = 0.
//
// Probabilities entered as text (catalog models, config files) keep an exact
// rational form next to the double value; validation prefers the exact form.
class WalkModel {
public:
  WalkModel() = default;

  static WalkModel from_doubles(const std::array<double, 9>& probs,
                                std::string name = "");
  static WalkModel from_rationals(const std::array<Rational, 9>& probs,
                                  std::string name = "");

  // index layout: (i+1)*3 + (j+1), i.e. p(-1,-1) first, p(1,1) last
  static int index(int i, int j) { return (i + 1) * 3 + (j + 1); }

  double prob(int i, int j) const { return p_[index(i, j)]; }
  const std::array<double, 9>& probs() const { return p_; }
  bool has_exact() const { return exact_.has_value(); }
  const std::array<Rational, 9>& exact() const { return *exact_; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  WalkModel transposed() const;  // p'(i,j) = p(j,i)

  // Config serialization: `step <i> <j> <prob>` lines plus optional `name`.
  std::string to_config() const;

private:
  std::array<double, 9> p_{};
  std::optional<std::array<Rational, 9>> exact_;
  std::string name_;
};

// First and second moments of the step distribution.
struct Moments {
  double drift_x = 0;  // sum of i * p(i,j)
  double drift_y = 0;  // sum of j * p(i,j)
  double m_xy = 0;     // sum of i*j * p(i,j)
  double m_xx = 0;     // sum of i^2 * p(i,j)
  double m_yy = 0;     // sum of j^2 * p(i,j)
};

Moments moments(const WalkModel& model);

// Checks the model assumptions: probabilities sum to one, none negative,
// no three consecutive zeros in the cyclic neighbour list, and (optionally)
// zero drift. Throws Error with the violated condition; returns the moments.
Moments validate(const WalkModel& model, bool require_zero_drift = true);

// Named reference models: "srw", "diagonal", "tandem", "gessel".
WalkModel catalog(const std::string& name);

// Parses the text config format. Throws ParseError with the line number.
WalkModel parse_config(std::istream& in);
WalkModel load_config_file(const std::string& path);

}  // namespace quadwalk
