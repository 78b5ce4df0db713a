#pragma once

#include <string>
#include <vector>

#include "quadwalk/harmonic.hpp"

namespace quadwalk {

// One named consistency check: the measured value must stay at or below the
// threshold (or within it, for two-sided comparisons folded into `value`).
struct Check {
  std::string name;
  double value = 0;
  double threshold = 0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool all_pass = true;

  void add(std::string name, double value, double threshold) {
    const bool ok = value <= threshold;
    checks.push_back({std::move(name), value, threshold, ok});
    all_pass = all_pass && ok;
  }
};

// Cross-checks of the whole analytic pipeline for one model: kernel form
// agreement, branch values on the kernel, boundary realness and conjugation
// symmetry of the gluing map, agreement of its two expressions on the seam,
// growth exponent, constancy of the boundary constant, transposed-constant
// match, the functional-equation residual along the curve, scale invariance
// of H, and the discrete harmonicity of an extracted coefficient grid.
VerifyReport verify_model(const WalkModel& model, int grid_side = 30,
                          int boundary_samples = 200);

}  // namespace quadwalk
