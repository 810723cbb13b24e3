#pragma once

#include <functional>
#include <optional>

#include "su2lgt/circuit.hpp"

namespace su2lgt {

struct OptimizerConfig {
  unsigned n_params = 1;
  unsigned budget = 2000;
  double tol = 1e-8;
  unsigned stagnation_window = 5;
  std::uint64_t seed = 0;
  unsigned max_params = 20;
  /// Pattern-search step floor; refinement stops below it.
  double target_resolution = 1e-7;
  unsigned surrogate_batch = 4;
  unsigned surrogate_max_points = 80;
  unsigned surrogate_candidates = 256;
  /// Optional warm start evaluated alongside the initial mesh.
  std::optional<ParamVector> initial_guess;
};

enum class EvalSource { Mesh, Surrogate };

struct TracePoint {
  ParamVector theta;
  double value;
  EvalSource source;
};

struct VQEResult {
  ParamVector best_theta;
  double best_value = 0.0;
  std::vector<TracePoint> trace;
};

using CostFn = std::function<double(const ParamVector&)>;

/// Alternating mesh/pattern search (exploration) and Gaussian-process
/// surrogate proposals with expected-improvement acquisition
/// (exploitation), over [0, 2*pi)^d.
VQEResult optimize(const CostFn& cost, const OptimizerConfig& config);

/// Coordinate descent with exact order-2 trigonometric line fits; for
/// parameter counts beyond the surrogate limit (each angle must enter the
/// circuit through a single gate for the fit to be exact).
VQEResult optimize_coordinate(const CostFn& cost, const OptimizerConfig& config,
                              unsigned max_sweeps = 40);

}  // namespace su2lgt
