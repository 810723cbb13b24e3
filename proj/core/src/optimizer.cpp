#include "su2lgt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "su2lgt/model.hpp"
#include "su2lgt/rng.hpp"

namespace su2lgt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

double wrap_angle(double t) {
  double m = std::fmod(t, kTwoPi);
  if (m < 0) m += kTwoPi;
  return m;
}

struct Search {
  const CostFn& cost;
  const OptimizerConfig& cfg;
  VQEResult result;

  explicit Search(const CostFn& c, const OptimizerConfig& k) : cost(c), cfg(k) {
    result.best_value = std::numeric_limits<double>::infinity();
  }

  bool budget_left() const { return result.trace.size() < cfg.budget; }

  double eval(ParamVector theta, EvalSource src) {
    for (auto& t : theta) t = wrap_angle(t);
    const double v = cost(theta);
    result.trace.push_back({theta, v, src});
    if (v < result.best_value) {
      result.best_value = v;
      result.best_theta = theta;
    }
    return v;
  }
};

/// Periodic kernel, unit variance: exp(-2 sum sin^2(d/2) / l^2).
double kernel(const ParamVector& a, const ParamVector& b, double length) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double sn = std::sin(0.5 * (a[i] - b[i]));
    s += sn * sn;
  }
  return std::exp(-2.0 * s / (length * length));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(kTwoPi);
}

/// One round of GP proposals from the accumulated trace.
void surrogate_round(Search& s, KeyedRng& rng) {
  const auto& trace = s.result.trace;
  if (trace.size() < 4) return;

  // Fit on the best subset to keep the solve small.
  std::vector<std::size_t> idx(trace.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return trace[a].value < trace[b].value;
  });
  const std::size_t m =
      std::min<std::size_t>(idx.size(), s.cfg.surrogate_max_points);
  idx.resize(m);

  const double length = 1.0;
  Eigen::MatrixXd K(m, m);
  Eigen::VectorXd y(m);
  double mean = 0;
  for (std::size_t i = 0; i < m; ++i) mean += trace[idx[i]].value;
  mean /= static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    y(i) = trace[idx[i]].value - mean;
    for (std::size_t j = 0; j < m; ++j)
      K(i, j) = kernel(trace[idx[i]].theta, trace[idx[j]].theta, length);
    K(i, i) += 1e-8;
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(K);
  if (llt.info() != Eigen::Success) return;
  const Eigen::VectorXd alpha = llt.solve(y);

  const unsigned d = s.cfg.n_params;
  for (unsigned b = 0; b < s.cfg.surrogate_batch && s.budget_left(); ++b) {
    ParamVector best_cand;
    double best_ei = -1;
    for (unsigned c = 0; c < s.cfg.surrogate_candidates; ++c) {
      ParamVector cand(d);
      if (c % 2 == 0) {
        for (auto& t : cand) t = rng.next_double() * kTwoPi;
      } else {
        // Gaussian perturbation of the incumbent (Box-Muller).
        for (unsigned i = 0; i < d; ++i) {
          const double u1 = std::max(rng.next_double(), 1e-300);
          const double u2 = rng.next_double();
          cand[i] = wrap_angle(s.result.best_theta[i] +
                               0.3 * std::sqrt(-2 * std::log(u1)) *
                                   std::cos(kTwoPi * u2));
        }
      }
      Eigen::VectorXd k(m);
      for (std::size_t i = 0; i < m; ++i)
        k(i) = kernel(cand, trace[idx[i]].theta, length);
      const double mu = mean + k.dot(alpha);
      const double var =
          std::max(1e-12, 1.0 - k.dot(llt.solve(k)));
      const double sigma = std::sqrt(var);
      const double z = (s.result.best_value - mu) / sigma;
      const double ei =
          (s.result.best_value - mu) * normal_cdf(z) + sigma * normal_pdf(z);
      if (ei > best_ei) {
        best_ei = ei;
        best_cand = std::move(cand);
      }
    }
    s.eval(best_cand, EvalSource::Surrogate);
  }
}

/// Pattern-search sweep around the incumbent with the given step; returns
/// true on improvement.
bool pattern_sweep(Search& s, double step) {
  bool improved = false;
  for (unsigned i = 0; i < s.cfg.n_params && s.budget_left(); ++i) {
    for (const double sign : {1.0, -1.0}) {
      ParamVector cand = s.result.best_theta;
      cand[i] += sign * step;
      const double before = s.result.best_value;
      if (s.eval(cand, EvalSource::Mesh) < before - s.cfg.tol * 1e-3)
        improved = true;
      if (!s.budget_left()) break;
    }
  }
  return improved;
}

}  // namespace

VQEResult optimize(const CostFn& cost, const OptimizerConfig& config) {
  if (config.n_params == 0 || config.n_params > config.max_params)
    throw parameter_error("parameter count outside optimizer limits");
  Search s(cost, config);
  KeyedRng rng(config.seed, 0x6f7074 /*"opt"*/);

  const unsigned d = config.n_params;
  s.eval(ParamVector(d, 0.0), EvalSource::Mesh);
  if (config.initial_guess) {
    if (config.initial_guess->size() != d)
      throw parameter_error("initial guess dimension mismatch");
    s.eval(*config.initial_guess, EvalSource::Mesh);
  }

  // Initial mesh: full grid for few parameters, Latin hypercube otherwise.
  if (d <= 4) {
    const unsigned per_dim = 4;
    unsigned total = 1;
    for (unsigned i = 0; i < d; ++i) total *= per_dim;
    for (unsigned n = 0; n < total && s.budget_left(); ++n) {
      ParamVector theta(d);
      unsigned r = n;
      for (unsigned i = 0; i < d; ++i) {
        theta[i] = (r % per_dim) * kTwoPi / per_dim;
        r /= per_dim;
      }
      s.eval(theta, EvalSource::Mesh);
    }
  } else {
    const unsigned n_seed =
        std::min<unsigned>(64, std::max<unsigned>(8, config.budget / 4));
    std::vector<std::vector<unsigned>> perms(d, std::vector<unsigned>(n_seed));
    for (auto& perm : perms) {
      std::iota(perm.begin(), perm.end(), 0u);
      for (unsigned i = n_seed; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }
    for (unsigned n = 0; n < n_seed && s.budget_left(); ++n) {
      ParamVector theta(d);
      for (unsigned i = 0; i < d; ++i)
        theta[i] = (perms[i][n] + rng.next_double()) * kTwoPi / n_seed;
      s.eval(theta, EvalSource::Mesh);
    }
  }

  double step = kPi / 4;
  unsigned stagnant = 0;
  while (s.budget_left()) {
    const double before = s.result.best_value;
    surrogate_round(s, rng);
    while (s.budget_left() && pattern_sweep(s, step)) {
    }
    step /= 2;
    const bool converged_step = step < config.target_resolution;
    if (before - s.result.best_value <= config.tol) {
      if (++stagnant >= config.stagnation_window && converged_step) break;
    } else {
      stagnant = 0;
    }
    if (converged_step && stagnant >= config.stagnation_window) break;
  }
  return s.result;
}

VQEResult optimize_coordinate(const CostFn& cost, const OptimizerConfig& config,
                              unsigned max_sweeps) {
  if (config.n_params == 0)
    throw parameter_error("parameter count must be positive");
  Search s(cost, config);
  const unsigned d = config.n_params;
  ParamVector theta = config.initial_guess.value_or(ParamVector(d, 0.0));
  if (theta.size() != d)
    throw parameter_error("initial guess dimension mismatch");
  s.eval(theta, EvalSource::Mesh);

  // The cost restricted to a single angle is a + b cos t + c sin t +
  // e cos 2t + f sin 2t; five samples pin it down exactly.
  Eigen::MatrixXd design(5, 5);
  std::vector<double> nodes(5);
  for (int k = 0; k < 5; ++k) {
    nodes[k] = k * kTwoPi / 5;
    design(k, 0) = 1;
    design(k, 1) = std::cos(nodes[k]);
    design(k, 2) = std::sin(nodes[k]);
    design(k, 3) = std::cos(2 * nodes[k]);
    design(k, 4) = std::sin(2 * nodes[k]);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(design);

  for (unsigned sweep = 0; sweep < max_sweeps && s.budget_left(); ++sweep) {
    const double sweep_start = s.result.best_value;
    for (unsigned i = 0; i < d && s.budget_left(); ++i) {
      theta = s.result.best_theta;
      Eigen::VectorXd v(5);
      for (int k = 0; k < 5; ++k) {
        ParamVector cand = theta;
        cand[i] = nodes[k];
        v(k) = s.eval(cand, EvalSource::Mesh);
        if (!s.budget_left()) break;
      }
      if (!s.budget_left()) break;
      const Eigen::VectorXd c = lu.solve(v);
      // Dense scan plus Newton polish on the fitted trigonometric model.
      auto model = [&](double t) {
        return c(0) + c(1) * std::cos(t) + c(2) * std::sin(t) +
               c(3) * std::cos(2 * t) + c(4) * std::sin(2 * t);
      };
      double best_t = 0, best_v = model(0);
      for (int k = 1; k < 360; ++k) {
        const double t = k * kTwoPi / 360;
        const double mv = model(t);
        if (mv < best_v) {
          best_v = mv;
          best_t = t;
        }
      }
      for (int it = 0; it < 30; ++it) {
        const double g = -c(1) * std::sin(best_t) + c(2) * std::cos(best_t) -
                         2 * c(3) * std::sin(2 * best_t) +
                         2 * c(4) * std::cos(2 * best_t);
        const double h = -c(1) * std::cos(best_t) - c(2) * std::sin(best_t) -
                         4 * c(3) * std::cos(2 * best_t) -
                         4 * c(4) * std::sin(2 * best_t);
        if (std::abs(h) < 1e-14) break;
        const double next = best_t - g / h;
        if (!std::isfinite(next)) break;
        best_t = next;
        if (std::abs(g) < 1e-14) break;
      }
      ParamVector cand = theta;
      cand[i] = wrap_angle(best_t);
      s.eval(cand, EvalSource::Mesh);
    }
    if (sweep_start - s.result.best_value <= config.tol) break;
  }
  return s.result;
}

}  // namespace su2lgt
