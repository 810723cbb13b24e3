#pragma once

#include "su2lgt/cache.hpp"
#include "su2lgt/model.hpp"
#include "su2lgt/sampling.hpp"

namespace su2lgt {

enum class EstimatorMode { Exact, Sampled };

struct Estimator {
  EstimatorMode mode = EstimatorMode::Exact;
  std::size_t shots = 8024;
  bool use_noise = false;
  NoiseModel noise;
  std::uint64_t seed = 0;
};

/// Shared state of one VQE problem: ansatz, input state, Hamiltonian,
/// estimator, and the expectation cache. Every energy evaluation stores
/// its per-string expectations so later (x, m_tilde) changes reweight
/// without new measurements.
class CostContext {
 public:
  CostContext(Circuit ansatz, std::uint64_t input_state, PauliSum h,
              Estimator est = {});

  double ground(const ParamVector& theta);
  double overlap_with(const ParamVector& theta, const ParamVector& theta_ref);

  /// Swap the coefficient set (same string structure or a subset); cached
  /// evaluations stay valid.
  void set_hamiltonian(PauliSum h);

  const PauliSum& hamiltonian() const { return h_; }
  const Circuit& ansatz() const { return ansatz_; }
  std::uint64_t input_state() const { return input_; }
  const Estimator& estimator() const { return est_; }
  EvaluationCache& cache() { return cache_; }
  std::size_t evaluations() const { return evals_; }

 private:
  Circuit ansatz_;
  std::uint64_t input_;
  PauliSum h_;
  Estimator est_;
  std::vector<MeasurementGroup> groups_;
  EvaluationCache cache_;
  std::size_t evals_ = 0;
};

double cost_ground(CostContext& ctx, const ParamVector& theta);

/// Energy plus beta * |<Psi(theta)|Psi(theta_ref)>| (square root of the
/// measured overlap probability).
double cost_excited_penalty(CostContext& ctx, const ParamVector& theta,
                            const ParamVector& theta_ref, double beta);

struct GramSchmidtValue {
  bool valid = false;       // guard trips when the overlap is ~1
  double value = 0.0;
  double overlap_sq = 0.0;
};

GramSchmidtValue cost_excited_gram_schmidt(CostContext& ctx,
                                           const ParamVector& theta,
                                           const ParamVector& theta_ref,
                                           double e_v, double guard = 1e-6);

/// Computable upper bound above the expected gap: 2 (m_tilde N + |H_el|_1/x).
double default_penalty_beta(const LatticeParams& p);

}  // namespace su2lgt
