#include "su2lgt/costs.hpp"

#include <bit>
#include <cmath>

namespace su2lgt {

namespace {

double string_expectation(const StateVector& psi, const PauliString& s) {
  PauliSum one(s.n_qubits());
  one.add(s, 1.0);
  return psi.expectation(one);
}

}  // namespace

CostContext::CostContext(Circuit ansatz, std::uint64_t input_state, PauliSum h,
                         Estimator est)
    : ansatz_(std::move(ansatz)),
      input_(input_state),
      h_(std::move(h)),
      est_(est) {
  if (h_.n_qubits() != ansatz_.n_qubits)
    throw parameter_error("hamiltonian width mismatch");
  if (est_.mode == EstimatorMode::Sampled)
    groups_ = group_for_measurement(h_);
}

void CostContext::set_hamiltonian(PauliSum h) {
  if (h.n_qubits() != ansatz_.n_qubits)
    throw parameter_error("hamiltonian width mismatch");
  h_ = std::move(h);
  if (est_.mode == EstimatorMode::Sampled)
    groups_ = group_for_measurement(h_);
}

double CostContext::ground(const ParamVector& theta) {
  try {
    return reweight_cache(cache_, theta, h_);
  } catch (const cache_miss&) {
  }

  ++evals_;
  EvaluationCache::Entry entry;
  double energy;
  if (est_.mode == EstimatorMode::Exact) {
    const StateVector psi = run_noiseless(ansatz_, theta, input_);
    energy = h_.identity_coefficient();
    for (const auto& [s, c] : h_.terms()) {
      if (s.x_mask() == 0 && s.z_mask() == 0) continue;
      const double v = string_expectation(psi, s);
      entry.expectations[s] = v;
      energy += c * v;
    }
  } else {
    const NoiseModel* nm = est_.use_noise ? &est_.noise : nullptr;
    const StateVector psi =
        apply_circuit(ansatz_, theta, input_, nm, /*trajectory=*/evals_);
    std::vector<MeasurementRecord> records;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi)
      records.push_back(sample_group(psi, groups_[gi], est_.shots, nm,
                                     est_.seed,
                                     evals_ * groups_.size() + gi));
    const auto est = estimate_expectations(records, h_);
    entry.expectations = est.values;
    entry.shots = est_.shots;
    energy = est.energy;
  }
  cache_.store(theta, std::move(entry));
  return energy;
}

double CostContext::overlap_with(const ParamVector& theta,
                                 const ParamVector& theta_ref) {
  if (est_.mode == EstimatorMode::Exact)
    return overlap_probability(ansatz_, theta, theta_ref, input_);
  const NoiseModel* nm = est_.use_noise ? &est_.noise : nullptr;
  ++evals_;
  return overlap_probability(ansatz_, theta, theta_ref, input_, est_.shots,
                             nm, est_.seed + evals_);
}

double cost_ground(CostContext& ctx, const ParamVector& theta) {
  return ctx.ground(theta);
}

double cost_excited_penalty(CostContext& ctx, const ParamVector& theta,
                            const ParamVector& theta_ref, double beta) {
  if (beta <= 0) throw parameter_error("penalty weight must be positive");
  const double e = ctx.ground(theta);
  const double p = ctx.overlap_with(theta, theta_ref);
  return e + beta * std::sqrt(std::max(0.0, p));
}

GramSchmidtValue cost_excited_gram_schmidt(CostContext& ctx,
                                           const ParamVector& theta,
                                           const ParamVector& theta_ref,
                                           double e_v, double guard) {
  GramSchmidtValue out;
  out.overlap_sq = ctx.overlap_with(theta, theta_ref);
  if (out.overlap_sq > 1.0 - guard) return out;  // invalid: overlap ~ 1
  const double e = ctx.ground(theta);
  out.value = (e - e_v * out.overlap_sq) / (1.0 - out.overlap_sq);
  out.valid = true;
  return out;
}

double default_penalty_beta(const LatticeParams& p) {
  const auto el = build_electric_term(p.n_sites);
  double el_norm = 0;
  for (const auto& [s, c] : el.terms()) el_norm += std::abs(c);
  return 2.0 * (p.m_tilde * p.n_sites + el_norm / p.x);
}

}  // namespace su2lgt
