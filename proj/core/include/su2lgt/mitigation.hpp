#pragma once

#include "su2lgt/sampling.hpp"

namespace su2lgt {

std::vector<double> counts_to_probabilities(const MeasurementRecord& rec,
                                            unsigned n_qubits);

/// Invert the per-qubit readout confusion on an observed distribution;
/// negative entries are clipped to zero and the result renormalized.
std::vector<double> readout_mitigate(
    std::vector<double> probabilities,
    const std::vector<std::array<std::array<double, 2>, 2>>& confusion);

/// Replace every CNOT by `fold` CNOTs (fold odd, identity-preserving).
Circuit fold_cnots(const Circuit& c, unsigned fold);

/// Exact expectation under the depolarizing noise model: density-matrix
/// evolution (channel applied in full, no trajectory sampling). Capacity
/// limited to small registers.
double exact_noisy_expectation(const Circuit& c, const ParamVector& theta,
                               std::uint64_t input_state,
                               const NoiseModel& noise,
                               const PauliSum& observable);

struct ZneResult {
  std::vector<unsigned> folds;
  std::vector<double> values;
  double extrapolated = 0.0;
};

/// CNOT-folding zero-noise extrapolation: estimate the observable at each
/// fold factor and linearly extrapolate (unweighted least squares) to
/// fold 0. shots == 0 uses the exact noisy expectation.
ZneResult zne_cnot_folding(const Circuit& c, const ParamVector& theta,
                           const PauliSum& observable, const NoiseModel& noise,
                           const std::vector<unsigned>& folds = {1, 3, 5},
                           std::size_t shots = 0, std::uint64_t seed = 0);

/// Expectation on the convex mixture (1-p_e) |psi><psi| + p_e |err><err|.
double mixed_state_expectation(const PauliSum& h, const StateVector& psi,
                               const StateVector& error_state, double p_e);

}  // namespace su2lgt
