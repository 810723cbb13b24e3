#pragma once

#include <array>
#include <map>

#include "su2lgt/circuit.hpp"
#include "su2lgt/measurement_group.hpp"
#include "su2lgt/rng.hpp"

namespace su2lgt {

/// Depolarizing noise after every multi-qubit gate (CNOT equivalents:
/// CNOT 1, SWAP 3, PSWAP 2, TOFFOLI 6) plus per-qubit readout confusion.
struct NoiseModel {
  double two_qubit_depolarizing_p = 0.0;
  /// Per-qubit column-stochastic 2x2 confusion, lambda[obs][true]; empty
  /// means ideal readout.
  std::vector<std::array<std::array<double, 2>, 2>> readout_confusion;
  std::uint64_t seed = 0;

  bool has_gate_noise() const { return two_qubit_depolarizing_p > 0; }
  bool has_readout_noise() const { return !readout_confusion.empty(); }
  void validate(unsigned n_qubits) const;
};

/// Uniform readout confusion: every qubit flips with probability p.
NoiseModel uniform_readout_noise(unsigned n_qubits, double flip_p,
                                 std::uint64_t seed = 0);

unsigned cnot_equivalents(const Gate& g);

/// One measurement setting worth of sampled bitstrings.
struct MeasurementRecord {
  MeasurementGroup group;
  std::size_t shots = 0;
  std::map<std::uint64_t, std::size_t> counts;
  unsigned fold_factor = 1;
  bool basis_rotated = true;
};

/// Circuit application; with a noise model, one depolarizing trajectory
/// keyed by (noise.seed, trajectory). Noiseless when noise is null.
StateVector apply_circuit(const Circuit& c, const ParamVector& theta,
                          std::uint64_t input_state,
                          const NoiseModel* noise = nullptr,
                          std::uint64_t trajectory = 0);

/// Rotate into the group's measurement basis and sample computational
/// bitstrings (readout confusion applied per shot when noisy).
MeasurementRecord sample_group(const StateVector& state,
                               const MeasurementGroup& group,
                               std::size_t shots, const NoiseModel* noise,
                               std::uint64_t seed, std::uint64_t group_index);

std::vector<MeasurementRecord> sample_groups(
    const StateVector& state, const std::vector<MeasurementGroup>& groups,
    std::size_t shots, const NoiseModel* noise, std::uint64_t seed);

struct ExpectationEstimate {
  std::map<PauliString, double> values;  // per non-identity string
  double energy = 0.0;
  double std_error = 0.0;
};

/// Reconstruct every member string's expectation from its group's samples
/// (parity of the support bits) and assemble <h>.
ExpectationEstimate estimate_expectations(
    const std::vector<MeasurementRecord>& records, const PauliSum& h);

/// Probability of measuring `input_state` after c(theta_ref) followed by
/// inverse(c)(theta). shots == 0: exact amplitude; else sampled frequency.
double overlap_probability(const Circuit& c, const ParamVector& theta,
                           const ParamVector& theta_ref,
                           std::uint64_t input_state, std::size_t shots = 0,
                           const NoiseModel* noise = nullptr,
                           std::uint64_t seed = 0);

}  // namespace su2lgt
