#pragma once

#include <complex>
#include <vector>

#include "su2lgt/gate.hpp"
#include "su2lgt/pauli_sum.hpp"
#include "su2lgt/rng.hpp"

namespace su2lgt {

using Amplitude = std::complex<double>;

/// Dense complex amplitudes over 2^n computational basis states.
/// Qubit q corresponds to bit q of the basis index; |0> is spin up.
class StateVector {
 public:
  explicit StateVector(unsigned n_qubits);
  static StateVector basis_state(unsigned n_qubits, std::uint64_t index);

  unsigned n_qubits() const { return n_; }
  std::uint64_t dim() const { return amps_.size(); }

  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }
  Amplitude amplitude(std::uint64_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  void apply(const Gate& g, const std::vector<double>& theta = {});

  double expectation(const PauliSum& h) const;
  Amplitude overlap(const StateVector& other) const;

  /// Probability of measuring basis state `index`.
  double probability(std::uint64_t index) const;

 private:
  unsigned n_;
  std::vector<Amplitude> amps_;
};

/// Gate action on a raw amplitude array (shared by the statevector and the
/// density-matrix column updates).
void apply_gate_inplace(std::vector<Amplitude>& amps, unsigned n_qubits,
                        const Gate& g, const std::vector<double>& theta);

/// Apply a Pauli string in place (used for noise injection and commutator
/// checks): amps <- P amps.
void apply_pauli_inplace(std::vector<Amplitude>& amps, const PauliString& p);

/// y <- h x  for a Pauli sum h.
std::vector<Amplitude> apply_pauli_sum(const PauliSum& h,
                                       const std::vector<Amplitude>& x);

}  // namespace su2lgt
