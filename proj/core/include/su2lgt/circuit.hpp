#pragma once

#include <map>
#include <string>
#include <vector>

#include "su2lgt/gate.hpp"
#include "su2lgt/pauli_sum.hpp"
#include "su2lgt/statevector.hpp"

namespace su2lgt {

using ParamVector = std::vector<double>;

/// Ordered gate list over n_qubits with n_params symbolic rotation slots.
struct Circuit {
  unsigned n_qubits = 0;
  std::vector<Gate> gates;
  unsigned n_params = 0;

  void append(Gate g);
  void append(const Circuit& other);
  void validate() const;

  std::string to_json() const;
  static Circuit from_json(const std::string& text);
};

/// Reversed gate sequence; rotation angles negated (symbolic slots keep
/// their index and toggle the negation flag).
Circuit inverse(const Circuit& c);

struct SplitCircuit {
  Circuit variational;
  Circuit static_tail;  // maximal parameter-free suffix
};

SplitCircuit split_static_tail(const Circuit& c);

struct ReducedProblem {
  Circuit circuit;           // re-indexed onto the active qubits
  PauliSum hamiltonian;      // h_effective projected on the fixed qubits
  std::map<unsigned, bool> fixed;  // inactive qubit -> spin (true = up)
  std::vector<unsigned> active;    // reduced index -> original qubit
  std::uint64_t input_state = 0;   // input restricted to the active qubits
};

/// Drop qubits no gate of `variational` touches; their input-state values
/// are absorbed into the projected Hamiltonian. Gates must not straddle
/// the active/inactive split (they cannot, by construction of the set).
ReducedProblem reduce_inactive_qubits(const Circuit& variational,
                                      const PauliSum& h_effective,
                                      std::uint64_t input_state);

/// U_s^dag h U_s for a parameter-free tail: gates folded last-to-first,
/// Clifford rules where available, dense conjugation otherwise.
PauliSum conjugate_hamiltonian_by_tail(const PauliSum& h, const Circuit& tail,
                                       std::size_t term_cap = 1000000);

/// Noiseless gate-by-gate application.
void apply_noiseless(const Circuit& c, const ParamVector& theta,
                     StateVector& psi);

StateVector run_noiseless(const Circuit& c, const ParamVector& theta,
                          std::uint64_t input_state);

}  // namespace su2lgt
