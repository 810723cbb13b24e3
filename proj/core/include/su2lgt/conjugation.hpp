#pragma once

#include "su2lgt/gate.hpp"
#include "su2lgt/pauli_sum.hpp"

namespace su2lgt {

struct unsupported_gate_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// True for the gates conjugate_clifford handles: X, CNOT, SWAP and
/// fixed RY(+-pi/2) quarter turns.
bool is_supported_clifford(const Gate& g);

/// g^dag * t * g as a single signed Pauli term.
PauliTerm conjugate_clifford(const PauliTerm& t, const Gate& g);

/// g^dag * h * g expanded in Pauli strings, exact for any fixed-parameter
/// gate. Intermediate term count is capped (default 1e6).
PauliSum conjugate_general(const PauliSum& h, const Gate& g,
                           std::size_t term_cap = 1000000);

}  // namespace su2lgt
