#pragma once

#include "su2lgt/circuit.hpp"

namespace su2lgt {

/// Hyperspherical parameterization of d+1 real amplitudes on the unit
/// sphere: a_n = prod_{i<n} sin(t_i) * cos(t_n), a_{d+1} = prod_i sin(t_i).
std::vector<double> hyperspherical_amplitudes(const ParamVector& theta);

/// Pair entry for singlet combinations: states[state_index] is statically
/// rotated into (|s> - |partner>)/sqrt(2); partner must not be one of the
/// primary states.
struct SingletPairing {
  std::size_t state_index;
  std::uint64_t partner;
};

/// Circuit preparing sum_n a_n(theta) |states[n]> from |0...0>, with
/// hyperspherical weights over |states|-1 parameters; paired states are
/// replaced by their antisymmetric singlet combination.
Circuit ansatz_basis_superposition(unsigned n_qubits,
                                   const std::vector<std::uint64_t>& states,
                                   const std::vector<SingletPairing>& pairing = {});

/// 8-qubit, 9-parameter circuit over the 10 color-singlet combinations of
/// the N=4, B=1 sector: a variational chain over the primary basis states
/// followed by six static blocks (double-controlled RY(+-pi/2) plus three
/// Toffolis each) forming the antisymmetric pairs.
Circuit ansatz_n4_baryon_general();

/// 8-qubit, 6-parameter vacuum family for N=4: the bare vacuum plus, for
/// each adjacent (occupied, empty) cell pair, the antisymmetric
/// one-particle transfer and the fully transferred pair (at most four
/// fermions and antifermions in total).
Circuit ansatz_n4_vacuum_family();

/// 4-qubit, 2-parameter circuit spanning the full N=2 color-singlet B=0
/// sector (vacuum, singlet pair, doubly-flipped cell); used for both the
/// vacuum and the meson searches.
Circuit ansatz_n2_singlet_family();

/// Excitation-preserving brickwork: `layers` layers of PSWAP gates on
/// neighbouring qubits (j, j+1), j ascending, one parameter per gate.
Circuit ansatz_brickwork(unsigned n_sites, unsigned layers);

}  // namespace su2lgt
