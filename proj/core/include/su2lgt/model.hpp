#pragma once

#include "su2lgt/pauli_sum.hpp"

namespace su2lgt {

struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dimensionless model parameters: N even spatial sites (2N qubits),
/// fermion mass m_tilde >= 0, inverse coupling x > 0.
struct LatticeParams {
  unsigned n_sites;
  double m_tilde;
  double x;

  void validate() const;
  unsigned n_qubits() const { return 2 * n_sites; }
};

/// Sum over sites of (-1)^n (Z_{2n-1} + Z_{2n})/2 + 1; the constant folds
/// into a single identity term with coefficient N.
PauliSum build_mass_term(unsigned n_sites);

/// Nearest-neighbour hopping: each of the 2(N-1) hops contributes
/// -(XZX + YZY)/4 * 2 on its three-qubit support.
PauliSum build_kinetic_term(unsigned n_sites);

/// Color electric energy: same-cell ZZ part, cross-cell (Z-Z)(Z-Z) part and
/// the four-qubit flip-flop part.
PauliSum build_electric_term(unsigned n_sites);

/// m_tilde * H_m + (1/x) * H_el + H_kin, canonicalized. The strong-coupling
/// vacuum has exactly zero energy.
PauliSum build_hamiltonian(const LatticeParams& p);

struct ChargeOperators {
  PauliSum q_x, q_y, q_z;
};

ChargeOperators charge_operators(unsigned n_sites);

/// B = (1/4) sum_q Z_q.
PauliSum baryon_number_operator(unsigned n_sites);

struct TermCount {
  std::size_t actual;   // distinct strings in the canonical expansion
  std::size_t formula;  // 6N^2 - 11N + 9
};

TermCount pauli_term_count(unsigned n_sites);

/// Basis-state index of the strong-coupling ground state in the given
/// baryon sector: B=0 is the bare vacuum (odd cells up-up, even cells
/// down-down); B=1 additionally flips cell N to up-up.
std::uint64_t strong_coupling_state(unsigned n_sites, int baryon_number);

/// Diagonal (computational-basis) expectation of a Pauli sum:
/// <b|h|b>, only Z-type terms contribute.
double diagonal_expectation(const PauliSum& h, std::uint64_t basis_index);

}  // namespace su2lgt
