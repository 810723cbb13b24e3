#pragma once

#include <optional>
#include <vector>

#include "su2lgt/model.hpp"
#include "su2lgt/statevector.hpp"

namespace su2lgt {

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetry-sector selector: baryon number (total magnetization / 4),
/// optional restriction to the Q^z_tot = 0 eigenspace and to the singlet
/// (Q^2 = 0) subspace.
struct SectorSpec {
  int baryon_number = 0;
  bool qz_zero = false;
  bool singlet_only = false;
};

/// Computational basis states of the sector, ascending indices.
std::vector<std::uint64_t> sector_basis(unsigned n_sites,
                                        const SectorSpec& spec);

struct SingletBasis {
  /// Orthonormal states in the full 2^(2N) Hilbert space.
  std::vector<std::vector<Amplitude>> elements;
  /// For each element, the pair of combined computational states
  /// (index, partner); partner == index for unpaired states.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairing;
};

/// The 10 color-singlet combinations of the N=4, B=1 sector: 4 unpaired
/// basis states and 6 antisymmetric pairs.
SingletBasis singlet_basis_n4_b1();

struct SpectrumResult {
  std::vector<double> energies;
  /// Eigenvectors as amplitudes over `basis` (same ordering).
  std::vector<std::vector<double>> states;
  std::vector<std::uint64_t> basis;
  SectorSpec sector;
  LatticeParams params;

  StateVector state_in_full_space(std::size_t k) const;
};

/// Dense diagonalization of H restricted to the sector; lowest k pairs.
/// Eigenvector phase fixed by making the first nonzero amplitude positive.
SpectrumResult eigensolve_sector(const LatticeParams& p, const SectorSpec& spec,
                                 std::size_t k);

struct HadronMasses {
  double e_vacuum;
  double e_baryon;
  double e_meson;
  double baryon_mass;
  double meson_mass;
  std::optional<double> ratio;  // empty when M_b degenerates
};

HadronMasses hadron_masses(const LatticeParams& p);

}  // namespace su2lgt
