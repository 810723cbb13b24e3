#pragma once

#include "su2lgt/costs.hpp"
#include "su2lgt/exact.hpp"
#include "su2lgt/mitigation.hpp"
#include "su2lgt/optimizer.hpp"

namespace su2lgt {

struct MassRow {
  double x = 0;
  double e_v = 0;      // vacuum energy
  double e_x = 0;      // baryon or meson energy
  double mass = 0;     // e_x - e_v
  double overlap_final = 0;
  std::size_t evals = 0;
  bool valid = true;
};

/// Ground-state VQE in both the B=0 and B=1 sectors along an x grid, with
/// warm starts and cache reweighting between grid points. N in {2, 4}.
std::vector<MassRow> run_baryon_mass(unsigned n_sites, double m_tilde,
                                     std::vector<double> x_grid,
                                     const Estimator& est = {},
                                     OptimizerConfig cfg = {});

enum class ExcitedMethod { Penalty, GramSchmidt };

/// Four-step meson protocol on N=2: (I) ground VQE, (II) overlap circuit
/// at theta_v, (III) excited VQE with the chosen method, (IV) mass
/// difference.
std::vector<MassRow> run_meson_mass(double m_tilde, std::vector<double> x_grid,
                                    ExcitedMethod method = ExcitedMethod::Penalty,
                                    const Estimator& est = {},
                                    OptimizerConfig cfg = {});

struct RatioRow {
  unsigned n_sites;
  double m_tilde, x;
  double e_v, e_b, e_m, m_b, m_m;
  double ratio;
  bool ratio_valid;
};

/// Exact-diagonalization mass-ratio scan over the (x, m_tilde) grid.
std::vector<RatioRow> run_ratio_scan(const std::vector<unsigned>& n_list,
                                     const std::vector<double>& m_grid,
                                     const std::vector<double>& x_grid);

struct BrickworkRow {
  double m_tilde, x;
  int baryon_number;
  unsigned layers;
  double e_vqe, e_ed;
  double magnetization;  // <B> of the optimized state
  std::size_t evals;
};

/// N=6 brickwork VQE (coordinate descent, exact estimator) in one baryon
/// sector, compared against the dense sector diagonalization.
std::vector<BrickworkRow> run_n6_brickwork(const std::vector<double>& m_grid,
                                           const std::vector<double>& x_grid,
                                           int baryon_number, unsigned layers,
                                           OptimizerConfig cfg = {});

struct NoiseStudyRow {
  double x, m_tilde;
  double ideal;          // noiseless energy at the reference angles
  double unmitigated;    // fold-1 noisy value
  double fold3, fold5;
  double extrapolated;   // ZNE at fold 0
  double readout_raw;    // sampled under readout confusion only
  double readout_mitigated;
};

/// N=2 vacuum-ansatz mitigation study: depolarizing ZNE in exact-noisy
/// mode plus a seeded readout-mitigation experiment.
NoiseStudyRow run_noise_study(double m_tilde, double x, double depolarizing_p,
                              double readout_flip_p, std::size_t shots,
                              std::uint64_t seed);

}  // namespace su2lgt
