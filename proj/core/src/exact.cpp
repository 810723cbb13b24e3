#include "su2lgt/exact.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Dense>

namespace su2lgt {

namespace {

int cell_qz_balance(std::uint64_t state, unsigned n_sites) {
  int balance = 0;
  for (unsigned n = 0; n < n_sites; ++n) {
    const bool a = (state >> (2 * n)) & 1;  // true = down
    const bool b = (state >> (2 * n + 1)) & 1;
    if (!a && b) ++balance;  // up-down cell
    if (a && !b) --balance;  // down-up cell
  }
  return balance;
}

/// Matrix of h restricted to the span of the given basis states.
Eigen::MatrixXd restrict_to_basis(const PauliSum& h,
                                  const std::vector<std::uint64_t>& basis) {
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (const auto& [s, c] : h.terms()) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::uint64_t target = basis[j] ^ s.x_mask();
      auto it = pos.find(target);
      if (it == pos.end()) continue;
      Amplitude ph = 1.0;
      for (unsigned q = 0; q < s.n_qubits(); ++q) {
        if (!((s.z_mask() >> q) & 1)) continue;
        const bool xq = (s.x_mask() >> q) & 1;
        const bool jq = (basis[j] >> q) & 1;
        if (xq)
          ph *= jq ? Amplitude(0, -1) : Amplitude(0, 1);
        else if (jq)
          ph = -ph;
      }
      m(it->second, j) += c * ph;
    }
  }
  if (m.imag().cwiseAbs().maxCoeff() > 1e-10)
    throw std::runtime_error("sector Hamiltonian not real");
  return m.real();
}

std::uint64_t state_from_cells(const std::string& cells) {
  // 'u' = up (bit 0), 'd' = down (bit 1); two characters per cell.
  std::uint64_t idx = 0;
  for (std::size_t q = 0; q < cells.size(); ++q)
    if (cells[q] == 'd') idx |= 1ull << q;
  return idx;
}

}  // namespace

std::vector<std::uint64_t> sector_basis(unsigned n_sites,
                                        const SectorSpec& spec) {
  if (std::abs(spec.baryon_number) > static_cast<int>(n_sites) / 2)
    throw parameter_error("baryon number out of range");
  const unsigned nq = 2 * n_sites;
  // Sum of z-values is 4B, so #up = N + 2B.
  const int ups = static_cast<int>(n_sites) + 2 * spec.baryon_number;
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (1ull << nq); ++s) {
    const int n_down = std::popcount(s);
    if (static_cast<int>(nq) - n_down != ups) continue;
    if (spec.qz_zero && cell_qz_balance(s, n_sites) != 0) continue;
    out.push_back(s);
  }
  return out;
}

SingletBasis singlet_basis_n4_b1() {
  SingletBasis out;
  const std::size_t dim = 1ull << 8;
  auto push = [&](const std::string& a, const std::string& b) {
    std::vector<Amplitude> v(dim, Amplitude(0));
    const auto ia = state_from_cells(a);
    if (b.empty()) {
      v[ia] = 1.0;
      out.pairing.emplace_back(ia, ia);
    } else {
      const auto ib = state_from_cells(b);
      v[ia] = 1.0 / std::sqrt(2.0);
      v[ib] = -1.0 / std::sqrt(2.0);
      out.pairing.emplace_back(ia, ib);
    }
    out.elements.push_back(std::move(v));
  };
  push("uuuuuudd", "");
  push("uuuudduu", "");
  push("uudduuuu", "");
  push("dduuuuuu", "");
  push("udduuuuu", "duuduuuu");  // s5:  ud du uu uu
  push("uduuduuu", "duuuuduu");  // s6:  ud uu du uu
  push("uduuuudu", "duuuuuud");  // s7:  ud uu uu du
  push("uuuuuddu", "uuuuduud");  // s8:  uu uu ud du
  push("uuuduudu", "uuduuuud");  // s9:  uu ud uu du
  push("uuudduuu", "uuduuduu");  // s10: uu ud du uu
  return out;
}

StateVector SpectrumResult::state_in_full_space(std::size_t k) const {
  StateVector sv(params.n_qubits());
  auto& a = sv.amplitudes();
  std::fill(a.begin(), a.end(), Amplitude(0));
  for (std::size_t i = 0; i < basis.size(); ++i) a[basis[i]] = states[k][i];
  return sv;
}

SpectrumResult eigensolve_sector(const LatticeParams& p, const SectorSpec& spec,
                                 std::size_t k) {
  p.validate();
  if (p.n_qubits() > 16) throw capacity_error("dense solve limited to 2N <= 16");
  auto basis = sector_basis(p.n_sites, spec);
  if (basis.empty()) throw parameter_error("empty sector");

  const auto h = build_hamiltonian(p);
  Eigen::MatrixXd hs = restrict_to_basis(h, basis);

  Eigen::MatrixXd projector;  // columns: singlet-subspace basis
  if (spec.singlet_only) {
    const auto charges = charge_operators(p.n_sites);
    PauliSum q2 = charges.q_x * charges.q_x;
    q2 += charges.q_y * charges.q_y;
    q2 += charges.q_z * charges.q_z;
    q2.canonicalize();
    Eigen::MatrixXd q2s = restrict_to_basis(q2, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q2s);
    std::vector<int> null_cols;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) < 1e-10) null_cols.push_back(i);
    if (null_cols.empty()) throw parameter_error("empty singlet sector");
    projector.resize(basis.size(), null_cols.size());
    for (std::size_t i = 0; i < null_cols.size(); ++i)
      projector.col(i) = es.eigenvectors().col(null_cols[i]);
    hs = projector.transpose() * hs * projector;
  }

  if (k > static_cast<std::size_t>(hs.rows()))
    throw parameter_error("k exceeds sector dimension");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
  SpectrumResult out;
  out.sector = spec;
  out.params = p;
  out.basis = basis;
  for (std::size_t i = 0; i < k; ++i) {
    out.energies.push_back(es.eigenvalues()(i));
    Eigen::VectorXd v = es.eigenvectors().col(i);
    if (spec.singlet_only) v = projector * v;
    for (int j = 0; j < v.size(); ++j) {
      if (std::abs(v(j)) > 1e-12) {
        if (v(j) < 0) v = -v;
        break;
      }
    }
    out.states.emplace_back(v.data(), v.data() + v.size());
  }
  return out;
}

HadronMasses hadron_masses(const LatticeParams& p) {
  const auto vac = eigensolve_sector(p, {0, false, false}, 2);
  const auto bar = eigensolve_sector(p, {1, false, false}, 1);
  HadronMasses m{};
  m.e_vacuum = vac.energies[0];
  m.e_meson = vac.energies[1];
  m.e_baryon = bar.energies[0];
  m.baryon_mass = m.e_baryon - m.e_vacuum;
  m.meson_mass = m.e_meson - m.e_vacuum;
  if (std::abs(m.baryon_mass) > 1e-12) m.ratio = m.meson_mass / m.baryon_mass;
  return m;
}

}  // namespace su2lgt
