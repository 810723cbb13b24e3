#include "su2lgt/model.hpp"

#include <bit>
#include <vector>

namespace su2lgt {

namespace {

void check_sites(unsigned n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw parameter_error("n_sites must be even and >= 2");
}

enum class Ladder { Plus, Minus, Z };

/// Product of sigma^+/sigma^-/sigma^z factors on distinct qubits, plus its
/// Hermitian conjugate; always real-weighted.
PauliSum ladder_product_plus_hc(
    unsigned n_qubits, const std::vector<std::pair<unsigned, Ladder>>& ops,
    double scale) {
  PauliSum out(n_qubits);
  const std::size_t n_pm = ops.size();
  // Expand each sigma^+- as (X +- iY)/2 over all choices.
  std::vector<std::size_t> pm_positions;
  for (std::size_t i = 0; i < n_pm; ++i)
    if (ops[i].second != Ladder::Z) pm_positions.push_back(i);
  const std::size_t combos = 1ull << pm_positions.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::uint64_t x = 0, z = 0;
    std::complex<double> coeff = scale;
    std::size_t pm_idx = 0;
    for (const auto& [q, l] : ops) {
      if (l == Ladder::Z) {
        z |= 1ull << q;
        continue;
      }
      const bool pick_y = (mask >> pm_idx) & 1;
      ++pm_idx;
      if (pick_y) {
        x |= 1ull << q;
        z |= 1ull << q;
        coeff *= std::complex<double>(0, l == Ladder::Plus ? 0.5 : -0.5);
      } else {
        x |= 1ull << q;
        coeff *= 0.5;
      }
    }
    // term + h.c.: Pauli strings are Hermitian, so keep 2*Re(coeff).
    out.add(PauliString(n_qubits, x, z), 2 * coeff.real());
  }
  out.canonicalize();
  return out;
}

}  // namespace

void LatticeParams::validate() const {
  check_sites(n_sites);
  if (m_tilde < 0) throw parameter_error("m_tilde must be >= 0");
  if (x <= 0) throw parameter_error("x must be > 0");
}

PauliSum build_mass_term(unsigned n_sites) {
  check_sites(n_sites);
  const unsigned nq = 2 * n_sites;
  PauliSum h(nq);
  for (unsigned n = 1; n <= n_sites; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    h.add(PauliString::single(nq, 2 * n - 2, 'Z'), sign / 2);
    h.add(PauliString::single(nq, 2 * n - 1, 'Z'), sign / 2);
  }
  h.add(PauliString::identity(nq), static_cast<double>(n_sites));
  h.canonicalize();
  return h;
}

PauliSum build_kinetic_term(unsigned n_sites) {
  check_sites(n_sites);
  const unsigned nq = 2 * n_sites;
  PauliSum h(nq);
  for (unsigned n = 1; n <= n_sites - 1; ++n) {
    // Red and green hops between cells n and n+1 (qubits are 0-based).
    h.add(ladder_product_plus_hc(nq,
                                 {{2 * n - 2, Ladder::Plus},
                                  {2 * n - 1, Ladder::Z},
                                  {2 * n, Ladder::Minus}},
                                 -0.5));
    h.add(ladder_product_plus_hc(nq,
                                 {{2 * n - 1, Ladder::Plus},
                                  {2 * n, Ladder::Z},
                                  {2 * n + 1, Ladder::Minus}},
                                 -0.5));
  }
  h.canonicalize();
  return h;
}

PauliSum build_electric_term(unsigned n_sites) {
  check_sites(n_sites);
  const unsigned nq = 2 * n_sites;
  const unsigned N = n_sites;
  PauliSum h(nq);
  for (unsigned n = 1; n <= N - 1; ++n) {
    const double w = 3.0 / 16.0 * (N - n);
    h.add(PauliString::identity(nq), w);
    auto zz = multiply(PauliString::single(nq, 2 * n - 2, 'Z'),
                       PauliString::single(nq, 2 * n - 1, 'Z'));
    h.add(zz.first, -w);
  }
  for (unsigned n = 1; n + 1 <= N - 1; ++n) {
    for (unsigned m = n + 1; m <= N - 1; ++m) {
      const double w = (N - m) / 16.0;
      // (Z_{2n-1} - Z_{2n})(Z_{2m-1} - Z_{2m}) in 1-based site labels.
      const unsigned qa = 2 * n - 2, qb = 2 * n - 1;
      const unsigned qc = 2 * m - 2, qd = 2 * m - 1;
      const int sgn[2] = {1, -1};
      const unsigned first[2] = {qa, qb}, second[2] = {qc, qd};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          auto zz = multiply(PauliString::single(nq, first[i], 'Z'),
                             PauliString::single(nq, second[j], 'Z'));
          h.add(zz.first, w * sgn[i] * sgn[j]);
        }
      // Flip-flop part.
      h.add(ladder_product_plus_hc(nq,
                                   {{qa, Ladder::Plus},
                                    {qb, Ladder::Minus},
                                    {qd, Ladder::Plus},
                                    {qc, Ladder::Minus}},
                                   (N - m) / 2.0));
    }
  }
  h.canonicalize();
  return h;
}

PauliSum build_hamiltonian(const LatticeParams& p) {
  p.validate();
  PauliSum h(p.n_qubits());
  h.add(build_mass_term(p.n_sites), p.m_tilde);
  h.add(build_electric_term(p.n_sites), 1.0 / p.x);
  h.add(build_kinetic_term(p.n_sites), 1.0);
  h.canonicalize();
  return h;
}

ChargeOperators charge_operators(unsigned n_sites) {
  check_sites(n_sites);
  const unsigned nq = 2 * n_sites;
  ChargeOperators c{PauliSum(nq), PauliSum(nq), PauliSum(nq)};
  for (unsigned n = 1; n <= n_sites; ++n) {
    const unsigned a = 2 * n - 2, b = 2 * n - 1;
    c.q_x.add(ladder_product_plus_hc(
        nq, {{a, Ladder::Plus}, {b, Ladder::Minus}}, 0.5));
    // (i/2)(sigma^-_a sigma^+_b - h.c.) = (1/4)(Y_a X_b - X_a Y_b)
    auto yx = multiply(PauliString::single(nq, a, 'Y'),
                       PauliString::single(nq, b, 'X'));
    auto xy = multiply(PauliString::single(nq, a, 'X'),
                       PauliString::single(nq, b, 'Y'));
    c.q_y.add(yx.first, 0.25);
    c.q_y.add(xy.first, -0.25);
    c.q_z.add(PauliString::single(nq, a, 'Z'), 0.25);
    c.q_z.add(PauliString::single(nq, b, 'Z'), -0.25);
  }
  c.q_x.canonicalize();
  c.q_y.canonicalize();
  c.q_z.canonicalize();
  return c;
}

PauliSum baryon_number_operator(unsigned n_sites) {
  check_sites(n_sites);
  const unsigned nq = 2 * n_sites;
  PauliSum b(nq);
  for (unsigned q = 0; q < nq; ++q)
    b.add(PauliString::single(nq, q, 'Z'), 0.25);
  return b;
}

TermCount pauli_term_count(unsigned n_sites) {
  check_sites(n_sites);
  const auto h = build_hamiltonian({n_sites, 1.0, 1.0});
  const std::size_t formula =
      6 * n_sites * n_sites - 11 * n_sites + 9;
  return {h.size(), formula};
}

std::uint64_t strong_coupling_state(unsigned n_sites, int baryon_number) {
  check_sites(n_sites);
  if (baryon_number != 0 && baryon_number != 1)
    throw parameter_error("baryon number must be 0 or 1");
  std::uint64_t idx = 0;
  for (unsigned n = 1; n <= n_sites; ++n) {
    bool down = (n % 2 == 0);  // even cells down-down in the bare vacuum
    if (baryon_number == 1 && n == n_sites) down = false;
    if (down) idx |= (1ull << (2 * n - 2)) | (1ull << (2 * n - 1));
  }
  return idx;
}

double diagonal_expectation(const PauliSum& h, std::uint64_t basis_index) {
  double acc = 0;
  for (const auto& [s, c] : h.terms()) {
    if (s.x_mask() != 0) continue;
    const auto z = s.z_mask();
    const int parity = std::popcount(z & basis_index) % 2;
    acc += parity ? -c : c;
  }
  return acc;
}

}  // namespace su2lgt
