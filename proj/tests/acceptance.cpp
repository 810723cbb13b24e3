// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier VQE criteria print their sub-results for inspection.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <su2lgt/ansatz.hpp>
#include <su2lgt/conjugation.hpp>
#include <su2lgt/exact.hpp>
#include <su2lgt/mitigation.hpp>
#include <su2lgt/protocols.hpp>

using namespace su2lgt;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("[%s] %2d. %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), dt, error.empty() ? "" : " exception: ",
              error.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

ParamVector random_theta(unsigned n, KeyedRng& rng) {
  ParamVector t(n);
  for (auto& v : t) v = rng.next_double() * 2 * M_PI;
  return t;
}

bool strong_coupling_normalization() {
  for (unsigned n : {2u, 4u, 6u, 8u})
    for (double m : {0.0, 0.5, 1.0, 5.0})
      for (double x : {0.05, 0.5, 1.0, 10.0}) {
        // Cancellation is exact in real arithmetic; the summation order
        // leaves at most a last-bit floating residue.
        const auto h = build_hamiltonian({n, m, x});
        if (std::abs(diagonal_expectation(h, strong_coupling_state(n, 0))) >
            1e-12)
          return false;
      }
  return true;
}

bool symmetry_suite() {
  for (unsigned n : {2u, 4u}) {
    const auto h = build_hamiltonian({n, 0.8, 1.3});
    const auto q = charge_operators(n);
    const auto b = baryon_number_operator(n);
    for (const auto* op : {&q.q_x, &q.q_y, &q.q_z, &b}) {
      auto comm = commutator_times_minus_i(h, *op);
      comm.canonicalize(1e-10);
      if (!comm.empty()) return false;
    }
    if (!commutator_times_minus_i(q.q_x, q.q_y).approx_equal(q.q_z, 1e-12))
      return false;
    if (!commutator_times_minus_i(q.q_y, q.q_z).approx_equal(q.q_x, 1e-12))
      return false;
    if (!commutator_times_minus_i(q.q_z, q.q_x).approx_equal(q.q_y, 1e-12))
      return false;
  }
  // N=6: matrix-free commutator action on the full 4096-dim space.
  const auto h6 = build_hamiltonian({6, 1.0, 1.0});
  const auto q6 = charge_operators(6);
  const auto b6 = baryon_number_operator(6);
  KeyedRng rng(12, 0);
  for (const auto* op : {&q6.q_x, &q6.q_y, &q6.q_z, &b6}) {
    for (int it = 0; it < 5; ++it) {
      std::vector<Amplitude> v(1ull << 12);
      for (auto& a : v)
        a = Amplitude(rng.next_double() - 0.5, rng.next_double() - 0.5);
      const auto hq = apply_pauli_sum(h6, apply_pauli_sum(*op, v));
      const auto qh = apply_pauli_sum(*op, apply_pauli_sum(h6, v));
      for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(hq[i] - qh[i]) > 1e-10) return false;
    }
  }
  return true;
}

bool term_count_diagnostic() {
  for (unsigned n = 2; n <= 8; n += 2) {
    const auto tc = pauli_term_count(n);
    if (tc.formula != 6 * n * n - 11 * n + 9) return false;
    // Constant offset -1: the electric and mass identity parts merge.
    if (tc.actual != tc.formula - 1) return false;
  }
  return pauli_term_count(4).formula == 61;
}

bool table_one() {
  const auto basis = sector_basis(4, {1, true, false});
  if (basis.size() != 16) return false;
  const auto sb = singlet_basis_n4_b1();
  if (sb.elements.size() != 10) return false;
  const auto q = charge_operators(4);
  for (const auto& el : sb.elements)
    for (const auto* op : {&q.q_x, &q.q_y, &q.q_z}) {
      const auto v = apply_pauli_sum(*op, el);
      double norm = 0;
      for (const auto& a : v) norm += std::norm(a);
      if (std::sqrt(norm) > 1e-12) return false;
    }
  return true;
}

bool baryon_mass_n4() {
  const auto rows = run_baryon_mass(4, 1.0, {0.01, 0.5, 1.0, 2.0, 5.0});
  bool ok = true;
  for (const auto& row : rows) {
    const LatticeParams p{4, 1.0, row.x};
    const auto ed = eigensolve_sector(p, {1, false, true}, 1);
    const double err = std::abs(row.e_x - ed.energies[0]);
    std::printf("      x=%.2f  E_b=%.8f  ED=%.8f  |diff|=%.2e  M_b=%.4f\n",
                row.x, row.e_x, ed.energies[0], err, row.mass);
    if (row.x >= 0.5 && err > 1e-4) ok = false;
    if (row.x == 0.01 && std::abs(row.mass - 2.0) > 0.1) ok = false;
  }
  return ok;
}

bool meson_mass_n2() {
  bool ok = true;
  const auto pen = run_meson_mass(1.0, {1.0}, ExcitedMethod::Penalty);
  const auto gs = run_meson_mass(1.0, {1.0}, ExcitedMethod::GramSchmidt);
  const auto hm = hadron_masses({2, 1.0, 1.0});
  for (const auto* rows : {&pen, &gs}) {
    const auto& r = rows->front();
    std::printf(
        "      %s: E_v=%.8f  overlap=%.2e  E_m=%.8f  M_m=%.8f (ED %.8f)\n",
        rows == &pen ? "penalty     " : "gram-schmidt", r.e_v, r.overlap_final,
        r.e_x, r.mass, hm.meson_mass);
    if (!r.valid || std::abs(r.e_x - hm.e_meson) > 1e-4) ok = false;
  }
  if (std::abs(pen.front().e_x - gs.front().e_x) > 1e-4) ok = false;
  return ok;
}

bool continuum_trend() {
  // r(x) decreasing toward 1 at m_tilde = 1.
  double prev = 1e300, r1 = 0, r5 = 0;
  for (double x : {0.5, 1.0, 2.0, 5.0}) {
    const auto h = hadron_masses({4, 1.0, x});
    if (!h.ratio || *h.ratio >= prev || *h.ratio < 1.0) return false;
    prev = *h.ratio;
    if (x == 1.0) r1 = *h.ratio;
    if (x == 5.0) r5 = *h.ratio;
  }
  if (!(r5 < r1)) return false;

  // Contour tracing: for m_tilde >= 5 a constant-r curve steepens, i.e.
  // its x position changes less and less per unit mass.
  const auto ratio_at = [](double x, double m) {
    return *hadron_masses({4, m, x}).ratio;
  };
  const double r_star = ratio_at(1.0, 5.0);
  const auto contour_x = [&](double m) {
    double lo = 0.05, hi = 8.0;  // r decreases with x
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (ratio_at(mid, m) > r_star ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const double x5 = contour_x(5.0), x75 = contour_x(7.5), x10 = contour_x(10.0);
  std::printf("      contour r=%.4f: x(5)=%.4f x(7.5)=%.4f x(10)=%.4f\n",
              r_star, x5, x75, x10);
  return std::abs(x10 - x75) < std::abs(x75 - x5);
}

bool n6_brickwork() {
  bool ok = true;
  KeyedRng rng(31, 0);
  for (int b : {0, 1}) {
    const unsigned layers = b == 0 ? 10 : 15;
    // Magnetization is conserved at every theta by construction; spot-check
    // the property on random angles before trusting the optimized states.
    const Circuit ansatz = ansatz_brickwork(6, layers);
    const auto b_op = baryon_number_operator(6);
    const auto input = strong_coupling_state(6, b);
    for (int it = 0; it < 20; ++it) {
      const auto theta = random_theta(ansatz.n_params, rng);
      const double mag = run_noiseless(ansatz, theta, input).expectation(b_op);
      if (std::abs(mag - b) > 1e-12) ok = false;
    }

    OptimizerConfig cfg;
    cfg.tol = 1e-7;
    const auto rows = run_n6_brickwork({0.5, 1.0, 2.0}, {1.0, 2.0}, b, layers,
                                       cfg);
    for (const auto& r : rows) {
      const auto hm = hadron_masses({6, r.m_tilde, r.x});
      const double rel = std::abs(r.e_vqe - r.e_ed) / hm.baryon_mass;
      std::printf(
          "      B=%d m=%.1f x=%.1f  E_vqe=%.6f  E_ed=%.6f  rel=%.4f  "
          "|mag-B|=%.1e  evals=%zu\n",
          b, r.m_tilde, r.x, r.e_vqe, r.e_ed, rel,
          std::abs(r.magnetization - b), r.evals);
      if (rel > 0.05 || std::abs(r.magnetization - b) > 1e-12) ok = false;
    }
  }
  return ok;
}

bool circuit_splitting() {
  KeyedRng rng(10, 0);
  struct Case {
    Circuit circuit;
    std::uint64_t input;
    LatticeParams params;
  };
  const std::vector<Case> cases = {
      {ansatz_n2_singlet_family(), 0, {2, 1.0, 1.0}},
      {ansatz_n4_vacuum_family(), 0, {4, 0.5, 2.0}},
      {ansatz_n4_baryon_general(), 0, {4, 1.0, 1.0}},
  };
  for (const auto& [c, input, params] : cases) {
    const auto h = build_hamiltonian(params);
    const auto split = split_static_tail(c);
    const auto h_eff = conjugate_hamiltonian_by_tail(h, split.static_tail);
    const auto red = reduce_inactive_qubits(split.variational, h_eff, input);
    for (int it = 0; it < 100; ++it) {
      const auto theta = random_theta(c.n_params, rng);
      const double full = run_noiseless(c, theta, input).expectation(h);
      const double reduced = run_noiseless(red.circuit, theta, red.input_state)
                                 .expectation(red.hamiltonian);
      if (std::abs(full - reduced) > 1e-10) return false;
    }
  }
  // Non-Clifford tail (Toffolis) against the dense conjugation oracle.
  const Circuit c = ansatz_n4_baryon_general();
  const auto split = split_static_tail(c);
  bool has_toffoli = false;
  for (const auto& g : split.static_tail.gates)
    if (g.kind == GateKind::TOFFOLI) has_toffoli = true;
  if (!has_toffoli) return false;
  const auto h = build_hamiltonian({4, 1.0, 1.0});
  const auto h_eff = conjugate_hamiltonian_by_tail(h, split.static_tail);
  const std::size_t dim = 1ull << 8;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : split.static_tail.gates) {
    Eigen::MatrixXcd gm(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Amplitude> col(dim, 0.0);
      col[j] = 1.0;
      apply_gate_inplace(col, 8, g, {});
      for (std::size_t i = 0; i < dim; ++i) gm(i, j) = col[i];
    }
    u = gm * u;
  }
  const Eigen::MatrixXcd expect = u.adjoint() * h.to_dense() * u;
  return (h_eff.to_dense() - expect).cwiseAbs().maxCoeff() < 1e-10;
}

bool mitigation_suite() {
  // Exact synthetic-confusion inversion.
  const unsigned n = 3;
  const NoiseModel noise = uniform_readout_noise(n, 0.07);
  std::vector<double> p(1ull << n, 0.0);
  p[0b010] = 0.6;
  p[0b111] = 0.3;
  p[0b001] = 0.1;
  std::vector<double> obs(p.size(), 0.0);
  for (std::size_t t = 0; t < p.size(); ++t)
    for (std::size_t o = 0; o < p.size(); ++o) {
      double w = 1;
      for (unsigned q = 0; q < n; ++q)
        w *= noise.readout_confusion[q][(o >> q) & 1][(t >> q) & 1];
      obs[o] += w * p[t];
    }
  const auto rec = readout_mitigate(obs, noise.readout_confusion);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::abs(rec[i] - p[i]) > 1e-12) return false;

  // Sampled inversion at 1e5 shots within 5 sigma.
  {
    const double flip = 0.06;
    const NoiseModel ro = uniform_readout_noise(2, flip, 99);
    StateVector psi(2);
    psi.amplitudes() = {0.8, 0.0, 0.0, 0.6};
    MeasurementGroup g;
    g.members = {PauliString::from_word("ZZ")};
    g.basis_assignment = "ZZ";
    g.representative = g.members[0];
    const std::size_t shots = 100000;
    const auto sampled = sample_group(psi, g, shots, &ro, 99, 0);
    const auto fixed = readout_mitigate(counts_to_probabilities(sampled, 2),
                                        ro.readout_confusion);
    for (std::size_t i : {std::size_t{0}, std::size_t{3}}) {
      const double truth = i == 0 ? 0.64 : 0.36;
      const double sigma =
          std::sqrt(truth * (1 - truth) / shots) / (1 - 2 * flip);
      if (std::abs(fixed[i] - truth) > 5 * sigma) return false;
    }
  }

  // ZNE at p = 0.01, exact-expectation mode.
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  const ParamVector theta{0.4, 1.1};
  NoiseModel depol;
  depol.two_qubit_depolarizing_p = 0.01;
  const double ideal = run_noiseless(c, theta, 0).expectation(h);
  const auto z = zne_cnot_folding(c, theta, h, depol, {1, 3, 5}, 0);
  std::printf(
      "      ideal=%.6f fold1=%.6f fold3=%.6f fold5=%.6f extrapolated=%.6f\n",
      ideal, z.values[0], z.values[1], z.values[2], z.extrapolated);
  if (std::abs(z.extrapolated - ideal) >= std::abs(z.values[0] - ideal))
    return false;

  // Convex-error difference cancellation.
  const StateVector psi1 = run_noiseless(c, theta, 0);
  const StateVector psi2 = run_noiseless(c, {1.9, 0.2}, 0);
  const StateVector err = StateVector::basis_state(4, 0b0101);
  const double pe = 0.13;
  const double d_noisy = mixed_state_expectation(h, psi1, err, pe) -
                         mixed_state_expectation(h, psi2, err, pe);
  const double d_ideal = (1 - pe) * (psi1.expectation(h) - psi2.expectation(h));
  return std::abs(d_noisy - d_ideal) < 1e-10;
}

bool determinism() {
  Estimator est;
  est.mode = EstimatorMode::Sampled;
  est.shots = 600;
  est.seed = 21;
  OptimizerConfig cfg;
  cfg.budget = 80;
  const auto a = run_baryon_mass(2, 1.0, {0.8, 1.6}, est, cfg);
  const auto b = run_baryon_mass(2, 1.0, {0.8, 1.6}, est, cfg);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].e_v != b[i].e_v || a[i].e_x != b[i].e_x ||
        a[i].mass != b[i].mass || a[i].evals != b[i].evals)
      return false;

  const auto m1 = run_meson_mass(1.0, {1.0}, ExcitedMethod::Penalty, est, cfg);
  const auto m2 = run_meson_mass(1.0, {1.0}, ExcitedMethod::Penalty, est, cfg);
  return m1.front().e_x == m2.front().e_x &&
         m1.front().overlap_final == m2.front().overlap_final;
}

}  // namespace

int main() {
  criterion(1, "strong-coupling vacuum normalization",
            strong_coupling_normalization);
  criterion(2, "symmetry suite (charges, baryon number, su(2) algebra)",
            symmetry_suite);
  criterion(3, "Pauli term-count diagnostic", term_count_diagnostic);
  criterion(4, "N=4 B=1 sector table and singlet basis", table_one);
  criterion(5, "baryon mass VQE, N=4", baryon_mass_n4);
  criterion(6, "meson mass VQE, N=2 (penalty and Gram-Schmidt)",
            meson_mass_n2);
  criterion(7, "continuum-limit mass-ratio trend", continuum_trend);
  criterion(8, "N=6 brickwork VQE vs ED", n6_brickwork);
  criterion(9, "circuit-splitting equivalence", circuit_splitting);
  criterion(10, "mitigation suite (readout, ZNE, convex cancellation)",
            mitigation_suite);
  criterion(11, "sampled-mode determinism", determinism);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
