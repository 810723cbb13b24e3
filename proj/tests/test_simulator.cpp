#include <doctest.h>

#include <cmath>

#include <su2lgt/ansatz.hpp>
#include <su2lgt/mitigation.hpp>
#include <su2lgt/model.hpp>
#include <su2lgt/sampling.hpp>

using namespace su2lgt;

namespace {

const ParamVector kTheta{0.4, 1.1};

}  // namespace

TEST_CASE("sampled energies converge to the exact expectation") {
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  const StateVector psi = run_noiseless(c, kTheta, 0);
  const double exact = psi.expectation(h);

  const auto groups = group_for_measurement(h);
  const auto records = sample_groups(psi, groups, 200000, nullptr, 17);
  const auto est = estimate_expectations(records, h);
  CHECK(est.std_error > 0);
  CHECK(std::abs(est.energy - exact) < 5 * est.std_error);
}

TEST_CASE("sampling is reproducible and seed-sensitive") {
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  const StateVector psi = run_noiseless(c, kTheta, 0);
  const auto groups = group_for_measurement(h);
  const auto a = sample_groups(psi, groups, 1000, nullptr, 42);
  const auto b = sample_groups(psi, groups, 1000, nullptr, 42);
  const auto d = sample_groups(psi, groups, 1000, nullptr, 43);
  REQUIRE(a.size() == b.size());
  bool identical = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].counts != b[i].counts) identical = false;
    if (a[i].counts != d[i].counts) differs = true;
  }
  CHECK(identical);
  CHECK(differs);
}

TEST_CASE("noiseless trajectory equals the pure state") {
  const Circuit c = ansatz_n2_singlet_family();
  NoiseModel none;
  const auto a = apply_circuit(c, kTheta, 0, &none, 0).amplitudes();
  const auto b = run_noiseless(c, kTheta, 0).amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) == 0);
}

TEST_CASE("trajectory average approaches the exact noisy expectation") {
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  NoiseModel noise;
  noise.two_qubit_depolarizing_p = 0.05;
  noise.seed = 5;
  const double exact = exact_noisy_expectation(c, kTheta, 0, noise, h);
  double mean = 0;
  const int n_traj = 4000;
  for (int t = 0; t < n_traj; ++t)
    mean += apply_circuit(c, kTheta, 0, &noise, t).expectation(h);
  mean /= n_traj;
  CHECK(std::abs(mean - exact) < 0.05);
  // Zero depolarizing probability reduces to the ideal value.
  noise.two_qubit_depolarizing_p = 0.0;
  const double ideal = run_noiseless(c, kTheta, 0).expectation(h);
  CHECK(exact_noisy_expectation(c, kTheta, 0, noise, h) ==
        doctest::Approx(ideal).epsilon(1e-12));
}

TEST_CASE("readout inversion recovers an analytically confused distribution") {
  const unsigned n = 3;
  const NoiseModel noise = uniform_readout_noise(n, 0.07);
  // True distribution.
  std::vector<double> p(1ull << n, 0.0);
  p[0b010] = 0.6;
  p[0b111] = 0.3;
  p[0b001] = 0.1;
  // Confuse it exactly with the per-qubit tensor channel.
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
    CHECK(std::abs(rec[i] - p[i]) < 1e-12);
}

TEST_CASE("sampled readout mitigation recovers the distribution at 5 sigma") {
  const unsigned n = 2;
  const double flip = 0.06;
  const NoiseModel noise = uniform_readout_noise(n, flip, 99);
  StateVector psi(n);
  psi.amplitudes() = {0.8, 0.0, 0.0, 0.6};
  MeasurementGroup g;
  g.members = {PauliString::from_word("ZZ")};
  g.basis_assignment = "ZZ";
  g.representative = g.members[0];
  const std::size_t shots = 100000;
  const auto rec = sample_group(psi, g, shots, &noise, 99, 0);
  const auto probs = counts_to_probabilities(rec, n);
  const auto fixed = readout_mitigate(probs, noise.readout_confusion);
  for (std::size_t i : {0ull, 3ull}) {
    const double truth = i == 0 ? 0.64 : 0.36;
    const double sigma = std::sqrt(truth * (1 - truth) / shots) / (1 - 2 * flip);
    CHECK(std::abs(fixed[i] - truth) < 5 * sigma);
  }
}

TEST_CASE("CNOT folding preserves the ideal state") {
  Circuit c = ansatz_n2_singlet_family();
  const Circuit folded = fold_cnots(c, 3);
  std::size_t cnots = 0, folded_cnots = 0;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::CNOT) ++cnots;
  for (const auto& g : folded.gates)
    if (g.kind == GateKind::CNOT) ++folded_cnots;
  CHECK(folded_cnots == 3 * cnots);
  const auto a = run_noiseless(c, kTheta, 0).amplitudes();
  const auto b = run_noiseless(folded, kTheta, 0).amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-13);
  CHECK_THROWS(fold_cnots(c, 2));
}

TEST_CASE("ZNE beats the unmitigated value on the vacuum ansatz") {
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  NoiseModel noise;
  noise.two_qubit_depolarizing_p = 0.01;
  const double ideal = run_noiseless(c, kTheta, 0).expectation(h);
  const auto z = zne_cnot_folding(c, kTheta, h, noise, {1, 3, 5}, 0);
  CHECK(std::abs(z.extrapolated - ideal) < std::abs(z.values[0] - ideal));
  // Noise monotone in the fold factor (energy drifts toward tr(H)/dim).
  CHECK(std::abs(z.values[2] - ideal) > std::abs(z.values[0] - ideal));
}

TEST_CASE("convex-mixture error difference cancels exactly") {
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  const StateVector psi = run_noiseless(c, kTheta, 0);
  const StateVector psi2 = run_noiseless(c, {1.9, 0.2}, 0);
  const StateVector err = StateVector::basis_state(4, 0b0101);
  const double pe = 0.13;
  // The same error admixture shifts both energies by the same amount, so
  // it cancels in the difference.
  const double d_noisy = mixed_state_expectation(h, psi, err, pe) -
                         mixed_state_expectation(h, psi2, err, pe);
  const double d_ideal =
      (1 - pe) * (psi.expectation(h) - psi2.expectation(h));
  CHECK(std::abs(d_noisy - d_ideal) < 1e-10);
}

TEST_CASE("overlap probability is exact for self and orthogonal states") {
  const Circuit c = ansatz_n2_singlet_family();
  CHECK(overlap_probability(c, kTheta, kTheta, 0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Orthogonal reference: rotate fully into the second basis state.
  const ParamVector a{0.0, 0.0}, b{M_PI / 2, 0.0};
  CHECK(overlap_probability(c, a, b, 0) == doctest::Approx(0.0).epsilon(1e-12));
  // Sampled estimate is reproducible and close.
  const double s1 = overlap_probability(c, kTheta, {0.3, 0.9}, 0, 50000,
                                        nullptr, 7);
  const double s2 = overlap_probability(c, kTheta, {0.3, 0.9}, 0, 50000,
                                        nullptr, 7);
  const double exact = overlap_probability(c, kTheta, {0.3, 0.9}, 0);
  CHECK(s1 == s2);
  CHECK(std::abs(s1 - exact) < 0.01);
}
