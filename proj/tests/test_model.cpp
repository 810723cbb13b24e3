#include <doctest.h>

#include <su2lgt/exact.hpp>
#include <su2lgt/model.hpp>

using namespace su2lgt;

TEST_CASE("parameter validation") {
  CHECK_THROWS(build_hamiltonian({3, 1.0, 1.0}));
  CHECK_THROWS(build_hamiltonian({2, -1.0, 1.0}));
  CHECK_THROWS(build_hamiltonian({2, 1.0, 0.0}));
}

TEST_CASE("strong-coupling vacuum has exactly zero energy") {
  for (unsigned n : {2u, 4u, 6u, 8u})
    for (double m : {0.0, 0.5, 3.0})
      for (double x : {0.1, 1.0, 10.0}) {
        const auto h = build_hamiltonian({n, m, x});
        const auto vac = strong_coupling_state(n, 0);
        CHECK(std::abs(diagonal_expectation(h, vac)) < 1e-12);
      }
}

TEST_CASE("baryon strong-coupling gap is twice the mass") {
  for (unsigned n : {2u, 4u, 6u}) {
    const double m = 1.7;
    const auto h = build_hamiltonian({n, m, 1.0});
    const double gap = diagonal_expectation(h, strong_coupling_state(n, 1)) -
                       diagonal_expectation(h, strong_coupling_state(n, 0));
    CHECK(gap == doctest::Approx(2 * m).epsilon(1e-12));
  }
}

TEST_CASE("term count sits one below the quadratic formula") {
  for (unsigned n = 2; n <= 8; n += 2) {
    const auto tc = pauli_term_count(n);
    CHECK(tc.formula == 6 * n * n - 11 * n + 9);
    CHECK(tc.actual == tc.formula - 1);
  }
  CHECK(pauli_term_count(4).formula == 61);
}

TEST_CASE("charges and baryon number commute with H as Pauli sums") {
  for (unsigned n : {2u, 4u}) {
    const auto h = build_hamiltonian({n, 0.8, 1.3});
    const auto q = charge_operators(n);
    const auto b = baryon_number_operator(n);
    for (const auto* op : {&q.q_x, &q.q_y, &q.q_z, &b}) {
      auto comm = commutator_times_minus_i(h, *op);
      comm.canonicalize(1e-10);
      CHECK(comm.empty());
    }
  }
}

TEST_CASE("N=6 commutators vanish on the full 4096-dim space") {
  const auto h = build_hamiltonian({6, 1.0, 1.0});
  const auto q = charge_operators(6);
  KeyedRng rng(12, 0);
  for (const auto* op : {&q.q_x, &q.q_y, &q.q_z}) {
    for (int it = 0; it < 5; ++it) {
      std::vector<Amplitude> v(1ull << 12);
      for (auto& a : v)
        a = Amplitude(rng.next_double() - 0.5, rng.next_double() - 0.5);
      const auto hq = apply_pauli_sum(h, apply_pauli_sum(*op, v));
      const auto qh = apply_pauli_sum(*op, apply_pauli_sum(h, v));
      double diff = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        diff = std::max(diff, std::abs(hq[i] - qh[i]));
      CHECK(diff < 1e-10);
    }
  }
}

TEST_CASE("charges close the su(2) algebra") {
  for (unsigned n : {2u, 4u}) {
    const auto q = charge_operators(n);
    // [Qx, Qy] = i Qz and cyclic.
    CHECK(commutator_times_minus_i(q.q_x, q.q_y).approx_equal(q.q_z, 1e-12));
    CHECK(commutator_times_minus_i(q.q_y, q.q_z).approx_equal(q.q_x, 1e-12));
    CHECK(commutator_times_minus_i(q.q_z, q.q_x).approx_equal(q.q_y, 1e-12));
  }
}

TEST_CASE("Hamiltonian pieces recombine linearly") {
  const LatticeParams p{4, 0.7, 2.5};
  PauliSum h(8);
  h.add(build_mass_term(4), p.m_tilde);
  h.add(build_electric_term(4), 1.0 / p.x);
  h.add(build_kinetic_term(4), 1.0);
  h.canonicalize();
  CHECK(h.approx_equal(build_hamiltonian(p), 1e-14));
}

TEST_CASE("strong-coupling states carry the right baryon number") {
  for (unsigned n : {2u, 4u, 6u, 8u}) {
    const auto b = baryon_number_operator(n);
    CHECK(diagonal_expectation(b, strong_coupling_state(n, 0)) ==
          doctest::Approx(0.0));
    CHECK(diagonal_expectation(b, strong_coupling_state(n, 1)) ==
          doctest::Approx(1.0));
  }
}
