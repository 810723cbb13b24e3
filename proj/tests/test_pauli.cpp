#include <doctest.h>

#include <su2lgt/measurement_group.hpp>
#include <su2lgt/pauli_string.hpp>
#include <su2lgt/pauli_sum.hpp>
#include <su2lgt/rng.hpp>

using namespace su2lgt;

namespace {

PauliString random_string(unsigned n, KeyedRng& rng) {
  const std::uint64_t mask = (1ull << n) - 1;
  return PauliString(n, rng.next_u64() & mask, rng.next_u64() & mask);
}

}  // namespace

TEST_CASE("word round trip and factors") {
  const auto s = PauliString::from_word("XIZY");
  CHECK(s.n_qubits() == 4);
  CHECK(s.factor(0) == 'X');
  CHECK(s.factor(1) == 'I');
  CHECK(s.factor(2) == 'Z');
  CHECK(s.factor(3) == 'Y');
  CHECK(s.to_word() == "XIZY");
  CHECK(s.support_size() == 3);
  CHECK(s.support_mask() == 0b1101);
  CHECK(PauliString::identity(3).is_identity());
  CHECK_THROWS(PauliString::from_word("XQ"));
}

TEST_CASE("single-factor constructor") {
  const auto y = PauliString::single(5, 2, 'Y');
  CHECK(y.x_mask() == 0b00100);
  CHECK(y.z_mask() == 0b00100);
  CHECK(y.to_word() == "IIYII");
}

TEST_CASE("multiply matches dense products") {
  KeyedRng rng(7, 0);
  for (int it = 0; it < 200; ++it) {
    const auto a = random_string(4, rng);
    const auto b = random_string(4, rng);
    const auto [s, phase] = multiply(a, b);
    const Eigen::MatrixXcd lhs = dense_pauli(a) * dense_pauli(b);
    const Eigen::MatrixXcd rhs = phase * dense_pauli(s);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("commutes matches dense commutators") {
  KeyedRng rng(8, 0);
  for (int it = 0; it < 200; ++it) {
    const auto a = random_string(3, rng);
    const auto b = random_string(3, rng);
    const Eigen::MatrixXcd da = dense_pauli(a), db = dense_pauli(b);
    const double comm = (da * db - db * da).cwiseAbs().maxCoeff();
    CHECK(commutes(a, b) == (comm < 1e-14));
    if (qubitwise_compatible(a, b)) CHECK(commutes(a, b));
  }
}

TEST_CASE("qubitwise compatibility is per-position agreement") {
  CHECK(qubitwise_compatible(PauliString::from_word("XIZ"),
                             PauliString::from_word("XZZ")));
  CHECK(!qubitwise_compatible(PauliString::from_word("XIZ"),
                              PauliString::from_word("YIZ")));
}

TEST_CASE("sum accumulation and canonicalization") {
  PauliSum h(2);
  h.add(PauliString::from_word("XZ"), 0.5);
  h.add(PauliString::from_word("XZ"), 0.5);
  h.add(PauliString::from_word("ZZ"), 1e-14);
  h.canonicalize();
  CHECK(h.size() == 1);
  CHECK(h.coefficient(PauliString::from_word("XZ")) == doctest::Approx(1.0));
}

TEST_CASE("non-Hermitian residue is rejected") {
  PauliSum h(1);
  h.add(PauliString::from_word("X"), std::complex<double>(0, 1));
  CHECK_THROWS(h.canonicalize());
}

TEST_CASE("sum product matches dense") {
  KeyedRng rng(9, 0);
  PauliSum a(3), b(3);
  for (int i = 0; i < 4; ++i) {
    a.add(random_string(3, rng), rng.next_double() - 0.5);
    b.add(random_string(3, rng), rng.next_double() - 0.5);
  }
  a.canonicalize();
  b.canonicalize();
  const PauliSum ab = a * a;  // squares of Hermitian sums stay real
  CHECK((ab.to_dense() - a.to_dense() * a.to_dense()).cwiseAbs().maxCoeff() <
        1e-12);
  const PauliSum comm = commutator_times_minus_i(a, b);
  const Eigen::MatrixXcd da = a.to_dense(), db = b.to_dense();
  const Eigen::MatrixXcd expect =
      std::complex<double>(0, -1) * (da * db - db * da);
  CHECK((comm.to_dense() - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("text round trip preserves all digits") {
  PauliSum h(3);
  h.add(PauliString::from_word("XYZ"), 1.0 / 3.0);
  h.add(PauliString::from_word("ZII"), -0.123456789012345678);
  const auto back = PauliSum::from_text(h.to_text());
  CHECK(back.approx_equal(h, 0.0));
  CHECK(back.to_text() == h.to_text());
}

TEST_CASE("fixed-qubit projection matches dense partial expectation") {
  KeyedRng rng(10, 0);
  PauliSum h(4);
  for (int i = 0; i < 8; ++i) h.add(random_string(4, rng), rng.next_double());
  h.canonicalize();
  // Fix qubits 1 (up) and 3 (down); compare on full basis states.
  const auto proj = h.project_fixed_qubits({{1, true}, {3, false}});
  CHECK(proj.n_qubits() == 2);
  for (std::uint64_t r = 0; r < 4; ++r) {
    // Reduced index r = (q0, q2); full index with q1=0, q3=1.
    const std::uint64_t full = (r & 1) | ((r >> 1) & 1) << 2 | (1ull << 3);
    const Eigen::MatrixXcd dh = h.to_dense();
    CHECK(std::abs(dh(full, full).real() -
                   proj.to_dense()(r, r).real()) < 1e-12);
  }
}

TEST_CASE("measurement grouping covers every term compatibly") {
  KeyedRng rng(11, 0);
  PauliSum h(4);
  h.add(PauliString::identity(4), 2.0);
  for (int i = 0; i < 20; ++i) h.add(random_string(4, rng), rng.next_double());
  h.canonicalize();

  const auto groups = group_for_measurement(h);
  std::size_t covered = 0;
  for (const auto& g : groups) {
    covered += g.members.size();
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      for (std::size_t j = i + 1; j < g.members.size(); ++j)
        CHECK(qubitwise_compatible(g.members[i], g.members[j]));
      // Every member must be readable in the group's basis.
      for (unsigned q = 0; q < 4; ++q) {
        const char f = g.members[i].factor(q);
        if (f != 'I') CHECK(g.basis_assignment[q] == f);
      }
    }
  }
  const std::size_t non_identity =
      h.size() - (h.identity_coefficient() != 0.0 ? 1 : 0);
  CHECK(covered == non_identity);
}
