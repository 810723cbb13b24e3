#include "su2lgt/conjugation.hpp"

#include <algorithm>
#include <cmath>

#include "su2lgt/statevector.hpp"

namespace su2lgt {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_quarter_ry(const Gate& g) {
  if (g.kind != GateKind::RY || !g.param || g.param->symbolic) return false;
  const double a = std::fmod(std::fmod(g.param->fixed, 2 * kPi) + 2 * kPi,
                             2 * kPi);
  return std::abs(a - kPi / 2) < 1e-12 || std::abs(a - 3 * kPi / 2) < 1e-12;
}

struct Bits {
  bool x, z;
};

Bits get_bits(const PauliString& s, unsigned q) {
  return {static_cast<bool>((s.x_mask() >> q) & 1),
          static_cast<bool>((s.z_mask() >> q) & 1)};
}

void set_bits(std::uint64_t& x, std::uint64_t& z, unsigned q, Bits b) {
  if (b.x) x |= 1ull << q;
  if (b.z) z |= 1ull << q;
}

// Conjugation by a plain (filled-control) CNOT in symplectic form:
//   x_t' = x_t ^ x_c,  z_c' = z_c ^ z_t,
//   sign flips iff x_c & z_t & !(x_t ^ z_c).
PauliTerm conjugate_cnot(const PauliTerm& t, unsigned c, unsigned tq) {
  const auto bc = get_bits(t.string, c), bt = get_bits(t.string, tq);
  std::uint64_t x = t.string.x_mask() & ~((1ull << c) | (1ull << tq));
  std::uint64_t z = t.string.z_mask() & ~((1ull << c) | (1ull << tq));
  set_bits(x, z, c, {bc.x, bc.z != bt.z});
  set_bits(x, z, tq, {bt.x != bc.x, bt.z});
  double coeff = t.coefficient;
  if (bc.x && bt.z && !(bt.x ^ bc.z)) coeff = -coeff;
  return {PauliString(t.string.n_qubits(), x, z), coeff};
}

PauliTerm conjugate_x(const PauliTerm& t, unsigned q) {
  const auto b = get_bits(t.string, q);
  return {t.string, b.z ? -t.coefficient : t.coefficient};
}

}  // namespace

bool is_supported_clifford(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
      return true;
    case GateKind::SWAP:
      return true;
    case GateKind::CNOT:
      return true;
    case GateKind::RY:
      return is_quarter_ry(g);
    default:
      return false;
  }
}

PauliTerm conjugate_clifford(const PauliTerm& t, const Gate& g) {
  if (!is_supported_clifford(g))
    throw unsupported_gate_error("gate is not a supported Clifford");
  switch (g.kind) {
    case GateKind::X:
      return conjugate_x(t, g.target());
    case GateKind::SWAP: {
      const unsigned a = g.qubits[0], b = g.qubits[1];
      const auto ba = get_bits(t.string, a), bb = get_bits(t.string, b);
      std::uint64_t x = t.string.x_mask() & ~((1ull << a) | (1ull << b));
      std::uint64_t z = t.string.z_mask() & ~((1ull << a) | (1ull << b));
      set_bits(x, z, a, bb);
      set_bits(x, z, b, ba);
      return {PauliString(t.string.n_qubits(), x, z), t.coefficient};
    }
    case GateKind::CNOT: {
      const unsigned c = g.qubits[0], tq = g.qubits[1];
      if (g.control_polarity[0]) return conjugate_cnot(t, c, tq);
      // Open control: CNOT_open = X_c CNOT X_c.
      return conjugate_x(conjugate_cnot(conjugate_x(t, c), c, tq), c);
    }
    case GateKind::RY: {
      // Quarter turn about Y: Z -> sin*X + cos*Z with sin = +-1, cos = 0.
      const double a = g.param->fixed;
      const int sgn = std::sin(a) > 0 ? 1 : -1;
      const unsigned q = g.target();
      const auto b = get_bits(t.string, q);
      if (b.x == b.z) return t;  // I or Y invariant
      std::uint64_t x = t.string.x_mask() ^ (1ull << q);
      std::uint64_t z = t.string.z_mask() ^ (1ull << q);
      // Z -> -sgn*X, X -> sgn*Z
      const double coeff = (b.z ? -sgn : sgn) * t.coefficient;
      return {PauliString(t.string.n_qubits(), x, z), coeff};
    }
    default:
      throw unsupported_gate_error("unreachable");
  }
}

PauliSum conjugate_general(const PauliSum& h, const Gate& g,
                           std::size_t term_cap) {
  if (g.is_parameterized())
    throw std::invalid_argument("symbolic gate parameter in conjugation");
  g.validate();

  if (is_supported_clifford(g)) {
    PauliSum out(h.n_qubits());
    for (const auto& [s, c] : h.terms()) {
      const auto t = conjugate_clifford({s, c}, g);
      out.add(t.string, t.coefficient);
    }
    out.canonicalize();
    return out;
  }

  // Dense conjugation on the gate support: restrict each string to the
  // support, compute U^dag P U on 2^s dimensions and redecompose.
  std::vector<unsigned> support(g.qubits);
  std::sort(support.begin(), support.end());
  const unsigned s_n = static_cast<unsigned>(support.size());
  const std::uint64_t s_dim = 1ull << s_n;

  // Local copy of the gate acting on qubits 0..s_n-1.
  Gate local = g;
  for (auto& q : local.qubits)
    q = static_cast<unsigned>(
        std::lower_bound(support.begin(), support.end(), q) -
        support.begin());

  Eigen::MatrixXcd u(s_dim, s_dim);
  for (std::uint64_t col = 0; col < s_dim; ++col) {
    std::vector<Amplitude> v(s_dim, Amplitude(0));
    v[col] = 1.0;
    apply_gate_inplace(v, s_n, local, {});
    for (std::uint64_t row = 0; row < s_dim; ++row) u(row, col) = v[row];
  }

  // All 4^s_n local Pauli strings for the redecomposition.
  std::vector<Eigen::MatrixXcd> basis;
  std::vector<PauliString> basis_strings;
  for (std::uint64_t xz = 0; xz < s_dim * s_dim; ++xz) {
    const std::uint64_t x = xz % s_dim, z = xz / s_dim;
    basis_strings.emplace_back(s_n, x, z);
    basis.push_back(dense_pauli(basis_strings.back()));
  }

  PauliSum out(h.n_qubits());
  for (const auto& [str, c] : h.terms()) {
    // Split into support part and the rest.
    std::uint64_t sx = 0, sz = 0;
    for (unsigned i = 0; i < s_n; ++i) {
      set_bits(sx, sz, i, get_bits(str, support[i]));
    }
    std::uint64_t rest_x = str.x_mask(), rest_z = str.z_mask();
    for (unsigned q : support) {
      rest_x &= ~(1ull << q);
      rest_z &= ~(1ull << q);
    }
    const Eigen::MatrixXcd m =
        u.adjoint() * dense_pauli(PauliString(s_n, sx, sz)) * u;
    for (std::uint64_t k = 0; k < s_dim * s_dim; ++k) {
      const std::complex<double> coeff =
          (basis[k].adjoint() * m).trace() / static_cast<double>(s_dim);
      if (std::abs(coeff) < PauliSum::kDropTolerance) continue;
      std::uint64_t nx = rest_x, nz = rest_z;
      for (unsigned i = 0; i < s_n; ++i)
        set_bits(nx, nz, support[i], get_bits(basis_strings[k], i));
      out.add(PauliString(h.n_qubits(), nx, nz), c * coeff);
      if (out.size() > term_cap)
        throw std::runtime_error("conjugation term cap exceeded");
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace su2lgt
