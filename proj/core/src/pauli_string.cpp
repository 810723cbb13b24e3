#include "su2lgt/pauli_string.hpp"

#include <bit>

namespace su2lgt {

PauliString::PauliString(unsigned n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits > 64) throw dimension_error("at most 64 qubits supported");
  const std::uint64_t valid =
      n_qubits == 64 ? ~0ull : ((1ull << n_qubits) - 1);
  if ((x_ & ~valid) || (z_ & ~valid))
    throw dimension_error("mask bits beyond n_qubits");
}

PauliString PauliString::from_word(const std::string& word) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < word.size(); ++q) {
    switch (word[q]) {
      case 'I':
        break;
      case 'X':
        x |= 1ull << q;
        break;
      case 'Y':
        x |= 1ull << q;
        z |= 1ull << q;
        break;
      case 'Z':
        z |= 1ull << q;
        break;
      default:
        throw std::invalid_argument("invalid Pauli character in word");
    }
  }
  return PauliString(static_cast<unsigned>(word.size()), x, z);
}

PauliString PauliString::single(unsigned n, unsigned qubit, char pauli) {
  std::string w(n, 'I');
  w.at(qubit) = pauli;
  return from_word(w);
}

unsigned PauliString::support_size() const {
  return static_cast<unsigned>(std::popcount(x_ | z_));
}

char PauliString::factor(unsigned q) const {
  const bool x = (x_ >> q) & 1, z = (z_ >> q) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_word() const {
  std::string w(n_, 'I');
  for (unsigned q = 0; q < n_; ++q) w[q] = factor(q);
  return w;
}

namespace {

void check_dims(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw dimension_error("qubit count mismatch");
}

}  // namespace

std::pair<PauliString, std::complex<double>> multiply(const PauliString& a,
                                                      const PauliString& b) {
  check_dims(a, b);
  // Phase from commuting b's X part through a's Z part and the Y
  // recombination, tracked as a power of i per qubit.
  int ipow = 0;
  for (unsigned q = 0; q < a.n_qubits(); ++q) {
    const int ax = (a.x_mask() >> q) & 1, az = (a.z_mask() >> q) & 1;
    const int bx = (b.x_mask() >> q) & 1, bz = (b.z_mask() >> q) & 1;
    // i-exponent of sigma(ax,az) * sigma(bx,bz) relative to sigma(ax^bx,az^bz):
    // write sigma(x,z) = i^(x*z) X^x Z^z, then
    // sigma_a sigma_b = i^(ax*az + bx*bz - cx*cz) * (-1)^(az*bx) sigma_c.
    const int cx = ax ^ bx, cz = az ^ bz;
    ipow += ax * az + bx * bz - cx * cz + 2 * (az * bx);
  }
  ipow = ((ipow % 4) + 4) % 4;
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {PauliString(a.n_qubits(), a.x_mask() ^ b.x_mask(),
                      a.z_mask() ^ b.z_mask()),
          table[ipow]};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_dims(a, b);
  const auto anti = (a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask());
  return std::popcount(anti) % 2 == 0;
}

bool qubitwise_compatible(const PauliString& a, const PauliString& b) {
  check_dims(a, b);
  const auto both = (a.x_mask() | a.z_mask()) & (b.x_mask() | b.z_mask());
  // On the shared support the factors must be equal.
  return ((a.x_mask() ^ b.x_mask()) & both) == 0 &&
         ((a.z_mask() ^ b.z_mask()) & both) == 0;
}

}  // namespace su2lgt
