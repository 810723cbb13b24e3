#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace su2lgt {

/// Tensor product of single-qubit Pauli operators in symplectic form.
///
/// Bit q of x_mask set means an X component on qubit q, bit q of z_mask a Z
/// component; both set means Y. Qubit 0 is the least significant bit of a
/// computational basis index. The all-zero pair is the identity.
class PauliString {
 public:
  PauliString() = default;
  PauliString(unsigned n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parse a word over {I,X,Y,Z}; qubit 0 is the leftmost character.
  static PauliString from_word(const std::string& word);

  /// Single non-identity factor on `qubit` of an `n`-qubit string.
  static PauliString single(unsigned n, unsigned qubit, char pauli);

  static PauliString identity(unsigned n) { return PauliString(n, 0, 0); }

  unsigned n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Number of non-identity factors.
  unsigned support_size() const;
  std::uint64_t support_mask() const { return x_ | z_; }

  /// 'I', 'X', 'Y' or 'Z' at position q.
  char factor(unsigned q) const;

  std::string to_word() const;

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }
  /// Lexicographic on (z_mask, x_mask); the canonical term order.
  bool operator<(const PauliString& o) const {
    if (z_ != o.z_) return z_ < o.z_;
    return x_ < o.x_;
  }

 private:
  unsigned n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Product a*b = phase * result, phase in {1, -1, i, -i}.
std::pair<PauliString, std::complex<double>> multiply(const PauliString& a,
                                                      const PauliString& b);

/// True iff a and b commute (even number of anticommuting positions).
bool commutes(const PauliString& a, const PauliString& b);

/// True iff at every position the factors agree or one is identity.
/// Implies commutes().
bool qubitwise_compatible(const PauliString& a, const PauliString& b);

}  // namespace su2lgt
