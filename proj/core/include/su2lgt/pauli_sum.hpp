#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "su2lgt/pauli_string.hpp"

namespace su2lgt {

struct PauliTerm {
  PauliString string;
  double coefficient = 0.0;
};

/// Real-weighted sum of Pauli strings in canonical (z_mask, x_mask) order.
///
/// All stored coefficients are real; complex intermediate phases arising in
/// products must cancel before storage (add() enforces this). Coefficients
/// smaller than the drop tolerance are removed on canonicalization.
class PauliSum {
 public:
  static constexpr double kDropTolerance = 1e-12;

  PauliSum() = default;
  explicit PauliSum(unsigned n_qubits) : n_(n_qubits) {}

  unsigned n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const std::map<PauliString, double>& terms() const { return terms_; }

  double coefficient(const PauliString& s) const;
  double identity_coefficient() const {
    return coefficient(PauliString::identity(n_));
  }

  void add(const PauliString& s, double c);
  void add(const PauliString& s, std::complex<double> c);
  void add(const PauliSum& other, double scale = 1.0);

  PauliSum& operator+=(const PauliSum& o) {
    add(o);
    return *this;
  }
  PauliSum& operator*=(double s);

  /// Drop terms with |coefficient| below tol.
  void canonicalize(double tol = kDropTolerance);

  /// Operator product; coefficients may only be kept if the result is
  /// real-weighted, otherwise throws.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// -i[a, b]; Hermitian (real-weighted) for Hermitian a, b.
  friend PauliSum commutator_times_minus_i(const PauliSum& a,
                                           const PauliSum& b);

  /// Expectation value on each fixed qubit replaces its factor: Z -> +-1,
  /// X/Y -> 0 (term dropped). Remaining factors are re-indexed onto the
  /// surviving qubits in ascending order. `assignment` maps qubit -> spin,
  /// true = up (|0>), false = down (|1>).
  PauliSum project_fixed_qubits(const std::map<unsigned, bool>& assignment) const;

  /// Text lines "<coeff> <word>", canonical order, 17 significant digits.
  std::string to_text() const;
  static PauliSum from_text(const std::string& text);

  std::string to_json() const;

  Eigen::MatrixXcd to_dense() const;

  bool approx_equal(const PauliSum& o, double tol = 1e-10) const;

 private:
  unsigned n_ = 0;
  std::map<PauliString, double> terms_;
  std::map<PauliString, double> imag_dust_;  // pending imaginary parts
};

Eigen::Matrix2cd pauli_matrix(char p);
Eigen::MatrixXcd dense_pauli(const PauliString& s);

}  // namespace su2lgt
