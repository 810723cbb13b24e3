#include "su2lgt/pauli_sum.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace su2lgt {

namespace {

void check_same_n(unsigned a, unsigned b) {
  if (a != b) throw dimension_error("qubit count mismatch");
}

std::string format_coeff(double c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", c);
  return buf;
}

}  // namespace

double PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0.0 : it->second;
}

void PauliSum::add(const PauliString& s, double c) {
  check_same_n(n_, s.n_qubits());
  terms_[s] += c;
}

void PauliSum::add(const PauliString& s, std::complex<double> c) {
  check_same_n(n_, s.n_qubits());
  terms_[s] += c.real();
  if (c.imag() != 0.0) imag_dust_[s] += c.imag();
}

void PauliSum::add(const PauliSum& other, double scale) {
  check_same_n(n_, other.n_);
  for (const auto& [s, c] : other.terms_) terms_[s] += scale * c;
}

PauliSum& PauliSum::operator*=(double s) {
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

void PauliSum::canonicalize(double tol) {
  for (const auto& [s, im] : imag_dust_) {
    if (std::abs(im) > tol)
      throw std::runtime_error(
          "non-Hermitian residue: imaginary coefficient on " + s.to_word());
  }
  imag_dust_.clear();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_n(a.n_, b.n_);
  PauliSum out(a.n_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      auto [s, phase] = multiply(sa, sb);
      out.add(s, phase * ca * cb);
    }
  out.canonicalize();
  return out;
}

PauliSum commutator_times_minus_i(const PauliSum& a, const PauliSum& b) {
  check_same_n(a.n_, b.n_);
  PauliSum out(a.n_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      if (commutes(sa, sb)) continue;
      // For anticommuting strings [A,B] = 2AB.
      auto [s, phase] = multiply(sa, sb);
      out.add(s, std::complex<double>(0, -2.0) * phase * ca * cb);
    }
  out.canonicalize();
  return out;
}

PauliSum PauliSum::project_fixed_qubits(
    const std::map<unsigned, bool>& assignment) const {
  std::uint64_t fixed_mask = 0;
  for (const auto& [q, up] : assignment) {
    (void)up;
    if (q >= n_) throw dimension_error("fixed qubit out of range");
    fixed_mask |= 1ull << q;
  }
  const unsigned n_out = n_ - static_cast<unsigned>(std::popcount(fixed_mask));
  PauliSum out(n_out);
  for (const auto& [s, c] : terms_) {
    if (s.x_mask() & fixed_mask) continue;  // <b|X|b> = <b|Y|b> = 0
    double sign = 1.0;
    std::uint64_t x = 0, z = 0;
    unsigned q_out = 0;
    for (unsigned q = 0; q < n_; ++q) {
      if ((fixed_mask >> q) & 1) {
        if ((s.z_mask() >> q) & 1) sign *= assignment.at(q) ? 1.0 : -1.0;
        continue;
      }
      x |= ((s.x_mask() >> q) & 1ull) << q_out;
      z |= ((s.z_mask() >> q) & 1ull) << q_out;
      ++q_out;
    }
    out.add(PauliString(n_out, x, z), sign * c);
  }
  out.canonicalize();
  return out;
}

std::string PauliSum::to_text() const {
  std::ostringstream os;
  for (const auto& [s, c] : terms_)
    os << format_coeff(c) << ' ' << s.to_word() << '\n';
  return os.str();
}

PauliSum PauliSum::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string coeff, word;
  PauliSum out;
  bool first = true;
  while (is >> coeff >> word) {
    if (first) {
      out = PauliSum(static_cast<unsigned>(word.size()));
      first = false;
    }
    out.add(PauliString::from_word(word), std::stod(coeff));
  }
  out.canonicalize();
  return out;
}

std::string PauliSum::to_json() const {
  std::ostringstream os;
  os << "{\"n_qubits\":" << n_ << ",\"terms\":[";
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << ',';
    first = false;
    os << "{\"string\":\"" << s.to_word() << "\",\"coeff\":" << format_coeff(c)
       << '}';
  }
  os << "]}";
  return os.str();
}

Eigen::Matrix2cd pauli_matrix(char p) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (p) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -1i, 1i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("bad Pauli");
  }
  return m;
}

Eigen::MatrixXcd dense_pauli(const PauliString& s) {
  const unsigned n = s.n_qubits();
  const std::size_t dim = 1ull << n;
  Eigen::MatrixXcd m(dim, dim);
  // <i|P|j>: nonzero only for i = j ^ x_mask.
  m.setZero();
  for (std::size_t j = 0; j < dim; ++j) {
    const std::size_t i = j ^ s.x_mask();
    std::complex<double> amp = 1.0;
    for (unsigned q = 0; q < n; ++q) {
      const int jq = (j >> q) & 1;
      switch (s.factor(q)) {
        case 'I':
          break;
        case 'X':
          break;
        case 'Y':
          amp *= jq ? std::complex<double>(0, -1) : std::complex<double>(0, 1);
          break;
        case 'Z':
          amp *= jq ? -1.0 : 1.0;
          break;
      }
    }
    m(i, j) = amp;
  }
  return m;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
  const std::size_t dim = 1ull << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [s, c] : terms_) m += c * dense_pauli(s);
  return m;
}

bool PauliSum::approx_equal(const PauliSum& o, double tol) const {
  PauliSum diff(*this);
  diff.add(o, -1.0);
  for (const auto& [s, c] : diff.terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

}  // namespace su2lgt
