#include "su2lgt/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace su2lgt {

StateVector::StateVector(unsigned n_qubits)
    : n_(n_qubits), amps_(1ull << n_qubits, Amplitude(0)) {
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(unsigned n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  s.amps_[0] = 0.0;
  s.amps_.at(index) = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0) throw std::runtime_error("zero state");
  for (auto& a : amps_) a /= nrm;
}

void StateVector::apply(const Gate& g, const std::vector<double>& theta) {
  apply_gate_inplace(amps_, n_, g, theta);
}

double StateVector::expectation(const PauliSum& h) const {
  if (h.n_qubits() != n_) throw dimension_error("observable qubit mismatch");
  double acc = 0;
  for (const auto& [s, c] : h.terms()) {
    // <psi|P|psi> = sum_j conj(psi_{j^x}) * phase(j) * psi_j
    Amplitude val = 0;
    const auto x = s.x_mask();
    for (std::uint64_t j = 0; j < dim(); ++j) {
      const Amplitude& aj = amps_[j];
      if (aj == Amplitude(0)) continue;
      // phase of <j^x| P |j>
      Amplitude ph = 1.0;
      std::uint64_t yz = s.z_mask();
      for (unsigned q = 0; yz >> q; ++q) {
        if (!((yz >> q) & 1)) continue;
        const bool xq = (x >> q) & 1;
        const bool jq = (j >> q) & 1;
        if (xq) {  // Y factor
          ph *= jq ? Amplitude(0, -1) : Amplitude(0, 1);
        } else if (jq) {
          ph = -ph;
        }
      }
      val += std::conj(amps_[j ^ x]) * ph * aj;
    }
    acc += c * val.real();
  }
  return acc;
}

Amplitude StateVector::overlap(const StateVector& other) const {
  if (other.n_ != n_) throw dimension_error("state qubit mismatch");
  Amplitude acc = 0;
  for (std::uint64_t i = 0; i < dim(); ++i)
    acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

double StateVector::probability(std::uint64_t index) const {
  return std::norm(amps_.at(index));
}

namespace {

bool controls_satisfied(std::uint64_t index, const Gate& g) {
  const unsigned nc = g.n_controls();
  for (unsigned i = 0; i < nc; ++i) {
    const bool bit = (index >> g.qubits[i]) & 1;
    if (bit != static_cast<bool>(g.control_polarity[i])) return false;
  }
  return true;
}

}  // namespace

void apply_gate_inplace(std::vector<Amplitude>& amps, unsigned n_qubits,
                        const Gate& g, const std::vector<double>& theta) {
  const std::uint64_t dim = amps.size();
  for (unsigned q : g.qubits)
    if (q >= n_qubits) throw dimension_error("gate qubit out of range");

  switch (g.kind) {
    case GateKind::X: {
      const std::uint64_t t = 1ull << g.target();
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & t)) std::swap(amps[i], amps[i | t]);
      return;
    }
    case GateKind::CNOT:
    case GateKind::TOFFOLI: {
      const std::uint64_t t = 1ull << g.target();
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & t) && controls_satisfied(i, g))
          std::swap(amps[i], amps[i | t]);
      return;
    }
    case GateKind::SWAP: {
      const std::uint64_t a = 1ull << g.qubits[0], b = 1ull << g.qubits[1];
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[(i ^ a) | b]);
      return;
    }
    case GateKind::RY:
    case GateKind::CRY: {
      const double ang = g.param->resolve(theta);
      const double c = std::cos(ang / 2), s = std::sin(ang / 2);
      const std::uint64_t t = 1ull << g.target();
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & t) || !controls_satisfied(i, g)) continue;
        const Amplitude a0 = amps[i], a1 = amps[i | t];
        amps[i] = c * a0 - s * a1;
        amps[i | t] = s * a0 + c * a1;
      }
      return;
    }
    case GateKind::PSWAP: {
      // Givens rotation on span{|up,down>, |down,up>}; identity elsewhere.
      const double ang = g.param->resolve(theta);
      const double c = std::cos(ang), s = std::sin(ang);
      const std::uint64_t a = 1ull << g.qubits[0], b = 1ull << g.qubits[1];
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & a) || !(i & b)) continue;  // i has qubit a up, b down
        const std::uint64_t j = (i | a) ^ b;
        const Amplitude u = amps[i], v = amps[j];
        amps[i] = c * u - s * v;
        amps[j] = s * u + c * v;
      }
      return;
    }
  }
  throw std::logic_error("unhandled gate kind");
}

void apply_pauli_inplace(std::vector<Amplitude>& amps, const PauliString& p) {
  const std::uint64_t dim = amps.size();
  const auto x = p.x_mask();
  std::vector<Amplitude> out(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    Amplitude ph = 1.0;
    for (unsigned q = 0; q < p.n_qubits(); ++q) {
      const bool zq = (p.z_mask() >> q) & 1;
      if (!zq) continue;
      const bool xq = (x >> q) & 1;
      const bool jq = (j >> q) & 1;
      if (xq) {
        ph *= jq ? Amplitude(0, -1) : Amplitude(0, 1);
      } else if (jq) {
        ph = -ph;
      }
    }
    out[j ^ x] = ph * amps[j];
  }
  amps.swap(out);
}

std::vector<Amplitude> apply_pauli_sum(const PauliSum& h,
                                       const std::vector<Amplitude>& x) {
  std::vector<Amplitude> acc(x.size(), Amplitude(0));
  for (const auto& [s, c] : h.terms()) {
    std::vector<Amplitude> tmp = x;
    apply_pauli_inplace(tmp, s);
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] += c * tmp[i];
  }
  return acc;
}

}  // namespace su2lgt
