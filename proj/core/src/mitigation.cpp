#include "su2lgt/mitigation.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "su2lgt/exact.hpp"

namespace su2lgt {

namespace {

Eigen::MatrixXcd gate_unitary(const Gate& g, unsigned n_qubits,
                              const ParamVector& theta) {
  const std::uint64_t dim = 1ull << n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::vector<Amplitude> v(dim, Amplitude(0));
    v[col] = 1.0;
    apply_gate_inplace(v, n_qubits, g, theta);
    for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = v[row];
  }
  return u;
}

/// rho -> (1-p) rho + (p/15) sum over non-identity 2-qubit Paulis on
/// (qa, qb) of P rho P.
void depolarize_pair(Eigen::MatrixXcd& rho, unsigned n_qubits, unsigned qa,
                     unsigned qb, double p) {
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (unsigned pick = 1; pick < 16; ++pick) {
    std::uint64_t x = 0, z = 0;
    if (pick & 1) x |= 1ull << qa;
    if (pick & 2) z |= 1ull << qa;
    if (pick & 4) x |= 1ull << qb;
    if (pick & 8) z |= 1ull << qb;
    const Eigen::MatrixXcd pm = dense_pauli(PauliString(n_qubits, x, z));
    mixed += pm * rho * pm.adjoint();
  }
  rho = (1 - p) * rho + (p / 15.0) * mixed;
}

}  // namespace

std::vector<double> counts_to_probabilities(const MeasurementRecord& rec,
                                            unsigned n_qubits) {
  std::vector<double> p(1ull << n_qubits, 0.0);
  for (const auto& [bits, cnt] : rec.counts)
    p[bits] = static_cast<double>(cnt) / static_cast<double>(rec.shots);
  return p;
}

std::vector<double> readout_mitigate(
    std::vector<double> probabilities,
    const std::vector<std::array<std::array<double, 2>, 2>>& confusion) {
  const std::size_t dim = probabilities.size();
  unsigned n_qubits = 0;
  while ((1ull << n_qubits) < dim) ++n_qubits;
  if ((1ull << n_qubits) != dim)
    throw std::invalid_argument("distribution length not a power of two");
  if (confusion.size() != n_qubits)
    throw std::invalid_argument("confusion matrix count mismatch");

  for (unsigned q = 0; q < n_qubits; ++q) {
    const auto& m = confusion[q];
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(det) < 1e-14)
      throw std::invalid_argument("singular confusion matrix");
    const std::uint64_t mask = 1ull << q;
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const double p0 = probabilities[i], p1 = probabilities[i | mask];
      probabilities[i] = (m[1][1] * p0 - m[0][1] * p1) / det;
      probabilities[i | mask] = (-m[1][0] * p0 + m[0][0] * p1) / det;
    }
  }

  double total = 0;
  for (auto& v : probabilities) {
    if (v < 0) v = 0;
    total += v;
  }
  if (total > 0)
    for (auto& v : probabilities) v /= total;
  return probabilities;
}

Circuit fold_cnots(const Circuit& c, unsigned fold) {
  if (fold % 2 == 0) throw std::invalid_argument("fold factor must be odd");
  Circuit out;
  out.n_qubits = c.n_qubits;
  for (const auto& g : c.gates) {
    const unsigned reps = (g.kind == GateKind::CNOT) ? fold : 1;
    for (unsigned k = 0; k < reps; ++k) out.append(g);
  }
  out.n_params = c.n_params;
  return out;
}

double exact_noisy_expectation(const Circuit& c, const ParamVector& theta,
                               std::uint64_t input_state,
                               const NoiseModel& noise,
                               const PauliSum& observable) {
  if (c.n_qubits > 10)
    throw capacity_error("density-matrix evolution limited to 10 qubits");
  noise.validate(c.n_qubits);
  const std::uint64_t dim = 1ull << c.n_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  rho(input_state, input_state) = 1.0;

  for (const auto& g : c.gates) {
    const Eigen::MatrixXcd u = gate_unitary(g, c.n_qubits, theta);
    rho = u * rho * u.adjoint();
    const unsigned e = cnot_equivalents(g);
    if (e == 0 || !noise.has_gate_noise()) continue;
    const double p = noise.two_qubit_depolarizing_p;
    for (unsigned k = 0; k < e; ++k) {
      if (g.qubits.size() == 2) {
        depolarize_pair(rho, c.n_qubits, g.qubits[0], g.qubits[1], p);
      } else {
        // Average over the qubit pairs (matches the trajectory sampler's
        // uniformly random pair choice).
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
        std::size_t n_pairs = 0;
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
          for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
            Eigen::MatrixXcd tmp = rho;
            depolarize_pair(tmp, c.n_qubits, g.qubits[i], g.qubits[j], p);
            acc += tmp;
            ++n_pairs;
          }
        rho = acc / static_cast<double>(n_pairs);
      }
    }
  }

  double value = 0;
  for (const auto& [s, coeff] : observable.terms()) {
    const Eigen::MatrixXcd pm = dense_pauli(s);
    value += coeff * (pm * rho).trace().real();
  }
  return value;
}

ZneResult zne_cnot_folding(const Circuit& c, const ParamVector& theta,
                           const PauliSum& observable, const NoiseModel& noise,
                           const std::vector<unsigned>& folds,
                           std::size_t shots, std::uint64_t seed) {
  if (folds.size() < 2)
    throw std::invalid_argument("need at least two fold factors");
  ZneResult r;
  r.folds = folds;
  const auto groups = shots > 0
                          ? group_for_measurement(observable)
                          : std::vector<MeasurementGroup>{};
  for (std::size_t fi = 0; fi < folds.size(); ++fi) {
    const Circuit folded = fold_cnots(c, folds[fi]);
    if (shots == 0) {
      r.values.push_back(
          exact_noisy_expectation(folded, theta, 0, noise, observable));
    } else {
      // One depolarizing trajectory per shot block.
      const std::size_t blocks = std::min<std::size_t>(shots, 64);
      const std::size_t per_block = (shots + blocks - 1) / blocks;
      double acc = 0;
      for (std::size_t b = 0; b < blocks; ++b) {
        const StateVector psi =
            apply_circuit(folded, theta, 0, &noise, fi * blocks + b);
        const auto recs = sample_groups(psi, groups, per_block, &noise,
                                        seed ^ (fi * blocks + b + 1));
        acc += estimate_expectations(recs, observable).energy;
      }
      r.values.push_back(acc / static_cast<double>(blocks));
    }
  }

  // Unweighted least-squares line v = a + b f evaluated at f = 0.
  double sf = 0, sv = 0, sff = 0, sfv = 0;
  const double n = static_cast<double>(folds.size());
  for (std::size_t i = 0; i < folds.size(); ++i) {
    sf += folds[i];
    sv += r.values[i];
    sff += static_cast<double>(folds[i]) * folds[i];
    sfv += folds[i] * r.values[i];
  }
  const double denom = n * sff - sf * sf;
  r.extrapolated = (sv * sff - sf * sfv) / denom;
  return r;
}

double mixed_state_expectation(const PauliSum& h, const StateVector& psi,
                               const StateVector& error_state, double p_e) {
  return (1 - p_e) * psi.expectation(h) + p_e * error_state.expectation(h);
}

}  // namespace su2lgt
