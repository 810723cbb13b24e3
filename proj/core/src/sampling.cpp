#include "su2lgt/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace su2lgt {

namespace {

// RNG stream purposes.
constexpr std::uint64_t kPurposeTrajectory = 1;
constexpr std::uint64_t kPurposeSampling = 2;
constexpr std::uint64_t kPurposeOverlap = 3;

void apply_1q(std::vector<Amplitude>& amps, unsigned q,
              const Amplitude m00, const Amplitude m01, const Amplitude m10,
              const Amplitude m11) {
  const std::uint64_t mask = 1ull << q;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amps[i], a1 = amps[i | mask];
    amps[i] = m00 * a0 + m01 * a1;
    amps[i | mask] = m10 * a0 + m11 * a1;
  }
}

/// Rotate qubit q so that a computational measurement reads out the given
/// Pauli axis: X -> H, Y -> H S^dag.
void rotate_to_basis(std::vector<Amplitude>& amps, unsigned q, char axis) {
  const double s = 1.0 / std::sqrt(2.0);
  const Amplitude mi(0, -1);
  switch (axis) {
    case 'X':
      apply_1q(amps, q, s, s, s, -s);
      break;
    case 'Y':
      apply_1q(amps, q, s, s * mi, s, -s * mi);
      break;
    case 'Z':
    case 'F':
      break;
    default:
      throw std::invalid_argument("bad basis axis");
  }
}

void inject_depolarizing(std::vector<Amplitude>& amps, unsigned n_qubits,
                         const Gate& g, double p, KeyedRng& rng) {
  const unsigned e = cnot_equivalents(g);
  for (unsigned k = 0; k < e; ++k) {
    if (rng.next_double() >= p) continue;
    unsigned qa = g.qubits[0], qb = g.qubits[1];
    if (g.qubits.size() > 2) {
      // Pick a uniformly random pair of the gate's qubits.
      const auto n = g.qubits.size();
      const auto i = rng.next_below(n);
      auto j = rng.next_below(n - 1);
      if (j >= i) ++j;
      qa = g.qubits[i];
      qb = g.qubits[j];
    }
    // One of the 15 non-identity two-qubit Paulis.
    const std::uint64_t pick = 1 + rng.next_below(15);
    std::uint64_t x = 0, z = 0;
    if (pick & 1) x |= 1ull << qa;
    if (pick & 2) z |= 1ull << qa;
    if (pick & 4) x |= 1ull << qb;
    if (pick & 8) z |= 1ull << qb;
    apply_pauli_inplace(amps, PauliString(n_qubits, x, z));
  }
}

void apply_gates_noisy(StateVector& psi, const Circuit& c,
                       const ParamVector& theta, const NoiseModel* noise,
                       std::uint64_t trajectory, std::uint64_t gate_offset) {
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
    psi.apply(c.gates[gi], theta);
    if (noise && noise->has_gate_noise() &&
        cnot_equivalents(c.gates[gi]) > 0) {
      KeyedRng rng(noise->seed, kPurposeTrajectory, trajectory,
                   gate_offset + gi);
      inject_depolarizing(psi.amplitudes(), psi.n_qubits(), c.gates[gi],
                          noise->two_qubit_depolarizing_p, rng);
    }
  }
}

std::uint64_t sample_index(const std::vector<double>& cumulative, double r) {
  const auto it =
      std::upper_bound(cumulative.begin(), cumulative.end(), r);
  return static_cast<std::uint64_t>(
      std::min<std::ptrdiff_t>(it - cumulative.begin(),
                               cumulative.size() - 1));
}

std::uint64_t apply_readout_flips(std::uint64_t bits, unsigned n_qubits,
                                  const NoiseModel& noise, KeyedRng& rng) {
  std::uint64_t out = 0;
  for (unsigned q = 0; q < n_qubits; ++q) {
    const int b = (bits >> q) & 1;
    const double p1 = noise.readout_confusion[q][1][b];  // P(obs=1 | b)
    if (rng.next_double() < p1) out |= 1ull << q;
  }
  return out;
}

}  // namespace

void NoiseModel::validate(unsigned n_qubits) const {
  if (two_qubit_depolarizing_p < 0 || two_qubit_depolarizing_p >= 1)
    throw std::invalid_argument("depolarizing probability out of range");
  if (!readout_confusion.empty()) {
    if (readout_confusion.size() != n_qubits)
      throw std::invalid_argument("confusion matrix count mismatch");
    for (const auto& m : readout_confusion)
      for (int col = 0; col < 2; ++col)
        if (std::abs(m[0][col] + m[1][col] - 1.0) > 1e-12 || m[0][col] < 0 ||
            m[1][col] < 0)
          throw std::invalid_argument("confusion matrix not column-stochastic");
  }
}

NoiseModel uniform_readout_noise(unsigned n_qubits, double flip_p,
                                 std::uint64_t seed) {
  NoiseModel n;
  n.seed = seed;
  n.readout_confusion.assign(
      n_qubits, {{{1 - flip_p, flip_p}, {flip_p, 1 - flip_p}}});
  return n;
}

unsigned cnot_equivalents(const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT: return 1;
    case GateKind::PSWAP: return 2;
    case GateKind::SWAP: return 3;
    case GateKind::TOFFOLI: return 6;
    default: return 0;
  }
}

StateVector apply_circuit(const Circuit& c, const ParamVector& theta,
                          std::uint64_t input_state, const NoiseModel* noise,
                          std::uint64_t trajectory) {
  if (theta.size() != c.n_params)
    throw std::invalid_argument("parameter count mismatch");
  if (noise) noise->validate(c.n_qubits);
  StateVector psi = StateVector::basis_state(c.n_qubits, input_state);
  apply_gates_noisy(psi, c, theta, noise, trajectory, 0);
  return psi;
}

MeasurementRecord sample_group(const StateVector& state,
                               const MeasurementGroup& group,
                               std::size_t shots, const NoiseModel* noise,
                               std::uint64_t seed, std::uint64_t group_index) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (noise) noise->validate(state.n_qubits());

  std::vector<Amplitude> amps = state.amplitudes();
  for (unsigned q = 0; q < state.n_qubits(); ++q)
    rotate_to_basis(amps, q, group.basis_assignment[q]);

  std::vector<double> cumulative(amps.size());
  double acc = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cumulative[i] = acc;
  }

  MeasurementRecord rec;
  rec.group = group;
  rec.shots = shots;
  KeyedRng rng(seed, kPurposeSampling, group_index);
  const bool readout = noise && noise->has_readout_noise();
  for (std::size_t s = 0; s < shots; ++s) {
    std::uint64_t bits = sample_index(cumulative, rng.next_double() * acc);
    if (readout)
      bits = apply_readout_flips(bits, state.n_qubits(), *noise, rng);
    ++rec.counts[bits];
  }
  return rec;
}

std::vector<MeasurementRecord> sample_groups(
    const StateVector& state, const std::vector<MeasurementGroup>& groups,
    std::size_t shots, const NoiseModel* noise, std::uint64_t seed) {
  std::vector<MeasurementRecord> out;
  out.reserve(groups.size());
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    out.push_back(sample_group(state, groups[gi], shots, noise, seed, gi));
  return out;
}

ExpectationEstimate estimate_expectations(
    const std::vector<MeasurementRecord>& records, const PauliSum& h) {
  ExpectationEstimate est;
  for (const auto& rec : records) {
    for (const auto& member : rec.group.members) {
      const std::uint64_t support = member.x_mask() | member.z_mask();
      double sum = 0;
      for (const auto& [bits, cnt] : rec.counts) {
        const int parity = std::popcount(bits & support) % 2;
        sum += parity ? -static_cast<double>(cnt)
                      : static_cast<double>(cnt);
      }
      est.values[member] = sum / static_cast<double>(rec.shots);
    }
  }

  double var = 0;
  est.energy = h.identity_coefficient();
  for (const auto& [s, c] : h.terms()) {
    if (s.x_mask() == 0 && s.z_mask() == 0) continue;
    const auto it = est.values.find(s);
    if (it == est.values.end())
      throw std::invalid_argument("string not covered by measurement records");
    est.energy += c * it->second;
    // Binomial variance per string; covariances within a group ignored.
    const auto& rec = *std::find_if(
        records.begin(), records.end(), [&](const MeasurementRecord& r) {
          return std::find(r.group.members.begin(), r.group.members.end(),
                           s) != r.group.members.end();
        });
    var += c * c * (1.0 - it->second * it->second) /
           static_cast<double>(rec.shots);
  }
  est.std_error = std::sqrt(std::max(0.0, var));
  return est;
}

double overlap_probability(const Circuit& c, const ParamVector& theta,
                           const ParamVector& theta_ref,
                           std::uint64_t input_state, std::size_t shots,
                           const NoiseModel* noise, std::uint64_t seed) {
  StateVector psi = apply_circuit(c, theta_ref, input_state, noise, 0);
  const Circuit inv = inverse(c);
  apply_gates_noisy(psi, inv, theta, noise, 0, c.gates.size());

  if (shots == 0) {
    if (noise && noise->has_readout_noise()) {
      double p = 0;
      for (std::uint64_t t = 0; t < psi.dim(); ++t) {
        double w = psi.probability(t);
        if (w == 0) continue;
        for (unsigned q = 0; q < psi.n_qubits(); ++q) {
          const int b = (t >> q) & 1;
          const int obs = (input_state >> q) & 1;
          w *= noise->readout_confusion[q][obs][b];
        }
        p += w;
      }
      return p;
    }
    return psi.probability(input_state);
  }

  std::vector<double> cumulative(psi.dim());
  double acc = 0;
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    acc += psi.probability(i);
    cumulative[i] = acc;
  }
  KeyedRng rng(seed, kPurposeOverlap);
  std::size_t hits = 0;
  const bool readout = noise && noise->has_readout_noise();
  for (std::size_t s = 0; s < shots; ++s) {
    std::uint64_t bits = sample_index(cumulative, rng.next_double() * acc);
    if (readout)
      bits = apply_readout_flips(bits, psi.n_qubits(), *noise, rng);
    if (bits == input_state) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(shots);
}

}  // namespace su2lgt
