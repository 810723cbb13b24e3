#pragma once

#include <map>
#include <optional>

#include "su2lgt/circuit.hpp"

namespace su2lgt {

struct cache_miss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-theta Pauli expectations, keyed by the angles quantized mod 2*pi.
/// A later change of (x, m_tilde) only reweights the stored expectations.
class EvaluationCache {
 public:
  struct Entry {
    std::map<PauliString, double> expectations;
    std::size_t shots = 0;  // 0 = exact
  };

  explicit EvaluationCache(double quantization_step = 1e-6)
      : step_(quantization_step) {}

  std::vector<long long> key(const ParamVector& theta) const;

  void store(const ParamVector& theta, Entry entry);
  const Entry* lookup(const ParamVector& theta) const;

  std::size_t size() const { return entries_.size(); }

 private:
  double step_;
  std::map<std::vector<long long>, Entry> entries_;
};

/// Sum c_k(m_tilde, x) <P_k> from the cached expectations; throws
/// cache_miss when theta is absent or a string of h is not covered.
double reweight_cache(const EvaluationCache& cache, const ParamVector& theta,
                      const PauliSum& h);

}  // namespace su2lgt
