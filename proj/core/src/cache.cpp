#include "su2lgt/cache.hpp"

#include <cmath>

namespace su2lgt {

namespace {
constexpr double kTwoPi = 2 * 3.14159265358979323846;
}

std::vector<long long> EvaluationCache::key(const ParamVector& theta) const {
  std::vector<long long> k;
  k.reserve(theta.size());
  const long long wrap = std::llround(kTwoPi / step_);
  for (double t : theta) {
    double m = std::fmod(t, kTwoPi);
    if (m < 0) m += kTwoPi;
    long long q = std::llround(m / step_);
    if (q >= wrap) q -= wrap;
    k.push_back(q);
  }
  return k;
}

void EvaluationCache::store(const ParamVector& theta, Entry entry) {
  entries_[key(theta)] = std::move(entry);
}

const EvaluationCache::Entry* EvaluationCache::lookup(
    const ParamVector& theta) const {
  const auto it = entries_.find(key(theta));
  return it == entries_.end() ? nullptr : &it->second;
}

double reweight_cache(const EvaluationCache& cache, const ParamVector& theta,
                      const PauliSum& h) {
  const auto* entry = cache.lookup(theta);
  if (!entry) throw cache_miss("theta not in cache");
  double energy = h.identity_coefficient();
  for (const auto& [s, c] : h.terms()) {
    if (s.x_mask() == 0 && s.z_mask() == 0) continue;
    const auto it = entry->expectations.find(s);
    if (it == entry->expectations.end())
      throw cache_miss("string not covered by cache entry");
    energy += c * it->second;
  }
  return energy;
}

}  // namespace su2lgt
