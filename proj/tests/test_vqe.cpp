#include <doctest.h>

#include <cmath>

#include <su2lgt/ansatz.hpp>
#include <su2lgt/costs.hpp>
#include <su2lgt/exact.hpp>
#include <su2lgt/optimizer.hpp>
#include <su2lgt/protocols.hpp>

using namespace su2lgt;

TEST_CASE("optimizer finds the minimum of a shifted cosine") {
  OptimizerConfig cfg;
  cfg.n_params = 2;
  cfg.budget = 500;
  const auto r = optimize(
      [](const ParamVector& t) {
        return 2.0 - std::cos(t[0] - 1.0) - std::cos(t[1] + 0.5);
      },
      cfg);
  CHECK(r.best_value < 1e-6);
  CHECK(std::abs(std::remainder(r.best_theta[0] - 1.0, 2 * M_PI)) < 1e-3);
}

TEST_CASE("best value equals the trace minimum") {
  OptimizerConfig cfg;
  cfg.n_params = 3;
  cfg.budget = 300;
  const auto r = optimize(
      [](const ParamVector& t) {
        return std::sin(t[0]) * std::cos(t[1]) + 0.3 * std::sin(2 * t[2]);
      },
      cfg);
  double trace_min = 1e300;
  for (const auto& pt : r.trace) trace_min = std::min(trace_min, pt.value);
  CHECK(r.best_value == trace_min);
  CHECK(r.trace.size() <= cfg.budget);
}

TEST_CASE("coordinate descent solves a separable trigonometric cost") {
  OptimizerConfig cfg;
  cfg.n_params = 6;
  cfg.budget = 5000;
  ParamVector target(6);
  for (unsigned i = 0; i < 6; ++i) target[i] = 0.3 + 0.4 * i;
  const auto r = optimize_coordinate(
      [&](const ParamVector& t) {
        double s = 0;
        for (unsigned i = 0; i < 6; ++i) s -= std::cos(t[i] - target[i]);
        return s;
      },
      cfg);
  CHECK(r.best_value == doctest::Approx(-6.0).epsilon(1e-8));
}

TEST_CASE("cache reweights across couplings without new evaluations") {
  const Circuit c = ansatz_n2_singlet_family();
  CostContext ctx(c, 0, build_hamiltonian({2, 1.0, 1.0}), {});
  const ParamVector theta{0.7, 0.2};
  const double e1 = ctx.ground(theta);
  const std::size_t evals = ctx.evaluations();

  const LatticeParams p2{2, 0.3, 4.0};
  ctx.set_hamiltonian(build_hamiltonian(p2));
  const double e2 = ctx.ground(theta);
  CHECK(ctx.evaluations() == evals);  // pure reweight, no new run
  const double direct = run_noiseless(c, theta, 0).expectation(
      build_hamiltonian(p2));
  CHECK(e2 == doctest::Approx(direct).epsilon(1e-12));
  CHECK(e1 != e2);
}

TEST_CASE("cache quantization treats 2*pi shifts as identical") {
  EvaluationCache cache(1e-6);
  const ParamVector a{0.5, 1.0};
  const ParamVector b{0.5 + 2 * M_PI, 1.0 - 2 * M_PI};
  CHECK(cache.key(a) == cache.key(b));
  cache.store(a, {});
  CHECK(cache.lookup(b) != nullptr);
}

TEST_CASE("exact VQE respects the variational bound") {
  const LatticeParams p{2, 1.0, 1.0};
  CostContext ctx(ansatz_n2_singlet_family(), 0, build_hamiltonian(p), {});
  OptimizerConfig cfg;
  cfg.n_params = 2;
  const auto r =
      optimize([&](const ParamVector& t) { return ctx.ground(t); }, cfg);
  const auto ed = eigensolve_sector(p, {0, false, false}, 1);
  CHECK(r.best_value >= ed.energies[0] - 1e-9);
  CHECK(r.best_value == doctest::Approx(ed.energies[0]).epsilon(1e-7));
}

TEST_CASE("penalty keeps the excited search off the ground state") {
  const LatticeParams p{2, 1.0, 1.0};
  const auto rows =
      run_meson_mass(1.0, {1.0}, ExcitedMethod::Penalty);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].overlap_final <= 0.01);
  const auto hm = hadron_masses(p);
  CHECK(rows[0].mass == doctest::Approx(hm.meson_mass).epsilon(1e-4));
}

TEST_CASE("default penalty exceeds the ED gap") {
  for (double x : {0.5, 1.0, 3.0}) {
    const LatticeParams p{2, 1.0, x};
    const auto ed = eigensolve_sector(p, {0, false, false}, 2);
    CHECK(default_penalty_beta(p) > ed.energies[1] - ed.energies[0]);
  }
}

TEST_CASE("sampled protocol runs are byte-deterministic") {
  Estimator est;
  est.mode = EstimatorMode::Sampled;
  est.shots = 400;
  est.seed = 21;
  OptimizerConfig cfg;
  cfg.budget = 60;
  const auto a = run_baryon_mass(2, 1.0, {1.0}, est, cfg);
  const auto b = run_baryon_mass(2, 1.0, {1.0}, est, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].e_v == b[i].e_v);
    CHECK(a[i].e_x == b[i].e_x);
    CHECK(a[i].mass == b[i].mass);
    CHECK(a[i].evals == b[i].evals);
  }
}

TEST_CASE("gram-schmidt guard rejects near-unit overlap") {
  const LatticeParams p{2, 1.0, 1.0};
  CostContext ctx(ansatz_n2_singlet_family(), 0, build_hamiltonian(p), {});
  const ParamVector ref{0.4, 0.9};
  const auto g = cost_excited_gram_schmidt(ctx, ref, ref, -1.0);
  CHECK(!g.valid);
  const auto ok = cost_excited_gram_schmidt(ctx, {2.0, 0.1}, ref, -1.0);
  CHECK(ok.valid);
  CHECK(ok.overlap_sq < 1.0);
}
