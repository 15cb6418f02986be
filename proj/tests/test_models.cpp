#include <cmath>
#include <random>

#include "doctest.h"
#include "relaxsolve/chaplygin.hpp"
#include "relaxsolve/config.hpp"
#include "relaxsolve/jin_xin.hpp"
#include "relaxsolve/two_phase.hpp"
#include "support.hpp"

using namespace relaxsolve;

namespace {

const JinXinModel kJinXin(2.0, ScalarFlux::burgers(), {-1.0, 1.0});
const ChaplyginModel kChaplygin(1.8, 1.4);
const TwoPhaseModel kTwoPhase(1.6, 1.5);

StateVector random_state(std::mt19937_64& rng, const Model& m) {
  return oracle::random_field(rng, m, 1).cells[0];
}

const Model* const kModels[] = {&kJinXin, &kChaplygin, &kTwoPhase};

}  // namespace

TEST_CASE("jin-xin flux") {
  CHECK(jinxin_flux(1.0, 0.5, 2.0) == StateVector{0.5, 4.0});
  CHECK(jinxin_flux(0.0, 0.0, 2.0) == StateVector{0.0, 0.0});
  CHECK(jinxin_flux(-1.0, 0.5, 3.0) == StateVector{0.5, -9.0});
  CHECK(kJinXin.flux({1.0, 0.5}) == StateVector{0.5, 4.0});
  CHECK(kJinXin.flux1({1.0, 0.5}) == StateVector{0.5});
  CHECK(kJinXin.flux2({1.0, 0.5}) == StateVector{4.0});
}

TEST_CASE("jin-xin construction enforces the subcharacteristic condition") {
  CHECK_THROWS_AS(JinXinModel(1.0, ScalarFlux::burgers(), {-1.0, 0.5}), ConfigError);
  CHECK_THROWS_AS(JinXinModel(0.9, ScalarFlux::linear(1.0), {-5.0, 5.0}), ConfigError);
  CHECK_NOTHROW(JinXinModel(1.01, ScalarFlux::burgers(), {-1.0, 0.5}));
  CHECK_THROWS_AS(JinXinModel(2.0, ScalarFlux::burgers(), {1.0, -1.0}), ConfigError);
}

TEST_CASE("jin-xin invariant domain maps") {
  const JinXinModel m(2.0, ScalarFlux::burgers(), {-1.0, 0.5});
  CHECK(m.k_plus().lo == doctest::Approx(-0.75));
  CHECK(m.k_plus().hi == doctest::Approx(0.5625));
  CHECK(m.k_minus().lo == doctest::Approx(-1.25));
  CHECK(m.k_minus().hi == doctest::Approx(0.4375));

  std::mt19937_64 rng(5);
  int inside = 0;
  for (int i = 0; i < 2000; ++i) {
    const double u = oracle::uniform(rng, -1.0, 0.5);
    const double v = oracle::uniform(rng, -1.5, 1.5);
    const StateVector w{u, v};
    if (!m.in_invariant_domain(w)) continue;
    ++inside;
    // r, s in K_+, K_- and u = (r + s)/2 in K.
    CHECK(m.k_plus().contains(u + v / 2.0, 1e-15));
    CHECK(m.k_minus().contains(u - v / 2.0, 1e-15));
    CHECK(m.admissible(w));
  }
  CHECK(inside > 100);
  // Equilibrium states with u in K lie in the domain.
  for (double u : {-1.0, -0.3, 0.0, 0.5}) CHECK(m.in_invariant_domain({u, 0.5 * u * u}, 1e-15));
  CHECK_FALSE(m.admissible({0.6, 0.0}));
  CHECK_FALSE(m.admissible({0.0, NAN}));
}

TEST_CASE("source has zero conserved part and vanishes exactly on the manifold") {
  std::mt19937_64 rng(17);
  for (const Model* m : kModels) {
    for (int i = 0; i < 100; ++i) {
      const StateVector w = random_state(rng, *m);
      const StateVector r = m->source(w);
      for (std::size_t c = 0; c < m->conserved_size(); ++c) CHECK(r[c] == 0.0);
      const StateVector eq = m->to_equilibrium(w);
      const StateVector r_eq = m->source(eq);
      for (std::size_t c = 0; c < m->size(); ++c) CHECK(std::abs(r_eq[c]) <= 1e-14);
      double off = 0.0;
      for (std::size_t c = m->conserved_size(); c < m->size(); ++c) off = std::max(off, std::abs(r[c]));
      if (max_abs_difference(w, eq) > 1e-14) CHECK(off > 0.0);
    }
  }
}

TEST_CASE("exact source solution") {
  SUBCASE("identity at t = 0 and on the manifold") {
    std::mt19937_64 rng(23);
    for (const Model* m : kModels) {
      for (int i = 0; i < 50; ++i) {
        const StateVector w = random_state(rng, *m);
        CHECK(m->exact_source_solution(w, 0.0, 1e-3) == w);
        const StateVector eq = m->to_equilibrium(w);
        for (double t : {1e-6, 0.3, 50.0}) CHECK(m->exact_source_solution(eq, t, 1e-2) == eq);
      }
    }
  }
  SUBCASE("long times reach equilibrium") {
    const StateVector w{0.3, 0.9};
    const StateVector out = kJinXin.exact_source_solution(w, 100.0 * 1e-4, 1e-4);
    CHECK(std::abs(out[1] - 0.045) <= 0.855 * std::exp(-100.0) + 1e-16);
    CHECK(out[0] == 0.3);
  }
  SUBCASE("jin-xin (1,1) at t = eps against RK4") {
    const double eps = 1e-3;
    const StateVector w{1.0, 1.0};
    const StateVector exact = kJinXin.exact_source_solution(w, eps, eps);
    CHECK(exact[1] == doctest::Approx(0.5 + 0.5 * std::exp(-1.0)).epsilon(1e-14));
    const StateVector rk = oracle::rk4_source(kJinXin, w, eps, eps, 10000);
    CHECK(std::abs(exact[1] - rk[1]) <= 1e-8);
  }
  SUBCASE("random states against RK4 over [0, 10 eps]") {
    std::mt19937_64 rng(29);
    for (const Model* m : kModels) {
      for (int i = 0; i < 100; ++i) {
        const StateVector w = random_state(rng, *m);
        const double eps = std::pow(10.0, oracle::uniform(rng, -8.0, 1.0));
        const double t = oracle::uniform(rng, 0.0, 10.0) * eps;
        const StateVector exact = m->exact_source_solution(w, t, eps);
        const StateVector rk = oracle::rk4_source(*m, w, t, eps, 2000);
        CHECK(max_abs_difference(exact, rk) <= 1e-8);
      }
    }
  }
}

TEST_CASE("relaxing flux along the source") {
  std::mt19937_64 rng(31);
  CHECK(kJinXin.flux2_constant_along_source());
  CHECK(kChaplygin.flux2_constant_along_source());
  CHECK_FALSE(kTwoPhase.flux2_constant_along_source());
  for (int i = 0; i < 50; ++i) {
    const StateVector w = random_state(rng, kJinXin);
    const StateVector f0 = kJinXin.flux2(w);
    for (double t : {1e-3, 0.1, 10.0}) CHECK(kJinXin.flux2(kJinXin.exact_source_solution(w, t, 0.05)) == f0);
    const StateVector c = random_state(rng, kChaplygin);
    CHECK(kChaplygin.flux2(c) == StateVector{0.0});
  }
  // The two-phase relaxing flux rho phi u changes as phi relaxes.
  const StateVector w = kTwoPhase.from_primitive({1.0, 0.4, 0.1, 0.3});
  CHECK(kTwoPhase.flux2(kTwoPhase.exact_source_solution(w, 1.0, 0.1))[0] != kTwoPhase.flux2(w)[0]);
}

TEST_CASE("chaplygin flux, speed and admissibility") {
  const StateVector w{1.0, 0.5, 0.8};
  const StateVector f = kChaplygin.flux(w);
  CHECK(f[0] == -0.5);
  CHECK(f[1] == doctest::Approx(std::pow(0.8, -1.4) + 1.8 * 1.8 * (0.8 - 1.0)));
  CHECK(f[2] == 0.0);
  CHECK(kChaplygin.max_wave_speed(w) == 1.8);
  CHECK(kChaplygin.admissible(w));
  CHECK_FALSE(kChaplygin.admissible({-0.1, 0.0, 1.0}));
  CHECK_FALSE(kChaplygin.admissible({1.0, 0.0, 0.0}));
  // gamma T^(-gamma-1) exceeds a^2 for small T.
  CHECK_FALSE(kChaplygin.admissible({0.5, 0.0, 0.3}));
  CHECK_THROWS_AS(ChaplyginModel(0.0, 1.4), ConfigError);
  CHECK_THROWS_AS(ChaplyginModel(1.8, 1.0), ConfigError);
}

namespace {

// The entropy as printed in the source material, kept here only to document
// its sign: its relaxation production is non-negative.
double printed_entropy(double a, double gamma, double tau, double u, double t) {
  return 0.5 * u * u + std::pow(t, 1.0 - gamma) / (1.0 - gamma) + 0.5 * a * a * (t * t - tau * tau) +
         (std::pow(t, -gamma) + a * a * t) * (tau - t);
}

double fd_production(const std::function<double(double, double, double)>& h, double tau, double u, double t) {
  const double step = 1e-6;
  const double dh_dt = (h(tau, u, t + step) - h(tau, u, t - step)) / (2.0 * step);
  return dh_dt * (tau - t);
}

}  // namespace

TEST_CASE("chaplygin entropy") {
  CHECK(kChaplygin.entropy_at(1.0, 0.0, 1.0) == doctest::Approx(1.0 / 0.4));
  CHECK(printed_entropy(1.8, 1.4, 1.0, 0.0, 1.0) == doctest::Approx(-2.5));
  CHECK(kChaplygin.entropy_source_at(0.9, 0.3, 0.9) == 0.0);
  CHECK_THROWS_AS(kChaplygin.entropy_at(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(kChaplygin.entropy_source_at(1.0, 0.0, -1.0), DomainError);

  std::mt19937_64 rng(37);
  auto h = [](double tau, double u, double t) { return kChaplygin.entropy_at(tau, u, t); };
  auto printed = [](double tau, double u, double t) { return printed_entropy(1.8, 1.4, tau, u, t); };
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const double tau = oracle::uniform(rng, 0.5, 2.0);
    const double u = oracle::uniform(rng, -1.0, 1.0);
    const double t = oracle::uniform(rng, 0.5, 2.0);
    if (!kChaplygin.subcharacteristic(t)) continue;
    ++tested;
    const double analytic = kChaplygin.entropy_source_at(tau, u, t);
    CHECK(analytic <= 0.0);
    CHECK(analytic == doctest::Approx(fd_production(h, tau, u, t)).epsilon(1e-6).scale(1.0));
    CHECK(fd_production(printed, tau, u, t) >= -1e-8);
    // Convexity along tau.
    const double d2 = (h(tau + 1e-3, u, t) - 2.0 * h(tau, u, t) + h(tau - 1e-3, u, t)) / 1e-6;
    CHECK(d2 > 0.0);
  }
  CHECK(tested > 50);
}

TEST_CASE("two-phase saturation densities and equilibrium fraction") {
  const double r = (1.5 - 1.0) / (1.6 - 1.0);
  CHECK(kTwoPhase.rho1_star() == doctest::Approx(std::exp(-1.0) * std::pow(r, 1.5 / (1.5 - 1.6))));
  CHECK(kTwoPhase.rho2_star() == doctest::Approx(std::exp(-1.0) * std::pow(r, 1.6 / (1.5 - 1.6))));
  CHECK(kTwoPhase.rho1_star() < kTwoPhase.rho2_star());

  CHECK(kTwoPhase.phi_eq(kTwoPhase.rho1_star() / 2.0) == 1.0);
  CHECK(kTwoPhase.phi_eq(2.0 * kTwoPhase.rho2_star()) == 0.0);
  CHECK(kTwoPhase.phi_eq(2.0 / (kTwoPhase.tau1_star() + kTwoPhase.tau2_star())) == doctest::Approx(0.5));
  CHECK(kTwoPhase.phi_eq(kTwoPhase.rho1_star()) == doctest::Approx(1.0));
  CHECK(kTwoPhase.phi_eq(kTwoPhase.rho2_star()) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(kTwoPhase.phi_eq(0.0), DomainError);
  CHECK_THROWS_AS(kTwoPhase.phi_eq(-1.0), DomainError);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const double a = oracle::uniform(rng, 0.1, 10.0);
    const double b = oracle::uniform(rng, 0.1, 10.0);
    if (a < b) CHECK(kTwoPhase.phi_eq(a) >= kTwoPhase.phi_eq(b));
    CHECK(kTwoPhase.phi_eq(a) >= 0.0);
    CHECK(kTwoPhase.phi_eq(a) <= 1.0);
  }
  // Continuity at both saturation points.
  for (double rs : {kTwoPhase.rho1_star(), kTwoPhase.rho2_star()}) {
    CHECK(std::abs(kTwoPhase.phi_eq(rs * (1 + 1e-12)) - kTwoPhase.phi_eq(rs * (1 - 1e-12))) < 1e-9);
  }
  CHECK_THROWS_AS(TwoPhaseModel(1.0, 1.5), ConfigError);
  CHECK_THROWS_AS(TwoPhaseModel(1.5, 1.5), ConfigError);
  CHECK_THROWS_AS(TwoPhaseModel(1.5, 1.6), ConfigError);
}

TEST_CASE("two-phase equilibrium pressure") {
  const double e = 0.7;
  const double r1 = kTwoPhase.rho1_star();
  const double r2 = kTwoPhase.rho2_star();
  CHECK(kTwoPhase.equilibrium_pressure(0.5 * r1, e) == doctest::Approx(0.6 * 0.5 * r1 * e));
  CHECK(kTwoPhase.equilibrium_pressure(r1, e) == doctest::Approx(0.6 * r1 * e));
  CHECK(kTwoPhase.equilibrium_pressure(0.5 * (r1 + r2), e) == doctest::Approx(0.6 * r1 * e));
  CHECK(kTwoPhase.equilibrium_pressure(2.0 * r2, e) == doctest::Approx(0.5 * 2.0 * r2 * e));
  CHECK_THROWS_AS(kTwoPhase.equilibrium_pressure(0.0, e), DomainError);
  CHECK_THROWS_AS(kTwoPhase.equilibrium_pressure(1.0, -e), DomainError);
}

TEST_CASE("two-phase state conversions and admissibility") {
  const StateVector prim{1.2, 0.3, 0.15, 0.4};
  const StateVector w = kTwoPhase.from_primitive(prim);
  CHECK(w[0] == 1.2);
  CHECK(w[1] == doctest::Approx(0.36));
  CHECK(w[3] == doctest::Approx(0.48));
  const StateVector back = kTwoPhase.to_primitive(w);
  CHECK(max_abs_difference(back, prim) <= 1e-15);
  CHECK(kTwoPhase.admissible(w));
  CHECK_FALSE(kTwoPhase.admissible(kTwoPhase.from_primitive({1.0, 0.0, 0.1, 1.1})));
  CHECK_FALSE(kTwoPhase.admissible(StateVector{-1.0, 0.0, 1.0, 0.5}));
  CHECK_FALSE(kTwoPhase.admissible(StateVector{1.0, 0.0, -1.0, 0.5}));

  const StateVector eq = kTwoPhase.from_equilibrium_primitive(1.0 / 0.92, 0.4301, 0.1445);
  CHECK(eq[3] / eq[0] == kTwoPhase.phi_eq(1.0 / 0.92));
  CHECK(kTwoPhase.to_primitive(eq)[2] == doctest::Approx(0.1445).epsilon(1e-14));

  const double c = kTwoPhase.sound_speed(w);
  CHECK(c == doctest::Approx(std::sqrt(kTwoPhase.mixture_gamma(0.4) * 0.15 / 1.2)));
  CHECK(kTwoPhase.max_wave_speed(w) == doctest::Approx(0.3 + c));
  CHECK(kTwoPhase.flux(w)[3] == doctest::Approx(0.48 * 0.3));
}

TEST_CASE("model factory") {
  ModelSpec spec;
  spec.name = "jinxin";
  CHECK(make_model(spec)->id() == "jinxin");
  spec.name = "chaplygin";
  CHECK(make_model(spec)->size() == 3);
  spec.name = "twophase";
  CHECK(make_model(spec)->conserved_size() == 3);
  spec.name = "euler";
  CHECK_THROWS_AS(make_model(spec), ConfigError);
  spec.name = "jinxin";
  spec.flux = "cubic";
  CHECK_THROWS_AS(make_model(spec), ConfigError);
}
