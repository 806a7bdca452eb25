#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isingotto/equilibrium.hpp"
#include "isingotto/errors.hpp"
#include "isingotto/quasiparticle.hpp"

using namespace isingotto;
using std::numbers::pi;

namespace {
ThermalState tl(double g, double h, double t) { return {ModelParams::thermodynamic(g, h), t}; }
}  // namespace

TEST_CASE("domain-wall states") {
  const auto s = domain_wall_state(10, 3);
  CHECK(s.theta == doctest::Approx(3 * pi / 10));
  REQUIRE(s.amplitudes.size() == 9);
  double norm = 0.0;
  for (double a : s.amplitudes) norm += a * a;
  CHECK(norm == doctest::Approx(1.0));
  CHECK(s.norm_sq == doctest::Approx(5.0));  // N/2
  CHECK(s.amplitudes[0] == doctest::Approx(std::sin(s.theta) / std::sqrt(5.0)));
  CHECK_THROWS_AS(domain_wall_state(2, 1), DomainError);
  CHECK_THROWS_AS(domain_wall_state(10, 0), DomainError);
  CHECK_THROWS_AS(domain_wall_state(10, 10), DomainError);
}

TEST_CASE("mu dispersion") {
  CHECK(mu(ModelParams::thermodynamic(1.0, 0.0), 1.234) == doctest::Approx(2.0));
  CHECK(mu(ModelParams::thermodynamic(1.0, 0.5), 0.0) == doctest::Approx(1.0));
  CHECK(mu(ModelParams::thermodynamic(1.0, 0.5), pi) == doctest::Approx(3.0));
}

TEST_CASE("quasiparticle magnetization") {
  SUBCASE("band centre") {
    const auto m = qp_magnetization(20, 10);
    CHECK(m.approximation == doctest::Approx(0.0).scale(1.0));
    CHECK(std::abs(m.pair_sum) < 1.0);
    CHECK(m.normalized == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("N = 100") {
    const auto low = qp_magnetization(100, 10);
    CHECK(low.approximation == doctest::Approx(0.5 * 99 * std::cos(pi / 10)));
    CHECK(std::abs(low.pair_sum - low.approximation) / low.approximation < 0.02);
    CHECK(qp_magnetization(100, 90).pair_sum < 0.0);
    CHECK(qp_magnetization(100, 90).normalized < 0.0);
  }
  SUBCASE("normalized expectation is exactly 2 cos theta_k") {
    for (int n : {3, 5, 8, 13}) {
      for (int k = 1; k < n; ++k) {
        const auto m = qp_magnetization(n, k);
        CHECK(m.normalized == doctest::Approx(2.0 * std::cos(k * pi / n)).scale(1.0));
        if (n >= 8 && 2 * k != n) CHECK((m.pair_sum > 0.0) == (std::cos(k * pi / n) > 0.0));
      }
    }
  }
  SUBCASE("pair sum approaches (N-1)/2 cos theta as 1/N") {
    // pair_sum = (N/2) cos theta_k exactly, so the relative error is 1/(N-1).
    double prev = 1.0;
    for (int n : {10, 20, 40, 80}) {
      const auto m = qp_magnetization(n, n / 5);
      const double rel = std::abs(m.pair_sum - m.approximation) / std::abs(m.approximation);
      CHECK(rel * (n - 1) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(rel < prev);
      prev = rel;
    }
  }
}

TEST_CASE("quasiparticle free energy") {
  CHECK(qp_free_energy(tl(1.0, 0.0, 0.5)) == doctest::Approx(-0.5 * std::exp(-4.0)));
  // mpmath references.
  CHECK(qp_free_energy(tl(1.0, 0.3, 0.2)) == doctest::Approx(-4.4317528116705799e-5).epsilon(1e-10));
  CHECK(qp_free_energy(tl(1.0, 0.5, 0.4)) == doctest::Approx(-0.0088667047152505733).epsilon(1e-10));
  CHECK(qp_free_energy(tl(1.0, 0.3, 0.02)) < 0.0);
  CHECK(qp_free_energy(tl(1.0, 0.3, 0.02)) > -1e-20);
  CHECK(qp_thermal_magnetization(tl(1.0, 0.3, 0.2)) == doctest::Approx(0.00035896546039035598).epsilon(1e-9));
  CHECK(qp_thermal_magnetization(tl(1.0, 0.5, 0.4)) == doctest::Approx(0.033915001344985265).epsilon(1e-9));
}

TEST_CASE("quasiparticle dM/dT") {
  CHECK(qp_dM_dT(tl(1.0, 0.3, 0.2)).value == doctest::Approx(0.013095471103963708).epsilon(1e-8));
  CHECK(qp_dM_dT(tl(1.0, 0.5, 0.4)).value == doctest::Approx(0.23164049782319856).epsilon(1e-8));

  const auto s = qp_dM_dT(tl(1.0, 0.3, 0.1));
  CHECK(s.value > 0.0);
  CHECK(s.sign == 1);
  // Finite difference of -d f_qp / dh over T.
  auto m = [](double t) {
    const double d = 1e-5;
    return -(qp_free_energy(tl(1.0, 0.3 + d, t)) - qp_free_energy(tl(1.0, 0.3 - d, t))) / (2 * d);
  };
  const double dt = 1e-4;
  CHECK(std::abs(s.value - (m(0.1 + dt) - m(0.1 - dt)) / (2 * dt)) < 1e-5);

  const auto flat = qp_dM_dT(tl(1.0, 0.0, 0.3));
  CHECK(flat.sign == 0);
  CHECK(std::abs(flat.value) < 1e-12);
}

TEST_CASE("quasiparticle picture explains the low-temperature slope sign") {
  for (double t = 0.02; t <= 0.3 + 1e-12; t += 0.02) {
    CAPTURE(t);
    CHECK(qp_dM_dT(tl(1.0, 0.1, t)).sign == 1);
    CHECK(dM_dT(tl(1.0, 0.1, t)) > 0.0);
  }
}

TEST_CASE("quasiparticle free energy is the leading Boltzmann term with omega -> mu") {
  // -(T/pi) int ln(1 + e^{-mu/T}) differs from the qp form only at order e^{-2 mu/T}.
  const double t = 0.15;
  const auto p = ModelParams::thermodynamic(1.0, 0.3);
  const double full = -t * mode_average(p, [&](double th) { return std::log1p(std::exp(-mu(p, th) / t)); });
  const double qp = qp_free_energy({p, t});
  CHECK(std::abs(full - qp) < 1e-3 * std::abs(qp));
}
