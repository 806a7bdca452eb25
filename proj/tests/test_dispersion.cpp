#include <doctest.h>

#include <algorithm>

#include <cmath>
#include <numbers>

#include "isingotto/dispersion.hpp"
#include "isingotto/errors.hpp"

using namespace isingotto;
using std::numbers::pi;

TEST_CASE("omega closed forms") {
  CHECK(omega(1.0, 0.0, 0.7) == doctest::Approx(2.0));
  CHECK(omega(1.0, 2.0, 0.0) == doctest::Approx(2.0));       // 2|h - g|
  CHECK(omega(1.0, 2.0, pi) == doctest::Approx(6.0));        // 2(h + g)
  CHECK(omega(1.0, 1.0, 0.0) == 0.0);                        // gapless at h = g
  CHECK(omega(1.0, 1.0, 1e-9) == doctest::Approx(2e-9).epsilon(1e-6));
  CHECK(omega(0.7, 0.3, 1.1) == doctest::Approx(2.0 * std::sqrt(0.09 + 0.49 - 0.42 * std::cos(1.1))));
}

TEST_CASE("domega_dh matches a finite difference and flags the gap closing") {
  for (double h : {0.2, 0.9, 1.5}) {
    for (double th : {0.1, 1.0, 2.5}) {
      const double d = 1e-6;
      const double fd = (omega(1.0, h + d, th) - omega(1.0, h - d, th)) / (2 * d);
      CHECK(domega_dh(1.0, h, th) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(domega_dh(1.0, 1.0, 0.0), SingularPoint);
}

TEST_CASE("mode angles are the antiperiodic set") {
  const auto a = mode_angles(4);
  REQUIRE(a.size() == 4);
  CHECK(a[0] == doctest::Approx(pi / 4));
  CHECK(a[1] == doctest::Approx(3 * pi / 4));
  CHECK(a[3] == doctest::Approx(7 * pi / 4));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(ModelParams::thermodynamic(0.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(ModelParams::thermodynamic(-1.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(ModelParams::finite(1.0, 1.0, 3).validate(), DomainError);
  CHECK_THROWS_AS(ModelParams::finite(1.0, 1.0, 0).validate(), DomainError);
  CHECK_THROWS_AS(ModelParams::thermodynamic(1.0, std::nan("")).validate(), DomainError);
  CHECK_NOTHROW(ModelParams::finite(1.0, -0.5, 6).validate());
  CHECK(ModelParams::thermodynamic(1.0, 0.5).is_thermodynamic_limit());
  CHECK_FALSE(ModelParams::finite(1.0, 0.5, 4).is_thermodynamic_limit());
}

TEST_CASE("ground-state energy per site") {
  // mpmath references.
  CHECK(ground_state_energy(ModelParams::thermodynamic(1.0, 0.5)).per_site ==
        doctest::Approx(-1.063544409973365).epsilon(1e-12));
  CHECK(ground_state_energy(ModelParams::thermodynamic(1.0, 1.0)).per_site ==
        doctest::Approx(-4.0 / pi).epsilon(1e-12));
  CHECK(ground_state_energy(ModelParams::thermodynamic(1.0, 2.0)).per_site ==
        doctest::Approx(-2.1270888199467299).epsilon(1e-12));
  CHECK_FALSE(ground_state_energy(ModelParams::thermodynamic(1.0, 2.0)).total);

  // h = 0: every mode costs 2g, E0 = -N g.
  const auto e = ground_state_energy(ModelParams::finite(1.0, 0.0, 6));
  REQUIRE(e.total);
  CHECK(*e.total == doctest::Approx(-6.0));
  CHECK(e.per_site == doctest::Approx(-1.0));
}

TEST_CASE("critical breakpoints only near h = +-g") {
  CHECK(theta_breakpoints(1.0, 0.5).empty());
  CHECK(theta_breakpoints(1.0, -0.5).empty());
  const auto b = theta_breakpoints(1.0, 1.0 + 1e-5);
  CHECK_FALSE(b.empty());
  CHECK(b.back() == 0.5);
  // Mirrored to theta = pi, still ascending.
  const auto m = theta_breakpoints(1.0, -1.0 - 1e-5);
  REQUIRE(m.size() == b.size());
  CHECK(m.front() == doctest::Approx(std::numbers::pi - 0.5));
  CHECK(std::is_sorted(m.begin(), m.end()));
  CHECK(m.back() < std::numbers::pi);
}
