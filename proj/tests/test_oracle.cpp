#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "isingotto/cycle.hpp"
#include "isingotto/equilibrium.hpp"
#include "isingotto/errors.hpp"
#include "isingotto/oracle.hpp"

using namespace isingotto;

TEST_CASE("two-site chain at h = 0") {
  // -g sx1 sx2 (both bonds of the ring coincide: -2 sx1 sx2).
  const auto s = diagonalize(ModelParams::finite(1.0, 0.0, 2));
  REQUIRE(s.dimension() == 4);
  CHECK(s.energies[0] == doctest::Approx(-2.0));
  CHECK(s.energies[1] == doctest::Approx(-2.0));
  CHECK(s.energies[2] == doctest::Approx(2.0));
  CHECK(s.energies[3] == doctest::Approx(2.0));
}

TEST_CASE("ground state matches the antiperiodic free-fermion sum") {
  for (int n : {4, 6, 8, 10}) {
    for (double h : {0.3, 1.0, 1.8}) {
      CAPTURE(n);
      CAPTURE(h);
      const auto p = ModelParams::finite(1.0, h, n);
      CHECK(diagonalize(p).energies[0] == doctest::Approx(*ground_state_energy(p).total).epsilon(1e-12));
    }
  }
}

TEST_CASE("spectrum invariants") {
  const auto p = ModelParams::finite(0.8, 0.6, 8);
  const auto s = diagonalize(p, 2);
  REQUIRE(s.dimension() == 256);
  CHECK(std::is_sorted(s.energies.begin(), s.energies.end()));
  // Tr H = 0 and Tr H^2 = N (g^2 + h^2) 2^N.
  const double tr = std::accumulate(s.energies.begin(), s.energies.end(), 0.0);
  double tr2 = 0.0;
  for (double e : s.energies) tr2 += e * e;
  CHECK(std::abs(tr) < 1e-10);
  CHECK(tr2 == doctest::Approx(8 * (0.64 + 0.36) * 256));
  // Moments sum to Tr(sum sz) = 0 and each lies in [-N, N].
  const double msum = std::accumulate(s.transverse_moments.begin(), s.transverse_moments.end(), 0.0);
  CHECK(std::abs(msum) < 1e-9);
  for (double m : s.transverse_moments) CHECK(std::abs(m) <= 8.0 + 1e-12);
  // Even N: half the states in each parity sector.
  CHECK(std::count(s.parity.begin(), s.parity.end(), 0) == 128);
  // Hellmann-Feynman: the ground state moment is -dE0/dh.
  const double d = 1e-5;
  const double e_plus = diagonalize(ModelParams::finite(0.8, 0.6 + d, 8)).energies[0];
  const double e_minus = diagonalize(ModelParams::finite(0.8, 0.6 - d, 8)).energies[0];
  CHECK(s.transverse_moments[0] == doctest::Approx(-(e_plus - e_minus) / (2 * d)).epsilon(1e-6));
}

TEST_CASE("block eigenvectors satisfy H v = E v in the spin basis") {
  const auto p = ModelParams::finite(1.0, 0.7, 6);
  for (int parity : {0, 1}) {
    for (int m : {0, 1, 3}) {
      for (int idx : {0, 2}) {
        const auto pair = block_eigenpair(p, parity, m, idx);
        std::vector<double> hr(pair.real.size());
        std::vector<double> hi(pair.imag.size());
        apply_hamiltonian(p, pair.real, hr);
        apply_hamiltonian(p, pair.imag, hi);
        double res = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < hr.size(); ++i) {
          res += std::pow(hr[i] - pair.energy * pair.real[i], 2) + std::pow(hi[i] - pair.energy * pair.imag[i], 2);
          norm += pair.real[i] * pair.real[i] + pair.imag[i] * pair.imag[i];
        }
        CHECK(norm == doctest::Approx(1.0));
        CHECK(std::sqrt(res) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(block_eigenpair(p, 0, 0, 1000), DomainError);
}

TEST_CASE("power iteration agrees with the lowest level") {
  // Independent of LAPACK: iterate (c - H) on a random-ish start vector.
  const auto p = ModelParams::finite(1.0, 1.3, 8);
  const std::size_t dim = 256;
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = 1.0 + 0.01 * static_cast<double>(i % 7);
  std::vector<double> w(dim);
  const double shift = 8 * (1.0 + 1.3);
  double lambda = 0.0;
  for (int it = 0; it < 3000; ++it) {
    apply_hamiltonian(p, v, w);
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] = shift * v[i] - w[i];
      norm += w[i] * w[i];
    }
    norm = std::sqrt(norm);
    double vw = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      vw += v[i] * w[i];
      v[i] = w[i] / norm;
    }
    lambda = vw;
  }
  CHECK(shift - lambda == doctest::Approx(diagonalize(p).energies[0]).epsilon(1e-9));
}

TEST_CASE("thermal expectations") {
  const auto p = ModelParams::finite(1.0, 0.8, 8);
  const auto s = diagonalize(p);
  const double t = 0.6;
  const auto th = thermal_expectations(s, t);
  CHECK(th.free_energy == doctest::Approx(th.energy - t * th.entropy).epsilon(1e-12));
  // M = -dF/dh.
  const double d = 1e-5;
  const double fp = thermal_expectations(diagonalize(ModelParams::finite(1.0, 0.8 + d, 8)), t).free_energy;
  const double fm = thermal_expectations(diagonalize(ModelParams::finite(1.0, 0.8 - d, 8)), t).free_energy;
  CHECK(th.magnetization == doctest::Approx(-(fp - fm) / (2 * d)).epsilon(1e-7));
  // N = 12 against a dense numpy diagonalization; still well short of the infinite chain.
  const auto big = thermal_expectations(diagonalize(ModelParams::finite(1.0, 0.8, 12)), t);
  CHECK(big.free_energy / 12 == doctest::Approx(-1.2176928655088866).epsilon(1e-11));
  CHECK(big.magnetization / 12 == doctest::Approx(0.46916063107582673).epsilon(1e-7));
  const double f_tl = free_energy({ModelParams::thermodynamic(1.0, 0.8), t});
  CHECK(std::abs(big.free_energy / 12 - f_tl) < std::abs(th.free_energy / 8 - f_tl));
  CHECK_THROWS_AS(thermal_expectations(s, 0.0), DomainError);
}

TEST_CASE("brute-force cycle") {
  const CycleSpec spec{1.0, 2.0, 1.5, 0.75, 0.1};
  SUBCASE("continuity tracking, N = 8") {
    // Independent numpy prototype of the same tracking.
    const auto r = brute_force_cycle_report(spec, 8);
    CHECK(r.result.work == doctest::Approx(-0.012569).epsilon(1e-4));
    CHECK(std::abs(r.result.work + r.result.q_hot + r.result.q_cold) < 1e-13);
    CHECK(r.min_overlap > 0.9);
    CHECK(r.level_reorderings > 0);
    CHECK(r.result.regime == Regime::Engine);
  }
  SUBCASE("ascending-index pairing, N = 8") {
    BruteForceOptions opts;
    opts.pairing = AdiabaticPairing::AscendingIndex;
    const auto r = brute_force_cycle_report(spec, 8, kDefaultZeroTolerance, opts);
    CHECK(r.result.work == doctest::Approx(-0.012620).epsilon(1e-4));
    CHECK(r.level_reorderings == 0);
    CHECK(r.diagonalizations == 2);
  }
  SUBCASE("no stroke, no work") {
    const auto r = brute_force_cycle({1.0, 0.7, 0.7, 0.9, 0.3}, 6, 0.0);
    CHECK(r.work == 0.0);
    CHECK(r.q_hot > 0.0);
  }
  SUBCASE("pairings agree when no levels cross") {
    // N = 2: four levels that never cross for h >= 0.
    BruteForceOptions opts;
    opts.pairing = AdiabaticPairing::AscendingIndex;
    const CycleSpec small{1.0, 0.9, 0.4, 0.8, 0.2};
    CHECK(brute_force_cycle(small, 2).work == doctest::Approx(brute_force_cycle(small, 2, 1e-10, opts).work));
  }
  SUBCASE("thread count does not change the answer") {
    BruteForceOptions one;
    BruteForceOptions four;
    four.threads = 4;
    const auto a = brute_force_cycle(spec, 8, 0.0, one);
    const auto b = brute_force_cycle(spec, 8, 0.0, four);
    CHECK(a.work == b.work);
    CHECK(a.q_hot == b.q_hot);
  }
  CHECK_THROWS_AS(brute_force_cycle(spec, 14), DimensionCap);
  CHECK_THROWS_AS(diagonalize(ModelParams::thermodynamic(1.0, 0.5)), DomainError);
  CHECK_THROWS_AS(diagonalize(ModelParams::finite(1.0, 0.5, 7)), DomainError);
}

TEST_CASE("discrete-mode cycle is the finite-N mode sum") {
  const CycleSpec spec{1.0, 2.0, 1.5, 0.75, 0.1};
  CHECK(discrete_mode_cycle(spec, 8).work == doctest::Approx(-0.012000782858554599).epsilon(1e-12));
}

TEST_CASE("spectral cache") {
  const auto p = ModelParams::finite(1.0, 0.45, 6);
  const auto s = diagonalize(p);
  std::stringstream buf;
  write_decomposition(buf, s);
  CHECK(buf.str().size() == 8 + 4 * 8 + 2 * 64 * 8);
  CHECK(buf.str().substr(0, 8) == "TFIMSPEC");
  const auto back = read_decomposition(buf);
  CHECK(back.n_sites == 6);
  CHECK(back.h == 0.45);
  CHECK(back.energies == s.energies);
  CHECK(back.transverse_moments == s.transverse_moments);

  std::stringstream bad("NOTASPEC........");
  CHECK_THROWS_AS(read_decomposition(bad), Error);
  std::string truncated = buf.str().substr(0, 60);
  std::stringstream shortbuf(truncated);
  CHECK_THROWS_AS(read_decomposition(shortbuf), Error);

  const auto dir = std::filesystem::temp_directory_path() / "isingotto_cache_test";
  std::filesystem::remove_all(dir);
  DecompositionCache cache(dir);
  const auto first = cache.get(p);
  CHECK(std::filesystem::exists(cache.path_for(p)));
  const auto second = cache.get(p);
  CHECK(second.energies == first.energies);
  std::filesystem::remove_all(dir);

  const auto hot = diagonalize(ModelParams::finite(1.0, 0.9, 6));
  const auto cold = diagonalize(ModelParams::finite(1.0, 0.45, 6));
  BruteForceOptions opts;
  opts.pairing = AdiabaticPairing::AscendingIndex;
  const CycleSpec spec{1.0, 0.9, 0.45, 0.8, 0.2};
  CHECK(ascending_pairing_cycle(hot, cold, spec).work == brute_force_cycle(spec, 6, 1e-10, opts).work);
  CHECK_THROWS_AS(ascending_pairing_cycle(cold, hot, spec), DomainError);
}
