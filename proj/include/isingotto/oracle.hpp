#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "isingotto/cycle.hpp"
#include "isingotto/dispersion.hpp"

namespace isingotto {

// Brute-force ground truth for small periodic chains, independent of the
// free-fermion solution: the spin Hamiltonian is built bit by bit and
// diagonalised numerically.
inline constexpr int kMaxOracleSites = 12;

// Full many-body spectrum. Levels are sorted by energy; each carries its
// <sum_j sz_j> and the symmetry sector it was found in.
struct SpectralDecomposition {
  int n_sites = 0;
  double g = 0.0;
  double h = 0.0;
  std::vector<double> energies;
  std::vector<double> transverse_moments;
  // Spin-flip parity (number of down spins mod 2) and crystal momentum index m
  // (k = 2 pi m / N). Empty for decompositions read back from a cache file.
  std::vector<int> parity;
  std::vector<int> momentum;

  std::size_t dimension() const { return energies.size(); }
};

// Spin basis: bit j of a state is 1 when site j points down (sz_j = -1).
// out = H in, for vectors of length 2^N. Used for residual and power-iteration
// checks of the block solver.
void apply_hamiltonian(const ModelParams& p, std::span<const double> in, std::span<double> out);

// Diagonalises every (parity, momentum) block with LAPACK zheevd.
// Requires a finite chain with 2 <= N <= 12 (DimensionCap above that).
SpectralDecomposition diagonalize(const ModelParams& p, int threads = 1);

struct EigenPair {
  double energy;
  std::vector<double> real;  // 2^N components, spin basis
  std::vector<double> imag;
};

// Eigenpairs of one symmetry block expanded back to the spin basis. Meant for
// verification; index counts from the bottom of the block.
EigenPair block_eigenpair(const ModelParams& p, int parity, int momentum, int index);

// Extensive Gibbs averages.
struct ThermalExpectations {
  double energy;
  double free_energy;
  double entropy;  // sum p ln(1/p)
  double magnetization;
};

ThermalExpectations thermal_expectations(const SpectralDecomposition& spectrum, double temperature);

enum class AdiabaticPairing {
  // Follow each eigenstate along h_H -> h_C by eigenvector overlap inside its
  // symmetry block; exact level crossings are passed through.
  Continuity,
  // Pair the k-th lowest level at h_H with the k-th lowest at h_C.
  AscendingIndex,
};

struct BruteForceOptions {
  AdiabaticPairing pairing = AdiabaticPairing::Continuity;
  int initial_steps = 8;
  int max_refinements = 12;
  // A tracking step is halved until every state keeps at least this much
  // weight in the level cluster it is matched to.
  double min_overlap = 0.9;
  int threads = 1;
};

struct BruteForceReport {
  CycleResult result;  // per site
  // Levels that cross another level (beyond degeneracy tolerance) between
  // h_H and h_C, i.e. whose place in the sorted spectrum changes.
  int level_reorderings = 0;
  // Smallest matched overlap along the path (1 for ascending pairing).
  double min_overlap = 1.0;
  int diagonalizations = 0;
};

BruteForceReport brute_force_cycle_report(const CycleSpec& spec, int n_sites,
                                          double zero_tolerance = kDefaultZeroTolerance,
                                          const BruteForceOptions& options = {});

// Four-stroke cycle on the exact N-site spectrum with thermal populations
// carried through the adiabats. Per-site results.
CycleResult brute_force_cycle(const CycleSpec& spec, int n_sites,
                              double zero_tolerance = kDefaultZeroTolerance,
                              const BruteForceOptions& options = {});

// Ascending-index cycle from two precomputed spectra (e.g. from a cache).
CycleResult ascending_pairing_cycle(const SpectralDecomposition& hot, const SpectralDecomposition& cold,
                                    const CycleSpec& spec, double zero_tolerance = kDefaultZeroTolerance);

// Per-mode cycle on the N antiperiodic angles theta_j = pi (2j - 1) / N.
CycleResult discrete_mode_cycle(const CycleSpec& spec, int n_sites,
                                double zero_tolerance = kDefaultZeroTolerance);

// Binary cache format, little-endian:
//   8 bytes magic "TFIMSPEC", then version, N, g, h as float64,
//   then 2^N float64 energies and 2^N float64 moments.
inline constexpr double kCacheVersion = 1.0;

void write_decomposition(std::ostream& out, const SpectralDecomposition& spectrum);
SpectralDecomposition read_decomposition(std::istream& in);

// Directory of cached decompositions keyed by (N, g, h).
class DecompositionCache {
 public:
  explicit DecompositionCache(std::filesystem::path directory);

  // Loads the cached spectrum or diagonalises and stores it.
  SpectralDecomposition get(const ModelParams& p, int threads = 1);

  std::filesystem::path path_for(const ModelParams& p) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace isingotto
