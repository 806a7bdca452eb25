#include "isingotto/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

// Must precede every LAPACK/OpenBLAS header so lapack_complex_double is std::complex.
#define LAPACK_COMPLEX_CPP
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#include <cblas.h>

#include "isingotto/errors.hpp"
#include "isingotto/parallel.hpp"

namespace isingotto {

namespace {

using cplx = std::complex<double>;

// -g * coeff is added to H(to, from).
struct Transition {
  int from;
  int to;
  cplx coeff;
};

// Momentum/parity block in the Bloch basis
// |a(k)> = N_a^{-1/2} sum_r e^{-i k r} T^r |a>, N_a = N^2 / R_a,
// where a is the smallest state of its translation orbit and R_a its period.
struct Block {
  int parity = 0;
  int momentum = 0;
  std::vector<std::uint32_t> reps;
  std::vector<int> periods;
  std::vector<double> mz;  // sum_j sz_j, constant on an orbit
  std::vector<Transition> transitions;

  int size() const { return static_cast<int>(reps.size()); }
};

struct BlockEigen {
  std::vector<double> energies;  // ascending
  std::vector<cplx> vectors;     // column-major, size x size
};

std::uint32_t rotate(std::uint32_t s, int n) {
  const std::uint32_t mask = (1u << n) - 1u;
  return ((s << 1) | (s >> (n - 1))) & mask;
}

double spin_sum(std::uint32_t s, int n) { return n - 2.0 * std::popcount(s); }

void check_size(int n) {
  if (n < 2 || n > kMaxOracleSites) {
    std::ostringstream msg;
    msg << "exact diagonalization supports 2 <= N <= " << kMaxOracleSites << ", got " << n;
    throw DimensionCap(msg.str());
  }
}

void check_params(const ModelParams& p) {
  if (!p.n_sites) throw DomainError("the oracle needs a finite chain (n_sites)");
  check_size(*p.n_sites);
  p.validate();
}

std::vector<Block> build_blocks(int n) {
  const std::uint32_t dim = 1u << n;
  std::vector<std::uint32_t> rep_of(dim);
  std::vector<int> shift_of(dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    std::uint32_t t = s;
    std::uint32_t best = s;
    int best_shift = 0;
    for (int l = 1; l < n; ++l) {
      t = rotate(t, n);
      if (t < best) {
        best = t;
        best_shift = l;
      }
    }
    rep_of[s] = best;
    shift_of[s] = best_shift;  // T^shift s = rep
  }
  auto period = [n](std::uint32_t a) {
    std::uint32_t t = a;
    for (int l = 1; l <= n; ++l) {
      t = rotate(t, n);
      if (t == a) return l;
    }
    return n;
  };

  std::vector<Block> blocks;
  std::vector<int> index_in_block(dim, -1);
  for (int parity = 0; parity < 2; ++parity) {
    for (int m = 0; m < n; ++m) {
      Block b;
      b.parity = parity;
      b.momentum = m;
      for (std::uint32_t s = 0; s < dim; ++s) {
        if (rep_of[s] != s || std::popcount(s) % 2 != parity) continue;
        const int r = period(s);
        if ((m * r) % n != 0) continue;
        index_in_block[s] = b.size();
        b.reps.push_back(s);
        b.periods.push_back(r);
        b.mz.push_back(spin_sum(s, n));
      }
      const double k = 2.0 * std::numbers::pi * m / n;
      for (int ia = 0; ia < b.size(); ++ia) {
        const std::uint32_t a = b.reps[static_cast<std::size_t>(ia)];
        for (int j = 0; j < n; ++j) {
          const std::uint32_t flipped = a ^ (1u << j) ^ (1u << ((j + 1) % n));
          const std::uint32_t rep = rep_of[flipped];
          const int ib = index_in_block[rep];
          // Representatives incompatible with k are not in this block.
          if (ib < 0) continue;
          const double ratio = static_cast<double>(b.periods[static_cast<std::size_t>(ia)]) /
                               b.periods[static_cast<std::size_t>(ib)];
          b.transitions.push_back(
              {ia, ib, std::polar(std::sqrt(ratio), -k * shift_of[flipped])});
        }
      }
      for (std::uint32_t s : b.reps) index_in_block[s] = -1;
      if (b.size() > 0) blocks.push_back(std::move(b));
    }
  }
  return blocks;
}

BlockEigen solve_block(const Block& b, double g, double h) {
  const int n = b.size();
  std::vector<cplx> a(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0});
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = -h * b.mz[static_cast<std::size_t>(i)];
  for (const auto& t : b.transitions) {
    a[static_cast<std::size_t>(t.from) * n + t.to] += -g * t.coeff;
  }
  BlockEigen eig;
  eig.energies.resize(static_cast<std::size_t>(n));
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, eig.energies.data());
  if (info != 0) {
    std::ostringstream msg;
    msg << "zheevd failed with info = " << info << " on a block of size " << n;
    throw Error(msg.str());
  }
  eig.vectors = std::move(a);
  return eig;
}

double column_moment(const Block& b, const BlockEigen& eig, int col) {
  const int n = b.size();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    m += std::norm(eig.vectors[static_cast<std::size_t>(col) * n + i]) * b.mz[static_cast<std::size_t>(i)];
  }
  return m;
}

double degeneracy_tolerance(int n_sites, double g, double h) {
  return 1e-10 * n_sites * (std::abs(g) + std::abs(h));
}

struct Match {
  std::vector<int> next_index;  // previous eigen-index -> new eigen-index
  double min_weight = 1.0;
};

// Pairs the eigenvectors of consecutive path points. Each previous state is
// assigned to a cluster of (numerically) degenerate new levels by its summed
// overlap weight, greedily by decreasing weight; inside a cluster slots are
// filled in order since any basis of the cluster is equally valid.
Match match_states(const BlockEigen& prev, const BlockEigen& next, double tol) {
  const int n = static_cast<int>(next.energies.size());
  std::vector<cplx> overlap(static_cast<std::size_t>(n) * n);
  const cplx one{1.0, 0.0};
  const cplx zero{0.0, 0.0};
  // overlap(i, j) = <prev_i | next_j>, column-major.
  cblas_zgemm(CblasColMajor, CblasConjTrans, CblasNoTrans, n, n, n, &one, prev.vectors.data(), n,
              next.vectors.data(), n, &zero, overlap.data(), n);

  std::vector<int> cluster_start;
  std::vector<int> cluster_of(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == 0 || next.energies[static_cast<std::size_t>(j)] -
                          next.energies[static_cast<std::size_t>(j - 1)] > tol) {
      cluster_start.push_back(j);
    }
    cluster_of[static_cast<std::size_t>(j)] = static_cast<int>(cluster_start.size()) - 1;
  }
  const int clusters = static_cast<int>(cluster_start.size());
  std::vector<int> fill(cluster_start.begin(), cluster_start.end());
  std::vector<int> end(static_cast<std::size_t>(clusters));
  for (int c = 0; c < clusters; ++c) {
    end[static_cast<std::size_t>(c)] = c + 1 < clusters ? cluster_start[static_cast<std::size_t>(c + 1)] : n;
  }

  struct Candidate {
    double weight;
    int prev;
    int cluster;
  };
  std::vector<Candidate> candidates;
  std::vector<double> weight(static_cast<std::size_t>(clusters));
  for (int i = 0; i < n; ++i) {
    std::fill(weight.begin(), weight.end(), 0.0);
    for (int j = 0; j < n; ++j) {
      weight[static_cast<std::size_t>(cluster_of[static_cast<std::size_t>(j)])] +=
          std::norm(overlap[static_cast<std::size_t>(j) * n + i]);
    }
    for (int c = 0; c < clusters; ++c) {
      if (weight[static_cast<std::size_t>(c)] > 1e-3) candidates.push_back({weight[static_cast<std::size_t>(c)], i, c});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.prev != b.prev) return a.prev < b.prev;
    return a.cluster < b.cluster;
  });

  Match match;
  match.next_index.assign(static_cast<std::size_t>(n), -1);
  std::vector<double> assigned_weight(static_cast<std::size_t>(n), 0.0);
  for (const auto& cand : candidates) {
    auto& slot = fill[static_cast<std::size_t>(cand.cluster)];
    if (match.next_index[static_cast<std::size_t>(cand.prev)] >= 0 ||
        slot >= end[static_cast<std::size_t>(cand.cluster)]) {
      continue;
    }
    match.next_index[static_cast<std::size_t>(cand.prev)] = slot++;
    assigned_weight[static_cast<std::size_t>(cand.prev)] = cand.weight;
  }
  // Leftovers (only when overlaps are badly spread) take the free slots in order.
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (match.next_index[static_cast<std::size_t>(i)] >= 0) continue;
    while (fill[static_cast<std::size_t>(c)] >= end[static_cast<std::size_t>(c)]) ++c;
    match.next_index[static_cast<std::size_t>(i)] = fill[static_cast<std::size_t>(c)]++;
    assigned_weight[static_cast<std::size_t>(i)] = 0.0;
  }
  match.min_weight = *std::min_element(assigned_weight.begin(), assigned_weight.end());
  return match;
}

struct TrackedBlock {
  std::vector<double> hot;   // energy of each state at h_H
  std::vector<double> cold;  // energy of the same state at h_C
  double min_overlap = 1.0;
  int diagonalizations = 0;
};

struct Tracker {
  const Block& block;
  double g;
  double tol;
  const BruteForceOptions& options;
  TrackedBlock out;
  std::vector<int> index_of_label;

  BlockEigen advance(BlockEigen current, double h_from, double h_to, int depth) {
    BlockEigen next = solve_block(block, g, h_to);
    ++out.diagonalizations;
    Match m = match_states(current, next, tol);
    if (m.min_weight < options.min_overlap && depth < options.max_refinements) {
      const double mid = 0.5 * (h_from + h_to);
      current = advance(std::move(current), h_from, mid, depth + 1);
      return advance(std::move(current), mid, h_to, depth + 1);
    }
    out.min_overlap = std::min(out.min_overlap, m.min_weight);
    for (int& idx : index_of_label) idx = m.next_index[static_cast<std::size_t>(idx)];
    return next;
  }
};

TrackedBlock track_block(const Block& b, const CycleSpec& spec, int n_sites,
                         const BruteForceOptions& options) {
  const double tol = degeneracy_tolerance(n_sites, spec.g, std::max(std::abs(spec.h_hot), std::abs(spec.h_cold)));
  Tracker tracker{b, spec.g, tol, options, {}, {}};
  BlockEigen start = solve_block(b, spec.g, spec.h_hot);
  tracker.out.diagonalizations = 1;
  tracker.out.hot = start.energies;
  tracker.index_of_label.resize(start.energies.size());
  std::iota(tracker.index_of_label.begin(), tracker.index_of_label.end(), 0);

  BlockEigen current = std::move(start);
  const int steps = std::max(options.initial_steps, 1);
  if (spec.h_hot != spec.h_cold) {
    for (int s = 1; s <= steps; ++s) {
      const double from = spec.h_hot + (spec.h_cold - spec.h_hot) * (s - 1) / steps;
      const double to = s == steps ? spec.h_cold : spec.h_hot + (spec.h_cold - spec.h_hot) * s / steps;
      current = tracker.advance(std::move(current), from, to, 0);
    }
  }
  tracker.out.cold.resize(tracker.out.hot.size());
  for (std::size_t l = 0; l < tracker.out.hot.size(); ++l) {
    tracker.out.cold[l] = current.energies[static_cast<std::size_t>(tracker.index_of_label[l])];
  }
  return std::move(tracker.out);
}

std::vector<double> gibbs_weights(std::span<const double> energies, double temperature) {
  const double e_min = *std::min_element(energies.begin(), energies.end());
  std::vector<double> p(energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    p[i] = std::exp(-(energies[i] - e_min) / temperature);
    z += p[i];
  }
  for (double& x : p) x /= z;
  return p;
}

// Labels involved in at least one pair whose order is reversed by more than
// `tol` between the two ends of the stroke.
int count_reorderings(std::span<const double> hot, std::span<const double> cold, double tol) {
  const std::size_t n = hot.size();
  std::vector<char> moved(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double dh = hot[a] - hot[b];
      const double dc = cold[a] - cold[b];
      if ((dh > tol && dc < -tol) || (dh < -tol && dc > tol)) moved[a] = moved[b] = 1;
    }
  }
  return static_cast<int>(std::count(moved.begin(), moved.end(), 1));
}

CycleResult cycle_from_levels(std::span<const double> hot, std::span<const double> cold,
                              const CycleSpec& spec, int n_sites, double zero_tolerance) {
  const auto p_hot = gibbs_weights(hot, spec.t_hot);
  const auto p_cold = gibbs_weights(cold, spec.t_cold);
  double work = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  for (std::size_t i = 0; i < hot.size(); ++i) {
    const double dp = p_hot[i] - p_cold[i];
    work += dp * (cold[i] - hot[i]);
    q_hot += hot[i] * dp;
    q_cold -= cold[i] * dp;
  }
  work /= n_sites;
  q_hot /= n_sites;
  q_cold /= n_sites;
  return {work, q_hot, q_cold, classify(work, q_hot, q_cold, zero_tolerance), zero_tolerance};
}

void put_f64(std::ostream& out, double x) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  std::array<char, 8> bytes{};
  for (auto& b : bytes) {
    b = static_cast<char>(bits & 0xffu);
    bits >>= 8;
  }
  out.write(bytes.data(), bytes.size());
}

double get_f64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw Error("truncated spectral cache file");
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | bytes[static_cast<std::size_t>(i)];
  return std::bit_cast<double>(bits);
}

constexpr std::array<char, 8> kMagic{'T', 'F', 'I', 'M', 'S', 'P', 'E', 'C'};

}  // namespace

void apply_hamiltonian(const ModelParams& p, std::span<const double> in, std::span<double> out) {
  check_params(p);
  const int n = *p.n_sites;
  const std::size_t dim = std::size_t{1} << n;
  if (in.size() != dim || out.size() != dim) {
    throw DomainError("apply_hamiltonian: vectors must have length 2^N");
  }
  for (std::uint32_t s = 0; s < dim; ++s) {
    double acc = -p.h * spin_sum(s, n) * in[s];
    for (int j = 0; j < n; ++j) {
      acc -= p.g * in[s ^ (1u << j) ^ (1u << ((j + 1) % n))];
    }
    out[s] = acc;
  }
}

SpectralDecomposition diagonalize(const ModelParams& p, int threads) {
  check_params(p);
  const int n = *p.n_sites;
  const auto blocks = build_blocks(n);

  struct Level {
    double energy;
    double moment;
    int parity;
    int momentum;
  };
  std::vector<std::vector<Level>> per_block(blocks.size());
  parallel_for(blocks.size(), threads, [&](std::size_t bi) {
    const Block& b = blocks[bi];
    const BlockEigen eig = solve_block(b, p.g, p.h);
    auto& levels = per_block[bi];
    for (int c = 0; c < b.size(); ++c) {
      levels.push_back({eig.energies[static_cast<std::size_t>(c)], column_moment(b, eig, c), b.parity, b.momentum});
    }
  });

  std::vector<Level> all;
  for (auto& levels : per_block) all.insert(all.end(), levels.begin(), levels.end());
  std::stable_sort(all.begin(), all.end(), [](const Level& a, const Level& b) { return a.energy < b.energy; });

  SpectralDecomposition out;
  out.n_sites = n;
  out.g = p.g;
  out.h = p.h;
  for (const auto& l : all) {
    out.energies.push_back(l.energy);
    out.transverse_moments.push_back(l.moment);
    out.parity.push_back(l.parity);
    out.momentum.push_back(l.momentum);
  }
  return out;
}

EigenPair block_eigenpair(const ModelParams& p, int parity, int momentum, int index) {
  check_params(p);
  const int n = *p.n_sites;
  for (const auto& b : build_blocks(n)) {
    if (b.parity != parity || b.momentum != momentum) continue;
    if (index < 0 || index >= b.size()) throw DomainError("block eigenpair index out of range");
    const BlockEigen eig = solve_block(b, p.g, p.h);
    const double k = 2.0 * std::numbers::pi * momentum / n;
    std::vector<cplx> full(std::size_t{1} << n, cplx{0.0, 0.0});
    for (int a = 0; a < b.size(); ++a) {
      const cplx amp = eig.vectors[static_cast<std::size_t>(index) * b.size() + a];
      const double norm = std::sqrt(static_cast<double>(n) * n / b.periods[static_cast<std::size_t>(a)]);
      std::uint32_t s = b.reps[static_cast<std::size_t>(a)];
      for (int r = 0; r < n; ++r) {
        full[s] += amp * std::polar(1.0 / norm, -k * r);
        s = rotate(s, n);
      }
    }
    EigenPair pair{eig.energies[static_cast<std::size_t>(index)], {}, {}};
    for (const auto& z : full) {
      pair.real.push_back(z.real());
      pair.imag.push_back(z.imag());
    }
    return pair;
  }
  throw DomainError("no such symmetry block");
}

ThermalExpectations thermal_expectations(const SpectralDecomposition& spectrum, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  if (spectrum.energies.empty()) throw DomainError("empty spectrum");
  const auto p = gibbs_weights(spectrum.energies, temperature);
  const double e_min = *std::min_element(spectrum.energies.begin(), spectrum.energies.end());
  double z = 0.0;
  ThermalExpectations t{0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    z += std::exp(-(spectrum.energies[i] - e_min) / temperature);
    t.energy += p[i] * spectrum.energies[i];
    t.magnetization += p[i] * spectrum.transverse_moments[i];
    if (p[i] > 0.0) t.entropy -= p[i] * std::log(p[i]);
  }
  t.free_energy = e_min - temperature * std::log(z);
  return t;
}

BruteForceReport brute_force_cycle_report(const CycleSpec& spec, int n_sites, double zero_tolerance,
                                          const BruteForceOptions& options) {
  spec.validate();
  check_size(n_sites);
  ModelParams::finite(spec.g, spec.h_hot, n_sites).validate();
  const double tol = degeneracy_tolerance(n_sites, spec.g, std::max(std::abs(spec.h_hot), std::abs(spec.h_cold)));

  BruteForceReport report;
  if (options.pairing == AdiabaticPairing::AscendingIndex) {
    const auto hot = diagonalize(ModelParams::finite(spec.g, spec.h_hot, n_sites), options.threads);
    const auto cold = diagonalize(ModelParams::finite(spec.g, spec.h_cold, n_sites), options.threads);
    report.result = ascending_pairing_cycle(hot, cold, spec, zero_tolerance);
    report.diagonalizations = 2;
    return report;
  }

  const auto blocks = build_blocks(n_sites);
  std::vector<TrackedBlock> tracked(blocks.size());
  parallel_for(blocks.size(), options.threads, [&](std::size_t bi) {
    tracked[bi] = track_block(blocks[bi], spec, n_sites, options);
  });
  std::vector<double> hot;
  std::vector<double> cold;
  for (const auto& t : tracked) {
    hot.insert(hot.end(), t.hot.begin(), t.hot.end());
    cold.insert(cold.end(), t.cold.begin(), t.cold.end());
    report.min_overlap = std::min(report.min_overlap, t.min_overlap);
    report.diagonalizations += t.diagonalizations;
  }
  report.result = cycle_from_levels(hot, cold, spec, n_sites, zero_tolerance);
  report.level_reorderings = count_reorderings(hot, cold, tol);
  return report;
}

CycleResult brute_force_cycle(const CycleSpec& spec, int n_sites, double zero_tolerance,
                              const BruteForceOptions& options) {
  return brute_force_cycle_report(spec, n_sites, zero_tolerance, options).result;
}

CycleResult ascending_pairing_cycle(const SpectralDecomposition& hot, const SpectralDecomposition& cold,
                                    const CycleSpec& spec, double zero_tolerance) {
  spec.validate();
  if (hot.n_sites != cold.n_sites || hot.dimension() != cold.dimension() || hot.dimension() == 0) {
    throw DomainError("spectra of different chains");
  }
  if (hot.g != spec.g || cold.g != spec.g || hot.h != spec.h_hot || cold.h != spec.h_cold) {
    throw DomainError("spectra do not match the cycle fields");
  }
  return cycle_from_levels(hot.energies, cold.energies, spec, hot.n_sites, zero_tolerance);
}

CycleResult discrete_mode_cycle(const CycleSpec& spec, int n_sites, double zero_tolerance) {
  return finite_cycle(spec, zero_tolerance, n_sites);
}

void write_decomposition(std::ostream& out, const SpectralDecomposition& spectrum) {
  const std::size_t dim = std::size_t{1} << spectrum.n_sites;
  if (spectrum.energies.size() != dim || spectrum.transverse_moments.size() != dim) {
    throw DomainError("spectral decomposition does not have 2^N levels");
  }
  out.write(kMagic.data(), kMagic.size());
  put_f64(out, kCacheVersion);
  put_f64(out, spectrum.n_sites);
  put_f64(out, spectrum.g);
  put_f64(out, spectrum.h);
  for (double e : spectrum.energies) put_f64(out, e);
  for (double m : spectrum.transverse_moments) put_f64(out, m);
  if (!out) throw Error("failed writing spectral cache");
}

SpectralDecomposition read_decomposition(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error("not a spectral cache file (bad magic)");
  const double version = get_f64(in);
  if (version != kCacheVersion) {
    std::ostringstream msg;
    msg << "unsupported spectral cache version " << version;
    throw Error(msg.str());
  }
  const double n = get_f64(in);
  if (n != std::floor(n) || n < 2 || n > kMaxOracleSites) throw Error("corrupt spectral cache header");
  SpectralDecomposition s;
  s.n_sites = static_cast<int>(n);
  s.g = get_f64(in);
  s.h = get_f64(in);
  const std::size_t dim = std::size_t{1} << s.n_sites;
  s.energies.resize(dim);
  s.transverse_moments.resize(dim);
  for (double& e : s.energies) e = get_f64(in);
  for (double& m : s.transverse_moments) m = get_f64(in);
  if (!std::is_sorted(s.energies.begin(), s.energies.end())) throw Error("spectral cache energies not sorted");
  return s;
}

DecompositionCache::DecompositionCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::filesystem::path DecompositionCache::path_for(const ModelParams& p) const {
  check_params(p);
  std::ostringstream name;
  name << "tfim_N" << *p.n_sites << "_g" << std::hex << std::bit_cast<std::uint64_t>(p.g) << "_h"
       << std::bit_cast<std::uint64_t>(p.h) << ".bin";
  return directory_ / name.str();
}

SpectralDecomposition DecompositionCache::get(const ModelParams& p, int threads) {
  const auto path = path_for(p);
  if (std::ifstream in{path, std::ios::binary}) {
    SpectralDecomposition s = read_decomposition(in);
    if (s.n_sites == *p.n_sites && s.g == p.g && s.h == p.h) return s;
  }
  SpectralDecomposition s = diagonalize(p, threads);
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out) throw Error("cannot write spectral cache " + path.string());
  write_decomposition(out, s);
  return s;
}

}  // namespace isingotto
