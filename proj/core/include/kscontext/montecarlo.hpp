#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kscontext/solver.hpp"
#include "kscontext/vector_set.hpp"

namespace kscontext {

/// All experiments draw from std::mt19937_64. Trial k of an experiment with seed s
/// uses its own engine seeded with substream_seed(s, k), so results do not depend
/// on how trials are split across threads.
using Rng = std::mt19937_64;

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

using ComplexVector = std::vector<std::complex<double>>;

/// Dense d x d complex matrix, row-major.
struct ComplexMatrix {
  int d = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& operator()(int i, int j) { return data[static_cast<std::size_t>(i * d + j)]; }
  const std::complex<double>& operator()(int i, int j) const { return data[static_cast<std::size_t>(i * d + j)]; }
};

/// Overlaps below this magnitude are treated as zero in floating-point checks.
inline constexpr double kFloatTolerance = 1e-9;

/// Standard complex Gaussian entries, normalised.
ComplexVector sample_haar_vector(int d, Rng& rng);

/// Q factor of a complex Gaussian matrix with the phases of diag(R) divided out.
ComplexMatrix haar_unitary(int d, Rng& rng);

/// Unit-norm floating image of each exact ray.
std::vector<ComplexVector> normalized_rays(const VectorSet& set);

/// |<a|b>|^2.
double overlap(const ComplexVector& a, const ComplexVector& b);

struct McConfig {
  int d = 2;
  int r = 1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double t1 = 0.0;
  double t2 = 1.0;
  int threads = 1;
};

struct KsReport {
  McConfig config;
  double statistic = 0.0;
  /// 1.63 / sqrt(N).
  double critical = 0.0;
  bool pass = false;
};

/// Kolmogorov-Smirnov test of T = sum_{k<r} |psi_k|^2 against Beta(r, d-r).
KsReport overlap_distribution_test(const McConfig& cfg);

struct CapHitReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int d = 0;
  int contexts = 0;
  /// Smallest max_{e in B} |<psi|e>|^2 over all trials and contexts.
  double minimum = 1.0;
  bool pass = false;
  /// histogram[k]: (trial, context) pairs with exactly k elements at overlap >= 1/d.
  std::vector<std::uint64_t> capture_histogram;
};

/// Requires a context of size d; throws std::invalid_argument otherwise.
CapHitReport cap_hit_check(const VectorSet& set, std::uint64_t trials, std::uint64_t seed, int threads = 1);

struct CapIndependenceReport {
  int d = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  /// Largest |<psi|phi1>|^2 + |<psi|phi2>|^2 seen.
  double max_pair_sum = 0.0;
  bool pass = false;
};

/// Orthogonal pairs are two columns of a Haar unitary; centres are Haar vectors.
CapIndependenceReport cap_independence_check(int d, std::uint64_t trials, std::uint64_t seed, int threads = 1);

struct AnnulusReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double t1 = 0.0;
  double t2 = 0.0;
  int rays = 0;
  double mean = 0.0;
  double standard_error = 0.0;
  /// Annulus proportion the mean should approach.
  double expected = 0.0;
  double minimum = 1.0;
  int minimum_count = 0;
  /// Rotation attaining the minimum.
  ComplexMatrix witness;
  bool minimum_le_mean = false;
};

/// Counts rays with t1 <= |<0|g psi>|^2 <= t2 under Haar-random g.
AnnulusReport annulus_capture_experiment(const VectorSet& set, double t1, double t2, std::uint64_t trials,
                                         std::uint64_t seed, int threads = 1);

/// 1 above t2, C within [t1, t2], 0 below t1 (comparisons within kFloatTolerance).
Labeling cap_labeling(const VectorSet& set, const ComplexVector& center, double t1, double t2);

std::string to_json(const KsReport& r);
std::string to_json(const CapHitReport& r);
std::string to_json(const CapIndependenceReport& r);
std::string to_json(const AnnulusReport& r);

}  // namespace kscontext
