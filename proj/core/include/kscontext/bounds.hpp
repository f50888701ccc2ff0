#pragma once

#include <vector>

#include <gmpxx.h>

namespace kscontext {

/// (1 - 1/d)^(d-1) - 2^-(d-1), exactly. Throws std::invalid_argument for d < 2.
mpq_class theorem1_bound(int d);

struct ArgmaxResult {
  int d = 0;
  mpq_class value;
  /// Limit of the bound as d grows, 1/e.
  double limit = 0.0;
};

/// Maximises theorem1_bound over 2 <= d <= d_max (lowest d on ties). Requires d_max >= 9.
ArgmaxResult argmax_over_d(int d_max);

struct BoundParams {
  int d = 2;
  int r = 1;
  mpq_class t1;
  mpq_class t2;
};

/// d and r with the default annulus t1 = r/d, t2 = 1/2.
BoundParams default_params(int d, int r = 1);

/// Rank-1 annulus proportion (1 - t1)^(d-1) - (1 - t2)^(d-1), exactly.
mpq_class annulus_proportion_exact(const BoundParams& p);

/// I_t2(r, d-r) - I_t1(r, d-r); equals annulus_proportion_exact when r = 1.
double annulus_proportion(const BoundParams& p);

/// Regularised incomplete beta function I_x(a, b) by continued fraction.
double reg_inc_beta(double x, double a, double b);

/// I_x(a, b) for positive integers a, b as an exact binomial sum.
mpq_class reg_inc_beta_exact(const mpq_class& x, int a, int b);

/// Beta(a, b) density at t.
double beta_density(double t, double a, double b);

/// Normalisation 2 / B(r, d - r) of the overlap density in the square-root variable.
double overlap_normalization(int d, int r);

/// Median of Beta(a, b) by bisection on reg_inc_beta to 1e-10.
double beta_median(double a, double b);

/// I_1/2(r, d-r) - I_r/d(r, d-r). Throws std::invalid_argument unless 1 <= r < d.
double rank_bound(int d, int r);
mpq_class rank_bound_exact(int d, int r);

struct CorollaryEntry {
  int d = 0;
  int r = 0;
  mpq_class value;
  double median = 0.0;
};

struct CorollaryReport {
  /// Every rank_bound(d, r) < 1/2.
  bool holds = true;
  /// Every median m(r, d-r) <= r/d.
  bool median_holds = true;
  CorollaryEntry worst;
  /// 1/2 - worst.value.
  double margin = 0.0;
  std::vector<CorollaryEntry> entries;
};

/// Scans 2 <= d <= d_max and 1 <= r <= d/2. Requires d_max >= 4.
CorollaryReport verify_half_corollary(int d_max);

}  // namespace kscontext
