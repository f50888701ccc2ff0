#include "kscontext/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kscontext {

namespace {

mpq_class power(const mpq_class& base, int e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpq_class ratio(long p, long q) {
  mpq_class out{mpz_class(p), mpz_class(q)};
  out.canonicalize();
  return out;
}

void check_rank(int d, int r) {
  if (r < 1 || r >= d) {
    throw std::invalid_argument("rank must satisfy 1 <= r < d (d=" + std::to_string(d) + ", r=" + std::to_string(r) +
                                ")");
  }
}

void check_params(const BoundParams& p) {
  check_rank(p.d, p.r);
  if (p.t1 < 0 || p.t2 > 1) throw std::invalid_argument("thresholds must lie in [0, 1]");
  if (p.t1 > p.t2) throw std::invalid_argument("annulus requires t1 <= t2");
}

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double beta_continued_fraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

}  // namespace

mpq_class theorem1_bound(int d) {
  if (d < 2) throw std::invalid_argument("theorem1_bound requires d >= 2");
  return power(ratio(d - 1, d), d - 1) - power(ratio(1, 2), d - 1);
}

ArgmaxResult argmax_over_d(int d_max) {
  if (d_max < 9) throw std::invalid_argument("argmax_over_d requires d_max >= 9");
  ArgmaxResult best;
  best.limit = std::exp(-1.0);
  for (int d = 2; d <= d_max; ++d) {
    mpq_class v = theorem1_bound(d);
    if (best.d == 0 || v > best.value) {
      best.d = d;
      best.value = v;
    }
  }
  return best;
}

BoundParams default_params(int d, int r) {
  check_rank(d, r);
  return BoundParams{d, r, ratio(r, d), ratio(1, 2)};
}

mpq_class annulus_proportion_exact(const BoundParams& p) {
  check_params(p);
  if (p.r != 1) throw std::invalid_argument("exact annulus proportion is available for r = 1 only");
  return power(1 - p.t1, p.d - 1) - power(1 - p.t2, p.d - 1);
}

double annulus_proportion(const BoundParams& p) {
  check_params(p);
  const double a = p.r;
  const double b = p.d - p.r;
  return reg_inc_beta(p.t2.get_d(), a, b) - reg_inc_beta(p.t1.get_d(), a, b);
}

double reg_inc_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("reg_inc_beta requires a > 0 and b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("reg_inc_beta requires 0 <= x <= 1");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  // The fraction converges quickly for x below the mean; otherwise reflect.
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(x, a, b) / a;
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

mpq_class reg_inc_beta_exact(const mpq_class& x, int a, int b) {
  if (a < 1 || b < 1) throw std::domain_error("reg_inc_beta_exact requires positive integer a, b");
  if (x < 0 || x > 1) throw std::domain_error("reg_inc_beta_exact requires 0 <= x <= 1");
  // I_x(a, b) = sum_{j=a}^{n} C(n, j) x^j (1-x)^(n-j) with n = a + b - 1.
  const int n = a + b - 1;
  const mpq_class y = 1 - x;
  mpq_class sum = 0;
  for (int j = a; j <= n; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    sum += mpq_class(binom) * power(x, j) * power(y, n - j);
  }
  sum.canonicalize();
  return sum;
}

double beta_density(double t, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_density requires a > 0 and b > 0");
  if (t < 0.0 || t > 1.0) return 0.0;
  if ((t == 0.0 && a < 1.0) || (t == 1.0 && b < 1.0)) return std::numeric_limits<double>::infinity();
  if ((t == 0.0 && a > 1.0) || (t == 1.0 && b > 1.0)) return 0.0;
  double log_p = -log_beta(a, b);
  if (a != 1.0) log_p += (a - 1.0) * std::log(t);
  if (b != 1.0) log_p += (b - 1.0) * std::log1p(-t);
  return std::exp(log_p);
}

double overlap_normalization(int d, int r) {
  check_rank(d, r);
  return 2.0 / std::exp(log_beta(r, d - r));
}

double beta_median(double a, double b) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (reg_inc_beta(mid, a, b) < 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double rank_bound(int d, int r) {
  check_rank(d, r);
  const double a = r;
  const double b = d - r;
  return reg_inc_beta(0.5, a, b) - reg_inc_beta(static_cast<double>(r) / d, a, b);
}

mpq_class rank_bound_exact(int d, int r) {
  check_rank(d, r);
  return reg_inc_beta_exact(ratio(1, 2), r, d - r) - reg_inc_beta_exact(ratio(r, d), r, d - r);
}

CorollaryReport verify_half_corollary(int d_max) {
  if (d_max < 4) throw std::invalid_argument("verify_half_corollary requires d_max >= 4");
  CorollaryReport report;
  const mpq_class half = ratio(1, 2);
  bool first = true;
  for (int d = 2; d <= d_max; ++d) {
    for (int r = 1; 2 * r <= d; ++r) {
      CorollaryEntry e{d, r, rank_bound_exact(d, r), beta_median(r, d - r)};
      if (!(e.value < half)) report.holds = false;
      if (e.median > static_cast<double>(r) / d + 1e-10) report.median_holds = false;
      if (first || e.value > report.worst.value) {
        report.worst = e;
        first = false;
      }
      report.entries.push_back(std::move(e));
    }
  }
  report.margin = mpq_class(half - report.worst.value).get_d();
  return report;
}

}  // namespace kscontext
