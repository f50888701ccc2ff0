#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kscontext {

/// Element of the number field Q(i, sqrt2), stored as (a + b*sqrt2) + i*(c + e*sqrt2).
///
/// Each component is an arbitrary-precision rational kept in lowest terms with a
/// positive denominator. Values are immutable once built; every operation returns
/// a fresh scalar.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value);  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class re_unit, mpq_class re_sqrt2, mpq_class im_unit, mpq_class im_sqrt2);

  static ExactScalar i();
  static ExactScalar sqrt2();
  static ExactScalar rational(long num, long den);

  const mpq_class& re_unit() const { return re_unit_; }
  const mpq_class& re_sqrt2() const { return re_sqrt2_; }
  const mpq_class& im_unit() const { return im_unit_; }
  const mpq_class& im_sqrt2() const { return im_sqrt2_; }

  bool is_zero() const;
  bool is_real() const { return im_unit_ == 0 && im_sqrt2_ == 0; }

  ExactScalar conj() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  ExactScalar inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }
  friend ExactScalar operator-(const ExactScalar& x);
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

 private:
  mpq_class re_unit_;
  mpq_class re_sqrt2_;
  mpq_class im_unit_;
  mpq_class im_sqrt2_;
};

using ExactVector = std::vector<ExactScalar>;

/// Hermitian inner product sum_k conj(u_k) * v_k. Throws std::invalid_argument on
/// length mismatch or empty vectors.
ExactScalar inner_product(std::span<const ExactScalar> u, std::span<const ExactScalar> v);

/// Parses a compact scalar literal: sums of terms like `1`, `-1/2`, `i`, `-i`, `s2`,
/// `-s2`, `1/2*s2`, `i*s2`. Used for embedded catalog data.
ExactScalar parse_scalar_literal(const std::string& text);

}  // namespace kscontext
