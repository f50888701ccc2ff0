#include "kscontext/exact_scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kscontext {

namespace {

// Element of Q(sqrt2) as a pair (unit, sqrt2).
struct Quad {
  mpq_class u;
  mpq_class s;
};

Quad mul(const Quad& x, const Quad& y) {
  return {x.u * y.u + 2 * x.s * y.s, x.u * y.s + x.s * y.u};
}

Quad add(const Quad& x, const Quad& y) { return {x.u + y.u, x.s + y.s}; }
Quad sub(const Quad& x, const Quad& y) { return {x.u - y.u, x.s - y.s}; }

Quad inverse(const Quad& x) {
  // (u + s*sqrt2)^-1 = (u - s*sqrt2) / (u^2 - 2 s^2); the norm vanishes only at zero.
  mpq_class norm = x.u * x.u - 2 * x.s * x.s;
  if (norm == 0) throw std::domain_error("inverse of zero in Q(sqrt2)");
  return {x.u / norm, -x.s / norm};
}

}  // namespace

ExactScalar::ExactScalar(long value) : re_unit_(value) {}

ExactScalar::ExactScalar(mpq_class re_unit, mpq_class re_sqrt2, mpq_class im_unit, mpq_class im_sqrt2)
    : re_unit_(std::move(re_unit)),
      re_sqrt2_(std::move(re_sqrt2)),
      im_unit_(std::move(im_unit)),
      im_sqrt2_(std::move(im_sqrt2)) {
  re_unit_.canonicalize();
  re_sqrt2_.canonicalize();
  im_unit_.canonicalize();
  im_sqrt2_.canonicalize();
}

ExactScalar ExactScalar::i() { return {0, 0, 1, 0}; }
ExactScalar ExactScalar::sqrt2() { return {0, 1, 0, 0}; }
ExactScalar ExactScalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return {q, 0, 0, 0};
}

bool ExactScalar::is_zero() const {
  return re_unit_ == 0 && re_sqrt2_ == 0 && im_unit_ == 0 && im_sqrt2_ == 0;
}

ExactScalar ExactScalar::conj() const { return {re_unit_, re_sqrt2_, -im_unit_, -im_sqrt2_}; }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(i, sqrt2)");
  // 1/(p + iq) = (p - iq) / (p^2 + q^2) with p, q in Q(sqrt2).
  Quad p{re_unit_, re_sqrt2_};
  Quad q{im_unit_, im_sqrt2_};
  Quad inv_norm = kscontext::inverse(add(mul(p, p), mul(q, q)));
  Quad re = mul(p, inv_norm);
  Quad im = mul(q, inv_norm);
  return {re.u, re.s, -im.u, -im.s};
}

std::complex<double> ExactScalar::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {re_unit_.get_d() + r2 * re_sqrt2_.get_d(), im_unit_.get_d() + r2 * im_sqrt2_.get_d()};
}

std::string ExactScalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const mpq_class& coef, const char* unit) {
    if (coef == 0) return;
    if (coef < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    mpq_class mag = abs(coef);
    bool unit_only = *unit != '\0' && mag == 1;
    if (!unit_only) out << mag.get_str();
    if (*unit != '\0') out << (unit_only ? "" : "*") << unit;
    first = false;
  };
  term(re_unit_, "");
  term(re_sqrt2_, "s2");
  term(im_unit_, "i");
  term(im_sqrt2_, "i*s2");
  if (first) out << '0';
  return out.str();
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
  return {x.re_unit_ + y.re_unit_, x.re_sqrt2_ + y.re_sqrt2_, x.im_unit_ + y.im_unit_,
          x.im_sqrt2_ + y.im_sqrt2_};
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
  return {x.re_unit_ - y.re_unit_, x.re_sqrt2_ - y.re_sqrt2_, x.im_unit_ - y.im_unit_,
          x.im_sqrt2_ - y.im_sqrt2_};
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  Quad p{x.re_unit_, x.re_sqrt2_}, q{x.im_unit_, x.im_sqrt2_};
  Quad pp{y.re_unit_, y.re_sqrt2_}, qq{y.im_unit_, y.im_sqrt2_};
  Quad re = sub(mul(p, pp), mul(q, qq));
  Quad im = add(mul(p, qq), mul(q, pp));
  return {re.u, re.s, im.u, im.s};
}

ExactScalar operator-(const ExactScalar& x) {
  return {-x.re_unit_, -x.re_sqrt2_, -x.im_unit_, -x.im_sqrt2_};
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  return x.re_unit_ == y.re_unit_ && x.re_sqrt2_ == y.re_sqrt2_ && x.im_unit_ == y.im_unit_ &&
         x.im_sqrt2_ == y.im_sqrt2_;
}

ExactScalar inner_product(std::span<const ExactScalar> u, std::span<const ExactScalar> v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  if (u.empty()) throw std::invalid_argument("inner_product: empty vectors");
  ExactScalar sum;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero() || v[k].is_zero()) continue;
    sum += u[k].conj() * v[k];
  }
  return sum;
}

ExactScalar parse_scalar_literal(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar literal");

  ExactScalar total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("bad scalar literal: " + text);
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw std::invalid_argument("bad scalar literal: " + text);

    ExactScalar factor(sign);
    std::stringstream parts(term);
    std::string piece;
    while (std::getline(parts, piece, '*')) {
      if (piece == "i") {
        factor = factor * ExactScalar::i();
      } else if (piece == "s2") {
        factor = factor * ExactScalar::sqrt2();
      } else {
        mpq_class value;
        if (value.set_str(piece, 10) != 0 || value.get_den() == 0) {
          throw std::invalid_argument("bad scalar literal: " + text);
        }
        value.canonicalize();
        factor = factor * ExactScalar(value, 0, 0, 0);
      }
    }
    total += factor;
  }
  return total;
}

}  // namespace kscontext
