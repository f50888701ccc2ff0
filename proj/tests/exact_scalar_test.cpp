#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "kscontext/exact_scalar.hpp"

namespace kscontext {
namespace {

ExactScalar q(long num, long den) { return ExactScalar::rational(num, den); }

ExactScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  auto r = [&] {
    mpq_class x{mpz_class(num(rng)), mpz_class(den(rng))};
    x.canonicalize();
    return x;
  };
  return ExactScalar(r(), r(), r(), r());
}

ExactVector random_vector(std::mt19937_64& rng, int d) {
  ExactVector v;
  for (int k = 0; k < d; ++k) v.push_back(random_scalar(rng));
  return v;
}

bool reduced(const mpq_class& x) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x.get_den() > 0 && g == 1;
}

bool reduced(const ExactScalar& x) {
  return reduced(x.re_unit()) && reduced(x.re_sqrt2()) && reduced(x.im_unit()) && reduced(x.im_sqrt2());
}

TEST(ExactScalar, ConjugateFlipsImaginaryParts) {
  ExactScalar x = ExactScalar::sqrt2() + ExactScalar::i();
  EXPECT_EQ(x.conj(), ExactScalar::sqrt2() - ExactScalar::i());
}

TEST(ExactScalar, DefiningRelations) {
  EXPECT_EQ(ExactScalar::sqrt2() * ExactScalar::sqrt2(), ExactScalar(2));
  EXPECT_EQ(ExactScalar::i() * ExactScalar::i(), ExactScalar(-1));
}

TEST(ExactScalar, ZeroIffAllComponentsZero) {
  EXPECT_TRUE(ExactScalar().is_zero());
  EXPECT_TRUE((ExactScalar::sqrt2() - ExactScalar::sqrt2()).is_zero());
  EXPECT_FALSE(ExactScalar(0, 0, 0, mpq_class(1, 3)).is_zero());
}

TEST(ExactScalar, InverseAndDivision) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    ExactScalar x = random_scalar(rng);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), ExactScalar(1));
  }
  EXPECT_THROW(ExactScalar().inverse(), std::domain_error);
  EXPECT_EQ(ExactScalar(1) / ExactScalar::sqrt2(), q(1, 2) * ExactScalar::sqrt2());
}

TEST(ExactScalar, ParsesLiterals) {
  EXPECT_EQ(parse_scalar_literal("1/2*s2"), q(1, 2) * ExactScalar::sqrt2());
  EXPECT_EQ(parse_scalar_literal("-i"), -ExactScalar::i());
  EXPECT_EQ(parse_scalar_literal("1+i*s2"), ExactScalar(1) + ExactScalar::i() * ExactScalar::sqrt2());
  EXPECT_EQ(parse_scalar_literal("-1/2"), q(-1, 2));
  EXPECT_THROW(parse_scalar_literal("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar_literal("x"), std::invalid_argument);
}

TEST(ExactScalar, ToStringRoundTrips) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    ExactScalar x = random_scalar(rng);
    EXPECT_EQ(parse_scalar_literal(x.to_string()), x) << x.to_string();
  }
}

TEST(InnerProduct, StandardBasisIsOrthogonal) {
  ExactVector e1{1, 0, 0};
  ExactVector e2{0, 1, 0};
  EXPECT_TRUE(inner_product(e1, e2).is_zero());
}

TEST(InnerProduct, Cancellation) {
  ExactVector u{1, 1, 0};
  ExactVector v{1, -1, 0};
  EXPECT_TRUE(inner_product(u, v).is_zero());
}

TEST(InnerProduct, NormOfRootTwoVector) {
  ExactVector u{0, 1, ExactScalar::sqrt2()};
  EXPECT_EQ(inner_product(u, u), ExactScalar(3));
}

TEST(InnerProduct, RejectsMismatchedOrEmpty) {
  ExactVector u{1, 0};
  ExactVector v{1, 0, 0};
  EXPECT_THROW(inner_product(u, v), std::invalid_argument);
  EXPECT_THROW(inner_product(ExactVector{}, ExactVector{}), std::invalid_argument);
}

TEST(ExactScalarProperty, Sesquilinearity) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const int d = 1 + static_cast<int>(rng() % 5);
    ExactVector u = random_vector(rng, d);
    ExactVector v = random_vector(rng, d);
    ExactScalar a = random_scalar(rng);
    ExactVector au;
    for (const auto& x : u) au.push_back(a * x);
    EXPECT_EQ(inner_product(au, v), a.conj() * inner_product(u, v));
  }
}

TEST(ExactScalarProperty, ConjugationIsAnInvolutiveHomomorphism) {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 500; ++t) {
    ExactScalar x = random_scalar(rng);
    ExactScalar y = random_scalar(rng);
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
  }
}

TEST(ExactScalarProperty, HermitianSymmetry) {
  std::mt19937_64 rng(303);
  for (int t = 0; t < 200; ++t) {
    const int d = 1 + static_cast<int>(rng() % 6);
    ExactVector u = random_vector(rng, d);
    ExactVector v = random_vector(rng, d);
    EXPECT_EQ(inner_product(u, v), inner_product(v, u).conj());
  }
}

TEST(ExactScalarProperty, SelfInnerProductIsPositiveReal) {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 200; ++t) {
    ExactVector u = random_vector(rng, 4);
    ExactScalar n = inner_product(u, u);
    EXPECT_TRUE(n.is_real());
    bool zero = true;
    for (const auto& x : u) zero = zero && x.is_zero();
    if (!zero) EXPECT_GT(n.to_complex().real(), 0.0);
  }
}

TEST(ExactScalarProperty, StaysReducedOverLongChains) {
  std::mt19937_64 rng(505);
  ExactScalar acc(1);
  for (int t = 0; t < 10000; ++t) {
    ExactScalar y = random_scalar(rng);
    switch (rng() % 4) {
      case 0: acc = acc + y; break;
      case 1: acc = acc - y; break;
      case 2: acc = acc * y; break;
      default: acc = acc.conj(); break;
    }
    // Keep magnitudes bounded so the chain exercises reduction, not growth.
    if (t % 16 == 15) acc = acc.is_zero() ? ExactScalar(1) : acc * acc.inverse() + y;
    ASSERT_TRUE(reduced(acc)) << "step " << t;
  }
}

}  // namespace
}  // namespace kscontext
