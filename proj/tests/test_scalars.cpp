#include <gtest/gtest.h>

#include <random>

#include "lgorb/errors.hpp"
#include "lgorb/scalars.hpp"
#include "oracle.hpp"

using namespace lgorb;

namespace {

CycScalar zeta(int n) { return zeta_power(1, n); }

CycScalar random_scalar(const CyclotomicField* f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5), den(1, 4);
  std::vector<mpq_class> c;
  for (int i = 0; i < f->degree(); ++i) {
    mpq_class q(d(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return CycScalar(f, c);
}

}  // namespace

TEST(Cyclotomic, KnownPolynomials) {
  auto p = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], 0);
  EXPECT_EQ(p[2], -1);
  EXPECT_EQ(p[3], 0);
  EXPECT_EQ(p[4], 1);
  EXPECT_EQ(cyclotomic_polynomial(1).size(), 2u);
  EXPECT_EQ(CyclotomicField::get(7)->degree(), 6);
  EXPECT_EQ(CyclotomicField::get(15)->degree(), 8);
}

TEST(Scalars, TrivialArithmetic) {
  auto z = zeta(3);
  EXPECT_TRUE((z * z * z).is_one());
  EXPECT_TRUE((z * zeta_power(2, 3)).is_one());
  const auto* f = CyclotomicField::get(3);
  EXPECT_TRUE((CycScalar(f, 1) + CycScalar(f, 0)).is_one());
}

TEST(Scalars, DerivedProduct) {
  auto z = zeta(3);
  CycScalar prod = (z - CycScalar(1)) * (z + CycScalar(2));
  // oracle: complex embedding
  auto w = oracle::root(3);
  EXPECT_TRUE(oracle::close(oracle::embed(prod), (w - 1.0) * (w + 2.0)));
  EXPECT_EQ(prod, CycScalar(CyclotomicField::get(3), -3));
}

TEST(Scalars, Inverse) {
  auto z = zeta(3);
  EXPECT_EQ(z.inverse(), zeta_power(2, 3));
  EXPECT_TRUE(CycScalar(CyclotomicField::get(3), 1).inverse().is_one());
  CycScalar inv = (z - CycScalar(1)).inverse();
  EXPECT_TRUE(((z - CycScalar(1)) * inv).is_one());
  EXPECT_TRUE(oracle::close(oracle::embed(inv), 1.0 / (oracle::root(3) - 1.0)));
  EXPECT_EQ(inv, -(z + CycScalar(2)) * CycScalar(mpq_class(1, 3)));
}

TEST(Scalars, Errors) {
  EXPECT_THROW(CycScalar(CyclotomicField::get(5), 0).inverse(), DivisionByZero);
  EXPECT_THROW(zeta(3) + zeta(5), ConfigError);
  EXPECT_THROW(zeta(3) * zeta(5), ConfigError);
}

TEST(Scalars, ZetaPower) {
  EXPECT_TRUE(zeta_power(0, 5).is_one());
  EXPECT_TRUE(zeta_power(5, 5).is_one());
  EXPECT_TRUE(zeta_power(3, 3).is_one());
  EXPECT_EQ(zeta_power(-1, 7), zeta_power(6, 7));
  for (int n : {1, 2, 3, 4, 5, 6, 9, 10, 12, 14}) {
    for (int k = 0; k < n; ++k) {
      auto z = zeta_power(k, n);
      EXPECT_TRUE(z.pow(n).is_one());
      if (k > 0 && std::gcd(k, n) == 1) EXPECT_FALSE(z.is_one());
      EXPECT_TRUE(oracle::close(oracle::embed(z), oracle::root(n, k)));
    }
  }
  // embedding zeta_3 into Q(zeta_6)
  auto* f6 = CyclotomicField::get(6);
  EXPECT_EQ(zeta_power_in(f6, 1, 3), zeta_power(2, 6));
}

TEST(Scalars, RingAxiomsRandom) {
  std::mt19937 rng(7);
  for (int n : {3, 5, 8, 12}) {
    const auto* f = CyclotomicField::get(n);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE(oracle::close(oracle::embed(a * b), oracle::embed(a) * oracle::embed(b)));
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Scalars, Formatting) {
  auto z = zeta(3);
  EXPECT_EQ((z + CycScalar(2)).to_string(), "2 + zeta");
  EXPECT_EQ(CycScalar(CyclotomicField::get(3), mpq_class(-1, 3)).to_string(), "-1/3");
  auto s = (z * CycScalar(mpq_class(1, 2))).coeff_strings();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], "0/1");
  EXPECT_EQ(s[1], "1/2");
}
