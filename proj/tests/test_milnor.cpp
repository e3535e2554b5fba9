#include <gtest/gtest.h>

#include <random>

#include "lgorb/errors.hpp"
#include "lgorb/milnor.hpp"
#include "oracle.hpp"

using namespace lgorb;

namespace {

MultiPoly surface(int genus, const CyclotomicField* f) {
  const std::string e = std::to_string(2 * genus + 1);
  return parse_poly("x1^" + e + " + x2^" + e + " + x3^" + e + " - x1*x2*x3", 3, f);
}

std::vector<std::string> names(const MilnorAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& m : a.basis()) out.push_back(m.to_string(a.nvars()));
  return out;
}

}  // namespace

TEST(Milnor, CubeSectors) {
  const auto* f = CyclotomicField::get(3);
  auto w = parse_poly("x1^3", 1, f);
  auto e = build_sector_algebra(w, identity_element(1, 3), LocalMode::Auto);
  EXPECT_EQ(names(e), (std::vector<std::string>{"1", "x1"}));
  EXPECT_FALSE(e.is_local());
  auto z = build_sector_algebra(w, GroupElement{{1}, 3}, LocalMode::Auto);
  EXPECT_EQ(names(z), std::vector<std::string>{"1"});
  EXPECT_TRUE(e.class_of(w).is_zero());
  auto one = e.class_of(MultiPoly::constant(1, f, CycScalar(1)));
  EXPECT_EQ(one.coeffs, (std::vector<CycScalar>{CycScalar(1), CycScalar(0)}));
}

TEST(Milnor, FullyMovingSectorIsAPoint) {
  const auto* f = CyclotomicField::get(5);
  auto a = build_sector_algebra(surface(2, f), GroupElement{{1, 1, 3}, 5}, LocalMode::Auto);
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(names(a), std::vector<std::string>{"1"});
  EXPECT_TRUE(a.class_of(parse_poly("x1*x2", 3, f)).is_zero());
}

TEST(Milnor, ThomSebastiani) {
  const auto* f = CyclotomicField::get(1);
  for (auto [a, b] : {std::pair{3, 3}, {3, 4}, {5, 2}, {4, 4}}) {
    auto w = parse_poly("x1^" + std::to_string(a) + " + x2^" + std::to_string(b), 2, f);
    auto alg = build_sector_algebra(w, identity_element(2, 1), LocalMode::Off);
    EXPECT_EQ(alg.dim(), static_cast<std::size_t>((a - 1) * (b - 1)));
  }
  // a sector of x1^3 + x2^3 fixing x2 sees only the second summand
  auto w = parse_poly("x1^3 + x2^3", 2, CyclotomicField::get(3));
  EXPECT_EQ(build_sector_algebra(w, GroupElement{{1, 0}, 3}, LocalMode::Auto).dim(), 2u);
}

TEST(Milnor, SurfaceLocalAlgebra) {
  for (int genus : {2, 3}) {
    const int n = 2 * genus + 1;
    const auto* f = CyclotomicField::get(n);
    auto w = surface(genus, f);
    auto e = build_sector_algebra(w, identity_element(3, n), LocalMode::Auto);
    EXPECT_TRUE(e.is_local());
    EXPECT_EQ(e.dim(), static_cast<std::size_t>(6 * genus + 2));
    auto phi = e.class_of(parse_poly("x1*x2*x3", 3, f));
    EXPECT_FALSE(phi.is_zero());
    for (int i = 1; i <= 3; ++i) {
      auto lhs = e.class_of(parse_poly(std::to_string(n) + "*x" + std::to_string(i) + "^" + std::to_string(n), 3, f));
      EXPECT_EQ(lhs, phi) << "i=" << i;
    }
    EXPECT_TRUE(e.mul(phi, phi).is_zero());
    GroupElement h{{1, 1, n - 2}, n};
    EXPECT_EQ(g_act(h, phi), phi);
    // off mode sees the critical points away from the origin too
    auto global = build_sector_algebra(w, identity_element(3, n), LocalMode::Off);
    EXPECT_EQ(global.dim(), static_cast<std::size_t>((n - 1) * (n - 1) * (n - 1)));
  }
}

TEST(Milnor, GroupAction) {
  const auto* f = CyclotomicField::get(3);
  auto w = parse_poly("x1^3", 1, f);
  auto e = build_sector_algebra(w, identity_element(1, 3), LocalMode::Auto);
  auto x = e.class_of(parse_poly("x1", 1, f));
  EXPECT_EQ(g_act(identity_element(1, 3), x), x);
  auto zx = g_act(GroupElement{{1}, 3}, x);
  EXPECT_EQ(zx.coeffs[1], zeta_power(1, 3));
  EXPECT_TRUE(oracle::close(oracle::embed(zx.coeffs[1]), oracle::root(3)));
}

TEST(Milnor, ClassMapIsRingMorphism) {
  const auto* f = CyclotomicField::get(9);
  auto w = parse_poly("x1^3*x2 + x2^3", 2, f);
  auto e = build_sector_algebra(w, identity_element(2, 9), LocalMode::Auto);
  EXPECT_EQ(e.dim(), 7u);
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> ex(0, 4), co(-4, 4);
  auto rnd = [&]() {
    MultiPoly p(2, f);
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      m.set(Block::X, 0, ex(gen));
      m.set(Block::X, 1, ex(gen));
      p += MultiPoly::monomial(2, f, m, CycScalar(co(gen)) + CycScalar(co(gen)) * zeta_power_in(f, 1, 9));
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto a = rnd(), b = rnd();
    EXPECT_EQ(e.mul(e.class_of(a), e.class_of(b)), e.class_of(a * b));
  }
  for (const auto& m : e.basis()) {
    // staircase monomials are eigenvectors: the class of m is the unit vector on m
    auto c = e.class_of(MultiPoly::monomial(2, f, m, CycScalar(1)));
    int nonzero = 0;
    for (const auto& v : c.coeffs) nonzero += !v.is_zero();
    EXPECT_EQ(nonzero, 1);
  }
}

TEST(Milnor, NonIsolated) {
  const auto* f = CyclotomicField::get(1);
  auto w = parse_poly("x1^2*x2", 2, f);
  try {
    build_sector_algebra(w, identity_element(2, 1), LocalMode::Off);
    FAIL();
  } catch (const ComputationError& e) {
    EXPECT_NE(std::string(e.what()).find("non-isolated singularity in sector"), std::string::npos);
  }
  EXPECT_THROW(build_sector_algebra(w, identity_element(2, 1), LocalMode::Auto), ComputationError);
  EXPECT_THROW(parse_local_mode("maybe"), ConfigError);
}
