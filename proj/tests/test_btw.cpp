#include <gtest/gtest.h>

#include "lgorb/btw_jacobian.hpp"
#include "lgorb/errors.hpp"
#include "models.hpp"
#include "oracle.hpp"

using namespace lgorb;

namespace {

std::vector<std::string> shapes(const std::string& text, int n) {
  std::vector<std::string> out;
  for (const auto& b : atomic_decompose(parse_poly(text, n, CyclotomicField::get(1)))) out.push_back(b.to_string());
  return out;
}

}  // namespace

TEST(Btw, AtomicShapes) {
  EXPECT_EQ(shapes("x1^3", 1), std::vector<std::string>{"fermat(3)"});
  EXPECT_EQ(shapes("x1^3*x2 + x2^3", 2), std::vector<std::string>{"chain(3,3)"});
  EXPECT_EQ(shapes("x1^2*x2 + x2^2*x1", 2), std::vector<std::string>{"loop(2,2)"});
  EXPECT_EQ(shapes("x2^4*x1 + x1^3", 2), std::vector<std::string>{"chain(4,3)"});
  EXPECT_EQ(shapes("x1^3 + x2^2*x3 + x3^4 + x4^2*x5 + x5^3*x4", 5),
            (std::vector<std::string>{"fermat(3)", "chain(2,4)", "loop(2,3)"}));
  auto blocks = atomic_decompose(parse_poly("x2^5*x1 + x1^3", 2, CyclotomicField::get(1)));
  EXPECT_EQ(blocks[0].vars, (std::vector<int>{1, 0}));
}

TEST(Btw, RejectsNonInvertible) {
  for (auto [text, n] : {std::pair<std::string, int>{"x1^3 + x2^3 + x1*x2", 2},
                         {"x1^2*x2^2 + x2^3", 2},
                         {"x1^3*x3 + x2^3*x3 + x3^2", 3},
                         {"x1^3", 2}}) {
    try {
      atomic_decompose(parse_poly(text, n, CyclotomicField::get(1)));
      ADD_FAILURE() << text;
    } catch (const ValidationError& e) {
      EXPECT_STREQ(e.what(), "W is not an invertible polynomial");
    }
  }
}

TEST(Btw, HessianMinor) {
  const auto* f = CyclotomicField::get(1);
  EXPECT_EQ(hessian_minor(parse_poly("x1^3", 1, f), {0}), parse_poly("6*x1", 1, f));
  EXPECT_EQ(hessian_minor(parse_poly("x1^3", 1, f), {}), parse_poly("1", 1, f));
  // x1^3 x2 + x2^3: [[6 x1 x2, 3 x1^2], [3 x1^2, 6 x2]]
  EXPECT_EQ(hessian_minor(parse_poly("x1^3*x2 + x2^3", 2, f), {0, 1}), parse_poly("36*x1*x2^2 - 9*x1^4", 2, f));
}

TEST(Btw, NeedsDoubledField) {
  auto m = models::cube();
  EXPECT_THROW(JacPrimeAlgebra(m.w, m.group), ConfigError);
}

TEST(Btw, FermatValues) {
  auto m = models::cube(2);
  JacPrimeAlgebra j(m.w, m.group);
  const std::size_t z1 = m.group.index_of(GroupElement{{1}, 3}), z2 = m.group.inverse(z1);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(j.sigma(0, i), j.algebra(i).unit());
  const auto& s = j.sigma(z1, z2);
  const auto& me = j.algebra(0);
  // e^{-pi i/3} * 6x: compare the x-coordinate under the complex embedding
  ASSERT_EQ(me.dim(), 2u);
  EXPECT_TRUE(s.coeffs[0].is_zero());
  EXPECT_TRUE(oracle::close(oracle::embed(s.coeffs[1]), 6.0 * std::polar(1.0, -std::numbers::pi / 3)));
  EXPECT_TRUE(j.sigma(z1, z1).is_zero());
  EXPECT_TRUE(oracle::close(oracle::embed(j.age_factor(z2)), std::polar(1.0, -2 * std::numbers::pi / 3)));
}

TEST(Btw, ChainSupport) {
  auto m = models::chain(3, 3, 2);
  JacPrimeAlgebra j(m.w, m.group);
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b) {
      const bool support = a == 0 || b == 0 || m.group.mul(a, b) == 0;
      EXPECT_EQ(j.sigma(a, b).is_zero(), !support) << a << "," << b;
    }
}

TEST(Btw, CompareChains) {
  for (auto [a1, a2] : {std::pair{3, 3}, {3, 4}, {4, 3}}) {
    auto m = models::chain(a1, a2, 2);
    auto alg = models::build(m);
    JacPrimeAlgebra j(m.w, m.group);
    auto c = compare(*alg, j);
    EXPECT_EQ(c.verdict, Verdict::IsomorphicViaRescaling) << m.name << ": " << c.witness;
    EXPECT_EQ(c.alpha.size(), alg->size() - 1);
    for (const auto& [g, a] : c.alpha) {
      EXPECT_FALSE(a.is_zero());
      EXPECT_EQ(a, c.alpha.at(alg->group().inverse(g)));
    }
  }
}

TEST(Btw, CompareFermat) {
  auto m = models::cube(2);
  auto alg = models::build(m);
  JacPrimeAlgebra j(m.w, m.group);
  auto c = compare(*alg, j);
  EXPECT_EQ(c.verdict, Verdict::IsomorphicViaRescaling) << c.witness;
}

TEST(Btw, PerturbedFixture) {
  auto m = models::chain(3, 3, 2);
  auto alg = models::build(m);
  JacPrimeAlgebra j(m.w, m.group);
  // put a nonzero constant where condition A demands zero
  std::size_t a = 1, b = 1;
  while (m.group.mul(a, b) == 0) ++b;
  j.set_sigma(a, b, j.algebra(m.group.mul(a, b)).unit());
  auto c = compare(*alg, j);
  EXPECT_EQ(c.verdict, Verdict::VanishingMismatch);
  EXPECT_NE(c.witness.find("sigma"), std::string::npos);
}

TEST(Btw, ThomSebastiani) {
  auto m = models::fermat_pair(2);
  JacPrimeAlgebra pair(m.w, m.group);
  auto one = models::cube(2);
  JacPrimeAlgebra single(one.w, one.group);
  const std::size_t e = 0;
  for (std::size_t i = 1; i < pair.size(); ++i) {
    const auto& g = m.group[i];
    const GroupElement g1{{g.a[0]}, 3}, g2{{g.a[1]}, 3};
    const std::size_t i1 = one.group.index_of(g1), i2 = one.group.index_of(g2);
    auto part = [&](std::size_t k, int offset) {
      if (k == 0) return MultiPoly::constant(2, m.w.field(), CycScalar(1));
      const auto& s = single.sigma(k, one.group.inverse(k));
      return shift_variables(single.algebra(e).to_poly(s), 2, offset);
    };
    const auto tensor = pair.algebra(e).class_of(part(i1, 0) * part(i2, 1));
    const auto& direct = pair.sigma(i, m.group.inverse(i));
    MilnorClass neg = tensor;
    for (auto& x : neg.coeffs) x = -x;
    EXPECT_TRUE(direct == tensor || direct == neg) << g.to_string();
  }
}

// New conjecture instance; the outcome was observed, not presumed.
TEST(Btw, LoopInstance) {
  auto m = models::loop(2, 2, 2);
  auto alg = models::build(m);
  JacPrimeAlgebra j(m.w, m.group);
  auto c = compare(*alg, j);
  EXPECT_EQ(c.verdict, Verdict::IsomorphicViaRescaling) << c.witness;
}
