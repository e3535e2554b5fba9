#include <gtest/gtest.h>

#include "lgorb/errors.hpp"
#include "lgorb/koszul_oracle.hpp"
#include "models.hpp"

using namespace lgorb;

namespace {

std::vector<models::Model> qh_models() {
  return {models::cube(), models::fermat_pair(), models::chain(3, 3), models::chain(3, 4), models::chain(4, 3),
          models::loop(2, 3)};
}

}  // namespace

TEST(Koszul, DifferentialSquaresToZero) {
  for (const auto& m : qh_models())
    for (const auto& g : m.group.elements()) {
      const auto d = sector_complex(m.w, g).total();
      EXPECT_TRUE(cl_mul(d, d).is_zero()) << m.name << " " << g.to_string();
    }
  auto s = models::surface(2);
  for (const auto& g : s.group.elements()) {
    const auto d = sector_complex(s.w, g).total();
    EXPECT_TRUE(cl_mul(d, d).is_zero()) << g.to_string();
  }
}

TEST(Koszul, CubeComplex) {
  auto m = models::cube();
  auto sc = sector_complex(m.w, m.group[1]);
  // the difference quotient of x^3 on the graph of zeta is (1 + zeta + zeta^2) x^2 = 0
  EXPECT_TRUE(sc.curv.is_zero());
  EXPECT_EQ(sc.kos.terms().size(), 1u);
  auto e = sector_complex(m.w, m.group[0]);
  EXPECT_TRUE(e.kos.is_zero());
  EXPECT_EQ(e.curv_fixed, e.curv);
  EXPECT_EQ(e.curv.coefficient(1, 0), parse_poly("-3*x1^2", 1, m.w.field()));
}

TEST(Koszul, Conjugation) {
  for (const auto& m : qh_models())
    for (const auto& g : m.group.elements()) {
      auto c = verify_conjugation(m.w, g);
      EXPECT_TRUE(c.equal) << m.name << " " << g.to_string() << ": " << c.witness;
    }
  for (int genus : {2, 3}) {
    auto s = models::surface(genus);
    for (const auto& g : s.group.elements()) EXPECT_TRUE(verify_conjugation(s.w, g).equal) << genus;
  }
}

TEST(Koszul, ConjugationNeedsInvariance) {
  auto m = models::cube();
  auto w = m.w + parse_poly("x1^2", 1, m.w.field());
  auto c = verify_conjugation(w, m.group[1]);
  EXPECT_FALSE(c.equal);
  EXPECT_NE(c.witness.find("t^"), std::string::npos);
  EXPECT_FALSE(cl_mul(sector_complex(w, m.group[1]).total(), sector_complex(w, m.group[1]).total()).is_zero());
}

TEST(Koszul, Weights) {
  auto q = quasi_homogeneous_weights(models::chain_poly(3, 4, CyclotomicField::get(1)));
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0], mpq_class(1, 4));
  EXPECT_EQ((*q)[1], mpq_class(1, 4));
  q = quasi_homogeneous_weights(models::chain_poly(4, 3, CyclotomicField::get(1)));
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0], mpq_class(1, 6));
  EXPECT_EQ((*q)[1], mpq_class(1, 3));
  EXPECT_FALSE(quasi_homogeneous_weights(models::surface_poly(2, CyclotomicField::get(1))));
  EXPECT_FALSE(quasi_homogeneous_weights(parse_poly("x1^3", 2, CyclotomicField::get(1))));
}

TEST(Koszul, CubeDimensions) {
  auto m = models::cube();
  auto e = sector_dimension_oracle(m.w, m.group[0]);
  EXPECT_TRUE(e.exact);
  EXPECT_TRUE(e.certified);
  EXPECT_EQ(e.even, 2u);
  EXPECT_EQ(e.odd, 0u);
  auto z = sector_dimension_oracle(m.w, m.group[1]);
  EXPECT_EQ(z.even, 0u);
  EXPECT_EQ(z.odd, 1u);
  EXPECT_EQ(sector_dimension_oracle(models::fermat_pair().w, models::fermat_pair().group[0]).even, 4u);
}

TEST(Koszul, DimensionsMatchMilnorAlgebras) {
  for (const auto& m : qh_models()) {
    auto a = models::build(m);
    for (std::size_t i = 0; i < a->size(); ++i) {
      auto d = sector_dimension_oracle(m.w, a->group()[i]);
      EXPECT_TRUE(d.certified) << m.name << " " << a->group()[i].to_string();
      EXPECT_EQ(d.total(), a->algebra(i).dim()) << m.name << " " << a->group()[i].to_string();
      // cohomology sits in dtheta-degree |I_g|
      EXPECT_EQ(a->group()[i].moving().size() % 2 ? d.even : d.odd, 0u);
    }
  }
}

TEST(Koszul, HeuristicMode) {
  auto m = models::fermat_pair();
  auto d = sector_dimension_oracle(m.w, m.group[0], 9);
  EXPECT_FALSE(d.exact);
  EXPECT_TRUE(d.stabilized);
  EXPECT_EQ(d.even, 4u);
  auto s = models::surface(2);
  for (int k = 1; k < 5; ++k) {
    auto t = sector_dimension_oracle(s.w, models::surface_gen(2, k), 8);
    EXPECT_TRUE(t.stabilized);
    EXPECT_EQ(t.odd, 1u);
    EXPECT_EQ(t.even, 0u);
  }
}

TEST(Koszul, ChainCupMatchesSigma) {
  auto all = qh_models();
  all.push_back(models::surface(2));
  for (const auto& m : all) {
    auto a = models::build(m);
    for (std::size_t i = 0; i < a->size(); ++i)
      for (std::size_t j = 0; j < a->size(); ++j) {
        const auto& alg = a->algebra(a->group().mul(i, j));
        EXPECT_EQ(chain_cup_oracle(m.w, a->group()[i], a->group()[j], alg), a->sigma(i, j))
            << m.name << " " << a->group()[i].to_string() << " " << a->group()[j].to_string();
      }
  }
}
