#include <gtest/gtest.h>

#include "lgorb/errors.hpp"
#include "lgorb/symmetry.hpp"

using namespace lgorb;

namespace {

const CyclotomicField* Q1 = CyclotomicField::get(1);

MultiPoly surface(int genus) {
  const std::string e = std::to_string(2 * genus + 1);
  return parse_poly("x1^" + e + " + x2^" + e + " + x3^" + e + " - x1*x2*x3", 3, Q1);
}

MultiPoly chain(int a1, int a2) {
  return parse_poly("x1^" + std::to_string(a1) + "*x2 + x2^" + std::to_string(a2), 2, Q1);
}

// Brute-force count of (u, v) in (Z/m)^2 with a1*u + v = 0 and a2*v = 0 mod m,
// m = a1*a2: the defining equations of the maximal chain group.
int count_chain_group(int a1, int a2) {
  const int m = a1 * a2;
  int c = 0;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if ((a1 * u + v) % m == 0 && (a2 * v) % m == 0) ++c;
  return c;
}

}  // namespace

TEST(Symmetry, GenerateExamples) {
  auto g = generate_group({{1, 1, -2}}, 5, surface(2));
  EXPECT_EQ(g.size(), 5u);
  EXPECT_TRUE(g[0].is_identity());
  EXPECT_EQ(generate_group({}, 3, parse_poly("x1^3", 1, Q1)).size(), 1u);
  auto z3 = generate_group({{1}}, 3, parse_poly("x1^3", 1, Q1));
  ASSERT_EQ(z3.size(), 3u);
  EXPECT_EQ(z3[1].a, std::vector<int>{1});
  EXPECT_EQ(z3[2].a, std::vector<int>{2});
}

TEST(Symmetry, MaximalChainGroup) {
  for (auto [a1, a2] : {std::pair{3, 3}, {3, 4}, {4, 3}, {2, 5}}) {
    auto w = chain(a1, a2);
    auto sym = maximal_diagonal_symmetries(w);
    auto g = generate_group(sym.generators, sym.n, w);
    EXPECT_EQ(static_cast<int>(g.size()), a1 * a2);
    EXPECT_EQ(count_chain_group(a1, a2), a1 * a2);
    // the single generator (1, -a1) mod a1*a2 also generates it
    auto h = generate_group({{1, -a1}}, a1 * a2, w);
    EXPECT_EQ(h.size(), g.size());
  }
}

TEST(Symmetry, RejectsNonSymmetry) {
  try {
    generate_group({{1, 1}}, 3, chain(3, 3));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("x1^3*x2"), std::string::npos);
  }
  EXPECT_THROW(generate_group({{1}}, 3, chain(3, 3)), ValidationError);
  EXPECT_THROW(maximal_diagonal_symmetries(parse_poly("x1^2 + x2^2 + x1*x2", 2, Q1)), ValidationError);
}

TEST(Symmetry, SectorData) {
  auto e = sector_data(identity_element(3, 5));
  EXPECT_TRUE(e.moving_set.empty());
  EXPECT_EQ(e.d, 0);
  EXPECT_EQ(e.age, 0);
  auto s = sector_data(GroupElement{{1, 1, 3}, 5});
  EXPECT_EQ(s.moving_set, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(s.d, 3);
  EXPECT_EQ(s.age, mpq_class(1));
  EXPECT_EQ(sector_data(GroupElement{{1}, 3}).d, 1);
  auto c = sector_data(GroupElement{{0, 2}, 9});
  EXPECT_EQ(c.fixed_set, std::vector<int>{0});
  EXPECT_EQ(c.age, mpq_class(2, 9));
}

TEST(Symmetry, PairDefect) {
  GroupElement z{{1}, 3}, z2{{2}, 3};
  EXPECT_EQ(pair_defect(identity_element(1, 3), z), 0);
  EXPECT_EQ(pair_defect(z, z), mpq_class(1, 2));
  EXPECT_EQ(pair_defect(z, z2), 1);
}

TEST(Symmetry, GroupProperties) {
  std::vector<SymmetryGroup> groups{generate_group({{1, 1, -2}}, 7, surface(3))};
  {
    auto w = chain(3, 4);
    auto s = maximal_diagonal_symmetries(w);
    groups.push_back(generate_group(s.generators, s.n, w));
  }
  groups.push_back(generate_group({{1, 0}, {0, 1}}, 3, parse_poly("x1^3 + x2^3", 2, Q1)));
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g.mul(i, g.inverse(i)), 0u);
      auto si = sector_data(g[i]);
      auto sinv = sector_data(g[g.inverse(i)]);
      EXPECT_EQ(si.age + sinv.age, si.d);
      for (std::size_t j = 0; j < g.size(); ++j) {
        EXPECT_EQ(g.mul(i, j), g.mul(j, i));
        EXPECT_GE(pair_defect(g[i], g[j]), 0);
        for (std::size_t k = 0; k < g.size(); k += 3) {
          EXPECT_EQ(pair_defect(g[i], g[j]) + pair_defect(g[g.mul(i, j)], g[k]),
                    pair_defect(g[j], g[k]) + pair_defect(g[i], g[g.mul(j, k)]));
        }
      }
    }
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_TRUE(g[i - 1] < g[i]);
  }
}

TEST(Symmetry, Characters) {
  GroupElement g{{1, 1, 3}, 5};
  Monomial m;
  m.set(Block::X, 0, 1);
  m.set(Block::X, 1, 1);
  m.set(Block::X, 2, 1);
  EXPECT_EQ(g.character_exponent(m), 0);
  EXPECT_EQ(g.det_exponent(), 0);
  const auto* f = CyclotomicField::get(10);
  EXPECT_EQ(g.entry(f, 2), zeta_power_in(f, 3, 5));
  EXPECT_EQ(g.entry(f, 2).pow(5), CycScalar(1));
}
