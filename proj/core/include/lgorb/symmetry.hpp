#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "lgorb/poly.hpp"

namespace lgorb {

// Diagonal symmetry x_i -> zeta_n^{a_i} x_i, exponents kept in [0, n).
struct GroupElement {
  std::vector<int> a;
  int n = 1;

  int nvars() const { return static_cast<int>(a.size()); }
  bool is_identity() const;
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(long k) const;
  // g_i as an element of f (whose order must be a multiple of n).
  CycScalar entry(const CyclotomicField* f, int i) const;
  std::vector<CycScalar> entries(const CyclotomicField* f) const;
  // Exponent of zeta_n in the character on x^alpha.
  int character_exponent(const Monomial& m) const;
  // Exponent of zeta_n in det(g).
  int det_exponent() const { return sum_over(moving()); }
  int sum_over(const std::vector<int>& idx) const;
  std::vector<int> fixed() const;
  std::vector<int> moving() const;
  unsigned moving_mask() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const GroupElement& x, const GroupElement& y) { return x.a < y.a; }
};

GroupElement identity_element(int nvars, int n);

struct SectorData {
  GroupElement g;
  std::vector<int> fixed_set;   // I^g, 0-based
  std::vector<int> moving_set;  // I_g, 0-based
  int d = 0;
  mpq_class age;
};

SectorData sector_data(const GroupElement& g);

// (d_g + d_h - d_gh) / 2
mpq_class pair_defect(const GroupElement& g, const GroupElement& h);

// Enumerated abelian group, sorted lexicographically; the identity is index 0.
class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  SymmetryGroup(int nvars, int n, std::vector<GroupElement> elements);

  int nvars() const { return nvars_; }
  int modulus() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t index_of(const GroupElement& g) const;
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * elems_.size() + j]; }
  std::size_t inverse(std::size_t i) const { return inv_[i]; }

 private:
  int nvars_ = 0;
  int n_ = 1;
  std::vector<GroupElement> elems_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
};

// Throws ValidationError naming the first monomial of W that g does not fix.
void check_invariance(const GroupElement& g, const MultiPoly& w);

// Closure of the generators; each must preserve W.
SymmetryGroup generate_group(const std::vector<std::vector<int>>& generators, int n, const MultiPoly& w);

// Group of all diagonal symmetries of W when W has exactly as many monomials
// as variables and a nonsingular exponent matrix. Returns generators and the
// modulus (the lcm of the denominators of the inverse exponent matrix).
struct DiagonalSymmetries {
  std::vector<std::vector<int>> generators;
  int n = 1;
};
DiagonalSymmetries maximal_diagonal_symmetries(const MultiPoly& w);

}  // namespace lgorb
