#pragma once

#include <string>
#include <vector>

#include "lgorb/groebner.hpp"
#include "lgorb/symmetry.hpp"

namespace lgorb {

enum class LocalMode { Auto, On, Off };

LocalMode parse_local_mode(const std::string& s);
std::string to_string(LocalMode m);

class MilnorAlgebra;

// Coordinates over the staircase basis of a sector algebra.
struct MilnorClass {
  const MilnorAlgebra* alg = nullptr;
  std::vector<CycScalar> coeffs;

  bool is_zero() const;
  friend bool operator==(const MilnorClass& a, const MilnorClass& b) { return a.coeffs == b.coeffs; }
};

// M(W^g) = K[X^g] / (d_i W^g, i in I^g), realized in the full ring K[X] as
// the quotient by (x_i, i in I_g) + (d_i W^g, i in I^g).
class MilnorAlgebra {
 public:
  MilnorAlgebra() = default;
  MilnorAlgebra(const MultiPoly& w, const GroupElement& g, LocalMode mode, int d_max = 0);

  const GroupElement& sector() const { return g_; }
  int nvars() const { return nvars_; }
  const CyclotomicField* field() const { return field_; }
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_local() const { return local_; }
  // Stabilization degree in local mode, 0 otherwise.
  int local_degree() const { return local_degree_; }

  // Normal form of res^g(f); res^g is automatic since x_i (i in I_g) are in the ideal.
  MultiPoly reduce(const MultiPoly& f) const { return gb_.normal_form(f); }
  MilnorClass class_of(const MultiPoly& f) const;
  MultiPoly to_poly(const MilnorClass& c) const;
  MilnorClass mul(const MilnorClass& a, const MilnorClass& b) const;
  MilnorClass unit() const { return class_of(MultiPoly::constant(nvars_, field_, CycScalar(1))); }
  MilnorClass zero() const;
  std::string to_string(const MilnorClass& c) const;

 private:
  int nvars_ = 0;
  const CyclotomicField* field_ = nullptr;
  GroupElement g_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  bool local_ = false;
  int local_degree_ = 0;
};

MilnorAlgebra build_sector_algebra(const MultiPoly& w, const GroupElement& g, LocalMode mode, int d_max = 0);

// Diagonal action of h on a class: each basis monomial scales by its character.
MilnorClass g_act(const GroupElement& h, const MilnorClass& c);

}  // namespace lgorb
