#pragma once

#include <vector>

#include "lgorb/poly.hpp"

namespace lgorb {

// Reduced, monic Groebner basis in grevlex order over the x block.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(int nvars, const CyclotomicField* f, std::vector<MultiPoly> gens)
      : nvars_(nvars), field_(f), gens_(std::move(gens)) {}

  int nvars() const { return nvars_; }
  const CyclotomicField* field() const { return field_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  MultiPoly normal_form(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }
  // Every x_i has a pure power among the leading monomials.
  bool is_zero_dimensional() const;
  // Staircase monomials in increasing grevlex order. Throws ComputationError
  // "non-isolated critical locus" when the quotient is infinite.
  std::vector<Monomial> quotient_basis() const;

 private:
  int nvars_ = 0;
  const CyclotomicField* field_ = nullptr;
  std::vector<MultiPoly> gens_;
};

// Buchberger with the normal selection strategy and Gebauer-Moeller pruning.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens);
GroebnerBasis buchberger(int nvars, const CyclotomicField* f, const std::vector<MultiPoly>& gens);

// All monomials of total degree d in the x block.
std::vector<MultiPoly> monomials_of_degree(int nvars, const CyclotomicField* f, int d);

struct LocalQuotient {
  GroebnerBasis gb;
  int degree = 0;  // first D at which the staircase stopped growing
};

// GB(gens + m^D) for D = 1, 2, ... until two consecutive staircases agree.
// Throws ComputationError when d_max is reached first.
LocalQuotient local_quotient_at_origin(int nvars, const CyclotomicField* f, const std::vector<MultiPoly>& gens,
                                       int d_max);

}  // namespace lgorb
