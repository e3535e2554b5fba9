#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lgorb/orbifold.hpp"

namespace lgorb {

enum class AtomicType { Fermat, Chain, Loop };

std::string to_string(AtomicType t);

// One atomic summand. `vars` follows the arrow x_i^{a_i} x_{next}: for a chain
// the head comes first and the Fermat-like tail last.
struct AtomicBlock {
  AtomicType type;
  std::vector<int> vars;
  std::vector<int> exponents;

  std::string to_string() const;  // e.g. "chain(3,3)"
};

// Throws ValidationError("W is not an invertible polynomial") when the support
// is not a disjoint union of Fermat, chain and loop blocks.
std::vector<AtomicBlock> atomic_decompose(const MultiPoly& w);

// det(d_i d_j W)_{i,j in idx}
MultiPoly hessian_minor(const MultiPoly& w, const std::vector<int>& idx);

// The twisted Jacobian algebra: sigma' is 1 on pairs with e, the age-twisted
// Hessian on inverse pairs, and 0 elsewhere.
class JacPrimeAlgebra {
 public:
  // The coefficient field must contain zeta_{2n}.
  JacPrimeAlgebra(const MultiPoly& w, const SymmetryGroup& group, TwistedOptions opt = {});
  JacPrimeAlgebra(const JacPrimeAlgebra&) = delete;
  JacPrimeAlgebra& operator=(const JacPrimeAlgebra&) = delete;

  const MultiPoly& potential() const { return w_; }
  const SymmetryGroup& group() const { return group_; }
  const std::vector<AtomicBlock>& blocks() const { return blocks_; }
  std::size_t size() const { return group_.size(); }
  const MilnorAlgebra& algebra(std::size_t i) const { return *algs_[i]; }
  const MilnorClass& sigma(std::size_t i, std::size_t j) const { return sigma_[i * size() + j]; }
  // e^{-pi i age(g)} as an element of the coefficient field.
  CycScalar age_factor(std::size_t i) const;

  // Overwrite one entry; used to build negative-control fixtures.
  void set_sigma(std::size_t i, std::size_t j, MilnorClass c) { sigma_[i * size() + j] = std::move(c); }

 private:
  MultiPoly w_;
  SymmetryGroup group_;
  std::vector<AtomicBlock> blocks_;
  std::vector<std::shared_ptr<const MilnorAlgebra>> algs_;
  std::vector<MilnorClass> sigma_;
};

enum class Verdict { IsomorphicViaRescaling, VanishingMismatch, Inconclusive };

std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Inconclusive;
  // sigma_{g,g^-1} = alpha_g sigma'_{g,g^-1}, keyed by sector index (g != e).
  std::map<std::size_t, CycScalar> alpha;
  std::string witness;
};

// Throws ValidationError when the two algebras do not share W, G and sector dimensions.
Comparison compare(const TwistedAlgebra& m, const JacPrimeAlgebra& j);

}  // namespace lgorb
