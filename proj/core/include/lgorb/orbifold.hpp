#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgorb/clifford.hpp"
#include "lgorb/milnor.hpp"

namespace lgorb {

// H_W(x, y, z) = sum_{j <= i} nabla_j^{y->(y,z)} nabla_i^{x->(x,y)} W  theta_i (x) theta_j
BiThetaElement h_w(const MultiPoly& w);

// y := g(x), z := k(x).
BiThetaElement restrict_h_w(const BiThetaElement& hw, const GroupElement& g, const GroupElement& k);

// H_W(x, g(x), x).
BiThetaElement h_w_restricted(const MultiPoly& w, const GroupElement& g);

enum class HwgVariant { Plain, Dagger, Shifted };

// H_{W,g}; the dagger variant swaps the inner substitution to x := g(x), y := x.
// Shifted returns H_{W,g}(shift(x)).
CliffordElement h_wg(const MultiPoly& w, const GroupElement& g, HwgVariant variant = HwgVariant::Plain,
                     const GroupElement* shift = nullptr);

// Structure constant sigma_{g,h} in M(W^{gh}); `alg_gh` must be the gh sector.
MilnorClass sigma(const MultiPoly& w, const GroupElement& g, const GroupElement& h, const MilnorAlgebra& alg_gh);

// Which generator family a TwistedElement is written in.
enum class Side { Xi, Omega };

class TwistedAlgebra;

// Sum of class * t^k * xi_g (or omega_g). Terms are keyed by (sector index, t-exponent).
class TwistedElement {
 public:
  using Key = std::pair<std::size_t, int>;

  TwistedElement() = default;
  TwistedElement(const TwistedAlgebra* alg, Side side) : alg_(alg), side_(side) {}

  const TwistedAlgebra* algebra() const { return alg_; }
  Side side() const { return side_; }
  const std::map<Key, MilnorClass>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Z/2 degree if all terms agree; throws otherwise.
  int parity() const;

  void add_term(std::size_t sector, int t, const MilnorClass& c);
  TwistedElement& operator+=(const TwistedElement& o);
  friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
  TwistedElement operator-() const;
  friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a += -b; }
  TwistedElement scaled(const CycScalar& c) const;
  // Forget t (set t = 1), merging terms of the same sector.
  TwistedElement collapse_t() const;
  friend bool operator==(const TwistedElement& a, const TwistedElement& b);

  std::string to_string() const;

 private:
  const TwistedAlgebra* alg_ = nullptr;
  Side side_ = Side::Xi;
  std::map<Key, MilnorClass> terms_;
};

struct TwistedOptions {
  LocalMode local = LocalMode::Auto;
  int d_max = 0;
  // 0 means hardware concurrency.
  int jobs = 0;
};

// M*(X, W, G) with its sigma-table and the Omega module sharing the same constants.
class TwistedAlgebra {
 public:
  TwistedAlgebra(MultiPoly w, SymmetryGroup group, TwistedOptions opt = {});
  TwistedAlgebra(const TwistedAlgebra&) = delete;
  TwistedAlgebra& operator=(const TwistedAlgebra&) = delete;

  const MultiPoly& potential() const { return w_; }
  const SymmetryGroup& group() const { return group_; }
  const CyclotomicField* field() const { return w_.field(); }
  int nvars() const { return w_.nvars(); }
  std::size_t size() const { return group_.size(); }
  const SectorData& sector(std::size_t i) const { return data_[i]; }
  const MilnorAlgebra& algebra(std::size_t i) const { return *algs_[i]; }
  int parity(std::size_t i, Side side = Side::Xi) const;

  const MilnorClass& sigma(std::size_t i, std::size_t j) const { return sigma_[i * size() + j]; }
  // d_{g,h} when it is a non-negative integer.
  std::optional<int> t_exponent(std::size_t i, std::size_t j) const { return texp_[i * size() + j]; }
  // Overwrite one entry; used to build negative-control fixtures.
  void set_sigma(std::size_t i, std::size_t j, MilnorClass c) { sigma_[i * size() + j] = std::move(c); }

  TwistedElement zero(Side side = Side::Xi) const { return TwistedElement(this, side); }
  // xi_g (or omega_g) with coefficient one.
  TwistedElement generator(std::size_t i, Side side = Side::Xi) const;
  // Basis monomial k of sector i times the generator.
  TwistedElement basis_element(std::size_t i, std::size_t k, Side side = Side::Xi) const;
  std::vector<TwistedElement> basis(Side side = Side::Xi) const;
  TwistedElement unit() const { return generator(0); }

  TwistedElement cup(const TwistedElement& u, const TwistedElement& v) const;
  TwistedElement cap(const TwistedElement& w, const TwistedElement& v) const;
  TwistedElement g_action(const GroupElement& h, const TwistedElement& u) const;

  // Character exponent (mod the group modulus) of h on basis element k of sector i.
  int character_exponent(const GroupElement& h, std::size_t i, std::size_t k, Side side) const;

  // Basis of M^G (Xi side) or of Omega_G (Omega side, via the averaging projector).
  std::vector<TwistedElement> invariants() const;
  std::vector<TwistedElement> coinvariants() const;

 private:
  TwistedElement multiply(const TwistedElement& u, const TwistedElement& v, Side out) const;

  MultiPoly w_;
  SymmetryGroup group_;
  std::vector<SectorData> data_;
  std::vector<std::shared_ptr<const MilnorAlgebra>> algs_;
  std::vector<MilnorClass> sigma_;
  std::vector<std::optional<int>> texp_;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;
};

CheckResult check_unit(const TwistedAlgebra& a);
CheckResult check_braided(const TwistedAlgebra& a);
CheckResult check_associative(const TwistedAlgebra& a);
CheckResult check_equivariance(const TwistedAlgebra& a);
CheckResult check_transversal(const TwistedAlgebra& a);
// omega_e generates, sigma(e,g) = 1, and (w cap u) cap v = w cap (u cup v).
CheckResult check_omega(const TwistedAlgebra& a);
// Closure and ordinary super-commutativity of M^G.
CheckResult check_invariant_subalgebra(const TwistedAlgebra& a);

// sigma_{g^{-1},g} against det(g) sigma_{g,g^{-1}}, per sector.
struct InverseIdentity {
  std::size_t sector;
  bool det_holds = false;        // without extra sign
  bool signed_det_holds = false; // with (-1)^{d_g}
};
std::vector<InverseIdentity> inverse_pair_identity(const TwistedAlgebra& a);

// x_i -> x_{i + offset} in a ring with `nvars` variables.
MultiPoly shift_variables(const MultiPoly& p, int nvars, int offset);

// Direct algebra of (W1 + W2, G1 x G2) compared against the tensor of the two tables.
struct KunnethResult {
  std::unique_ptr<TwistedAlgebra> direct;
  // Sector index of the direct algebra for each (i1, i2).
  std::vector<std::vector<std::size_t>> sector_of;
  // epsilon_g in {+1, -1} so that eps_g eps_h sigma^tensor_{g,h} = eps_gh sigma_{g,h}.
  std::vector<int> epsilon;
  bool dims_multiply = true;
  bool consistent = true;
  std::string witness;
};
KunnethResult kunneth(const TwistedAlgebra& a1, const TwistedAlgebra& a2, TwistedOptions opt = {});

}  // namespace lgorb
