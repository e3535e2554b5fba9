#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "lgorb/poly.hpp"

namespace lgorb {

// Index subsets are bitmasks over 0-based variable indices.
using Mask = std::uint32_t;

int popcount(Mask m);
Mask mask_of(const std::vector<int>& idx);
// Sign of theta_X theta_Y -> theta_{X u Y} for disjoint X, Y (same for dtheta).
int merge_sign(Mask x, Mask y);

using CoeffHook = std::function<MultiPoly(const MultiPoly&)>;

// Element of K[X] (x) Cl_N: coefficient * theta_J dtheta_K with both sets
// ascending and the theta letters first.
class CliffordElement {
 public:
  using Key = std::pair<Mask, Mask>;  // (J, K)

  CliffordElement() = default;
  CliffordElement(int nvars, const CyclotomicField* f) : nvars_(nvars), field_(f) {}

  static CliffordElement scalar(const MultiPoly& c);
  static CliffordElement basis(int nvars, const CyclotomicField* f, Mask j, Mask k, const MultiPoly& c);
  static CliffordElement basis(int nvars, const CyclotomicField* f, Mask j, Mask k);
  static CliffordElement theta(int nvars, const CyclotomicField* f, int i);
  static CliffordElement dtheta(int nvars, const CyclotomicField* f, int i);

  int nvars() const { return nvars_; }
  const CyclotomicField* field() const { return field_; }
  const std::map<Key, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MultiPoly coefficient(Mask j, Mask k) const;
  bool theta_only() const;
  bool dtheta_only() const;
  // Z-degree |K| - |J| if homogeneous; throws otherwise.
  int degree() const;

  void add_term(Mask j, Mask k, const MultiPoly& c);
  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const MultiPoly& c, const CliffordElement& a);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.terms_ == b.terms_; }

  CliffordElement map_coeffs(const CoeffHook& fn) const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  const CyclotomicField* field_ = nullptr;
  std::map<Key, MultiPoly> terms_;
};

// Coefficient * theta_{J1} (x) theta_{J2} in K[X] (x) K[theta] (x) K[theta].
class BiThetaElement {
 public:
  using Key = std::pair<Mask, Mask>;

  BiThetaElement() = default;
  BiThetaElement(int nvars, const CyclotomicField* f) : nvars_(nvars), field_(f) {}
  static BiThetaElement one(int nvars, const CyclotomicField* f);
  // p (x) 1 and 1 (x) p for theta-only p.
  static BiThetaElement left(const CliffordElement& p);
  static BiThetaElement right(const CliffordElement& p);

  int nvars() const { return nvars_; }
  const CyclotomicField* field() const { return field_; }
  const std::map<Key, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MultiPoly coefficient(Mask j1, Mask j2) const;

  void add_term(Mask j1, Mask j2, const MultiPoly& c);
  BiThetaElement& operator+=(const BiThetaElement& o);
  friend BiThetaElement operator+(BiThetaElement a, const BiThetaElement& b) { return a += b; }
  friend BiThetaElement operator*(const BiThetaElement& a, const BiThetaElement& b);
  friend BiThetaElement operator*(const MultiPoly& c, const BiThetaElement& a);
  friend bool operator==(const BiThetaElement& a, const BiThetaElement& b) { return a.terms_ == b.terms_; }

  BiThetaElement map_coeffs(const CoeffHook& fn) const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  const CyclotomicField* field_ = nullptr;
  std::map<Key, MultiPoly> terms_;
};

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b);

// Action on K[dtheta] = Cl_N / Cl_N<theta>: dtheta multiplies, theta contracts.
CliffordElement act_on_dtheta(const CliffordElement& p, const CliffordElement& q);
// Action of any element on K[theta] = Cl_N / Cl_N<dtheta>: theta multiplies,
// dtheta differentiates from the left.
CliffordElement act_on_theta(const CliffordElement& xi, const CliffordElement& p);

// Anti-involution with theta_i -> theta_i, dtheta_i -> -dtheta_i.
CliffordElement star(const CliffordElement& a);

// {p, q} = (-1)^{|p||q|} CT(q^star(p)), extended K[X]-bilinearly.
MultiPoly pairing(const CliffordElement& p, const CliffordElement& q);

// sum over terms of (-1)^{|q1||p2|} p1(q1) . p2(q2)
CliffordElement upsilon(const BiThetaElement& x, const CliffordElement& q1, const CliffordElement& q2);

// The theta-only element adjoint to upsilon with respect to the pairing.
CliffordElement upsilon_dagger(const BiThetaElement& x, const CliffordElement& p, const CliffordElement& q);

// Terms h^m / m! for m = 0, 1, ... until they vanish. The hook, if given, is
// applied to coefficients after every multiplication.
std::vector<CliffordElement> exp_series(const CliffordElement& h, const CoeffHook& reduce = {});
std::vector<BiThetaElement> exp_series(const BiThetaElement& h, const CoeffHook& reduce = {});
CliffordElement exp_nilpotent(const CliffordElement& h, const CoeffHook& reduce = {});
BiThetaElement exp_nilpotent(const BiThetaElement& h, const CoeffHook& reduce = {});

}  // namespace lgorb
