#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lgorb {

// Q(zeta_n) presented as Q[x]/Phi_n. Instances are interned and live for the
// whole process, so raw pointers to them are stable.
class CyclotomicField {
 public:
  static const CyclotomicField* get(int n);

  int order() const { return n_; }
  int degree() const { return phi_; }
  // Phi_n, lowest coefficient first, monic of degree phi.
  const std::vector<mpz_class>& modulus() const { return phi_poly_; }
  // Reduced coefficient vector of zeta^k, 0 <= k < n.
  const std::vector<mpz_class>& power(int k) const { return powers_[k]; }

  // Reduce a polynomial of degree < 2*phi-1 in place, leaving degree < phi.
  void reduce(std::vector<mpz_class>& c) const;

 private:
  explicit CyclotomicField(int n);
  int n_;
  int phi_;
  std::vector<mpz_class> phi_poly_;
  std::vector<std::vector<mpz_class>> powers_;
};

// Integer coefficients of Phi_n, lowest first, by dividing x^n-1 by Phi_d for
// every proper divisor d.
std::vector<mpz_class> cyclotomic_polynomial(int n);

// Exact element of Q(zeta_n): common denominator over integer numerators.
// A scalar without a field is a plain rational and combines with any field.
class CycScalar {
 public:
  CycScalar() : num_(1), den_(1) {}
  CycScalar(long v) : num_(1, mpz_class(v)), den_(1) {}  // NOLINT: implicit on purpose
  explicit CycScalar(const mpq_class& q);
  CycScalar(const CyclotomicField* f, long v);
  CycScalar(const CyclotomicField* f, const mpq_class& q);
  CycScalar(const CyclotomicField* f, std::vector<mpq_class> coeffs);

  const CyclotomicField* field() const { return field_; }
  int order() const { return field_ ? field_->order() : 1; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Coefficient of zeta^k in the reduced form.
  mpq_class coeff(int k) const;
  std::vector<mpq_class> coeffs() const;
  // Coefficients padded to the field degree, as "p/q" strings.
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  CycScalar inverse() const;
  CycScalar pow(long e) const;

  std::size_t hash() const;

 private:
  void normalize();
  void lift_to(const CyclotomicField* f);
  const CyclotomicField* merge_field(const CycScalar& o) const;

  const CyclotomicField* field_ = nullptr;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

// zeta_n^k reduced; k is taken mod n.
CycScalar zeta_power(long k, int n);
// zeta_{n}^k embedded in a field whose order is a multiple of n.
CycScalar zeta_power_in(const CyclotomicField* f, long k, int n);

}  // namespace lgorb
