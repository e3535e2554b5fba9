#include "lgorb/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lgorb/errors.hpp"

namespace lgorb {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
ZPoly divide_monic(ZPoly a, const ZPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  ZPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    mpz_class c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

// (q, r) with a = q*b + r over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    mpq_class c = a[k] / b[db];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw ConfigError("cyclotomic order must be positive");
  ZPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n) {
  phi_poly_ = cyclotomic_polynomial(n);
  phi_ = static_cast<int>(phi_poly_.size()) - 1;
  powers_.reserve(n);
  ZPoly cur(phi_, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce
    ZPoly next(phi_ + 1, 0);
    for (int i = 0; i < phi_; ++i) next[i + 1] = cur[i];
    mpz_class top = next[phi_];
    for (int j = 0; j < phi_; ++j) next[j] -= top * phi_poly_[j];
    next.pop_back();
    cur = std::move(next);
  }
}

const CyclotomicField* CyclotomicField::get(int n) {
  if (n < 1) throw ConfigError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return slot.get();
}

void CyclotomicField::reduce(std::vector<mpz_class>& c) const {
  for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(phi_);) {
    if (c[k] == 0) continue;
    mpz_class top = c[k];
    const std::size_t base = k - phi_;
    for (int j = 0; j < phi_; ++j) c[base + j] -= top * phi_poly_[j];
    c[k] = 0;
  }
  c.resize(phi_, 0);
}

CycScalar::CycScalar(const mpq_class& q) : num_(1, q.get_num()), den_(q.get_den()) {}

CycScalar::CycScalar(const CyclotomicField* f, long v) : field_(f) {
  num_.assign(f ? f->degree() : 1, 0);
  num_[0] = v;
  den_ = 1;
}

CycScalar::CycScalar(const CyclotomicField* f, const mpq_class& q) : field_(f) {
  num_.assign(f ? f->degree() : 1, 0);
  num_[0] = q.get_num();
  den_ = q.get_den();
}

CycScalar::CycScalar(const CyclotomicField* f, std::vector<mpq_class> coeffs) : field_(f) {
  const std::size_t deg = f ? f->degree() : 1;
  if (coeffs.empty()) coeffs.push_back(0);
  mpz_class l = 1;
  for (auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly wide(std::max(coeffs.size(), deg), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) wide[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());
  den_ = l;
  if (f) {
    if (wide.size() > static_cast<std::size_t>(f->degree())) {
      // fold x^k for large k through zeta^n = 1 first, then Phi_n
      ZPoly folded(f->order(), 0);
      for (std::size_t i = 0; i < wide.size(); ++i) folded[i % f->order()] += wide[i];
      ZPoly acc(deg, 0);
      for (int k = 0; k < f->order(); ++k) {
        if (folded[k] == 0) continue;
        const auto& p = f->power(k);
        for (std::size_t j = 0; j < deg; ++j) acc[j] += folded[k] * p[j];
      }
      wide = std::move(acc);
    }
  } else if (wide.size() > 1) {
    throw ConfigError("irrational coefficients need a cyclotomic field");
  }
  num_ = std::move(wide);
  normalize();
}

void CycScalar::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  bool all_zero = true;
  for (const auto& c : num_) all_zero = all_zero && c == 0;
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

const CyclotomicField* CycScalar::merge_field(const CycScalar& o) const {
  if (!field_) return o.field_;
  if (!o.field_ || o.field_ == field_) return field_;
  throw ConfigError("cyclotomic order mismatch: " + std::to_string(field_->order()) + " vs " +
                    std::to_string(o.field_->order()));
}

void CycScalar::lift_to(const CyclotomicField* f) {
  if (field_ == f || !f) return;
  num_.resize(f->degree(), 0);
  field_ = f;
}

bool CycScalar::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycScalar::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

mpq_class CycScalar::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= num_.size()) return 0;
  mpq_class q(num_[k], den_);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> CycScalar::coeffs() const {
  std::vector<mpq_class> out;
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(static_cast<int>(i)));
  return out;
}

std::vector<std::string> CycScalar::coeff_strings() const {
  std::vector<std::string> out;
  const int deg = field_ ? field_->degree() : 1;
  for (int i = 0; i < deg; ++i) {
    mpq_class q = coeff(i);
    out.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
  }
  return out;
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    mpq_class q = coeff(static_cast<int>(k));
    if (q == 0) continue;
    bool neg = q < 0;
    if (neg) q = -q;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << q.get_str();
    } else {
      if (q != 1) os << q.get_str() << "*";
      os << "zeta";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  const CyclotomicField* f = merge_field(o);
  lift_to(f);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (auto& c : num_) c *= o.den_;
    for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  const CyclotomicField* f = merge_field(o);
  if (o.num_.size() == 1 || num_.size() == 1) {
    // scalar times vector, no reduction needed
    const CycScalar& vec = num_.size() >= o.num_.size() ? *this : o;
    const CycScalar& sc = num_.size() >= o.num_.size() ? o : *this;
    ZPoly r(vec.num_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = vec.num_[i] * sc.num_[0];
    den_ = den_ * o.den_;
    num_ = std::move(r);
    field_ = f;
    lift_to(f);
    normalize();
    return *this;
  }
  ZPoly r(num_.size() + o.num_.size() - 1, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j)
      if (o.num_[j] != 0) r[i + j] += num_[i] * o.num_[j];
  }
  f->reduce(r);
  num_ = std::move(r);
  den_ *= o.den_;
  field_ = f;
  normalize();
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) return false;
  if (a.den_ != b.den_) return false;
  const std::size_t n = std::max(a.num_.size(), b.num_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class& x = i < a.num_.size() ? a.num_[i] : mpz_class(0);
    const mpz_class& y = i < b.num_.size() ? b.num_[i] : mpz_class(0);
    if (x != y) return false;
  }
  return true;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (is_rational() || !field_) {
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return CycScalar(field_, mpq_class(1 / q));
  }
  // extended Euclid: find s with s*a = 1 mod Phi
  QPoly a;
  for (const auto& c : num_) a.push_back(mpq_class(c, den_));
  for (auto& c : a) c.canonicalize();
  trim(a);
  QPoly m;
  for (const auto& c : field_->modulus()) m.push_back(mpq_class(c));
  QPoly r0 = m, r1 = a, s0 = {}, s1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi is irreducible
  mpq_class c = r0.at(0);
  for (auto& x : s0) x /= c;
  auto [q, rem] = divmod(s0, m);
  return CycScalar(field_, rem);
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(field_, 1);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::size_t CycScalar::hash() const {
  std::size_t h = std::hash<std::string>()(den_.get_str());
  for (const auto& c : num_) h = h * 1000003u ^ mpz_get_si(c.get_mpz_t());
  return h;
}

CycScalar zeta_power(long k, int n) { return zeta_power_in(CyclotomicField::get(n), k, n); }

CycScalar zeta_power_in(const CyclotomicField* f, long k, int n) {
  if (n < 1) throw ConfigError("root of unity order must be positive");
  if (f->order() % n != 0)
    throw ConfigError("zeta_" + std::to_string(n) + " is not in Q(zeta_" + std::to_string(f->order()) + ")");
  long m = f->order();
  long e = ((k % n) + n) % n * (m / n);
  std::vector<mpq_class> c;
  for (const auto& z : f->power(static_cast<int>(e))) c.push_back(mpq_class(z));
  return CycScalar(f, c);
}

}  // namespace lgorb
