#include "lgorb/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace lgorb {

int popcount(Mask m) { return std::popcount(m); }

Mask mask_of(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << i;
  return m;
}

int merge_sign(Mask x, Mask y) {
  int inv = 0;
  for (Mask rest = y; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inv += std::popcount(x >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

namespace {

struct Reordered {
  Mask theta;
  Mask dtheta;
  int sign;
};

// dtheta_B theta_C as a signed sum of theta_S dtheta_{B'}.
const std::vector<Reordered>& reorder(Mask b, Mask c) {
  thread_local std::unordered_map<std::uint64_t, std::vector<Reordered>> memo;
  const std::uint64_t key = (static_cast<std::uint64_t>(b) << 32) | c;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Reordered> cur{{0, b, 1}};
  for (Mask rest = c; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const Mask bit = Mask{1} << i;
    std::vector<Reordered> next;
    for (const auto& r : cur) {
      // dtheta_B theta_i = (-1)^{|B|} theta_i dtheta_B + [i in B] (-1)^{#B above i} dtheta_{B-i}
      next.push_back({r.theta | bit, r.dtheta, (std::popcount(r.dtheta) & 1) ? -r.sign : r.sign});
      if (r.dtheta & bit) {
        const int above = std::popcount(r.dtheta >> (i + 1));
        next.push_back({r.theta, r.dtheta & ~bit, (above & 1) ? -r.sign : r.sign});
      }
    }
    cur = std::move(next);
  }
  return memo.emplace(key, std::move(cur)).first->second;
}

// theta_J acting on dtheta_K; rightmost letter first. Returns sign 0 if zero.
std::pair<int, Mask> contract(Mask j, Mask k) {
  if ((j & k) != j) return {0, 0};
  int sign = 1;
  Mask cur = k;
  for (int i = 31; i >= 0; --i) {
    if (!(j >> i & 1)) continue;
    if (std::popcount(cur & ((Mask{1} << i) - 1)) & 1) sign = -sign;
    cur &= ~(Mask{1} << i);
  }
  return {sign, cur};
}

// dtheta_B acting on theta_C as left derivative, rightmost letter first.
std::pair<int, Mask> derive(Mask b, Mask c) { return contract(b, c); }

MultiPoly signed_product(int sign, const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p = a * b;
  return sign < 0 ? -p : p;
}

template <class Map>
void accumulate(Map& terms, const typename Map::key_type& key, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string mask_word(const char* letter, Mask m) {
  std::ostringstream os;
  for (int i = 0; i < 32; ++i)
    if (m >> i & 1) os << letter << (i + 1);
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Clifford

CliffordElement CliffordElement::scalar(const MultiPoly& c) {
  CliffordElement r(c.nvars(), c.field());
  r.add_term(0, 0, c);
  return r;
}

CliffordElement CliffordElement::basis(int nvars, const CyclotomicField* f, Mask j, Mask k, const MultiPoly& c) {
  CliffordElement r(nvars, f);
  r.add_term(j, k, c);
  return r;
}

CliffordElement CliffordElement::basis(int nvars, const CyclotomicField* f, Mask j, Mask k) {
  return basis(nvars, f, j, k, MultiPoly::constant(nvars, f, CycScalar(1)));
}

CliffordElement CliffordElement::theta(int nvars, const CyclotomicField* f, int i) {
  return basis(nvars, f, Mask{1} << i, 0);
}

CliffordElement CliffordElement::dtheta(int nvars, const CyclotomicField* f, int i) {
  return basis(nvars, f, 0, Mask{1} << i);
}

MultiPoly CliffordElement::coefficient(Mask j, Mask k) const {
  auto it = terms_.find({j, k});
  return it == terms_.end() ? MultiPoly(nvars_, field_) : it->second;
}

bool CliffordElement::theta_only() const {
  for (const auto& [key, c] : terms_)
    if (key.second) return false;
  return true;
}

bool CliffordElement::dtheta_only() const {
  for (const auto& [key, c] : terms_)
    if (key.first) return false;
  return true;
}

int CliffordElement::degree() const {
  if (terms_.empty()) return 0;
  const int d = popcount(terms_.begin()->first.second) - popcount(terms_.begin()->first.first);
  for (const auto& [key, c] : terms_)
    if (popcount(key.second) - popcount(key.first) != d) throw std::logic_error("inhomogeneous Clifford element");
  return d;
}

void CliffordElement::add_term(Mask j, Mask k, const MultiPoly& c) { accumulate(terms_, Key{j, k}, c); }

CliffordElement CliffordElement::operator-() const {
  CliffordElement r(nvars_, field_);
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (!field_) field_ = o.field_;
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [key, c] : o.terms_) accumulate(terms_, key, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) { return *this += -o; }

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return cl_mul(a, b); }

CliffordElement operator*(const MultiPoly& c, const CliffordElement& a) {
  CliffordElement r(a.nvars(), a.field());
  for (const auto& [key, v] : a.terms()) r.add_term(key.first, key.second, c * v);
  return r;
}

CliffordElement CliffordElement::map_coeffs(const CoeffHook& fn) const {
  CliffordElement r(nvars_, field_);
  for (const auto& [key, c] : terms_) r.add_term(key.first, key.second, fn(c));
  return r;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (key.first || key.second) os << "*" << mask_word("t", key.first) << mask_word("d", key.second);
  }
  return os.str();
}

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement r(std::max(a.nvars(), b.nvars()), a.field() ? a.field() : b.field());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      MultiPoly c = ca * cb;
      for (const auto& t : reorder(ka.second, kb.first)) {
        if ((ka.first & t.theta) || (t.dtheta & kb.second)) continue;
        const int sign = t.sign * merge_sign(ka.first, t.theta) * merge_sign(t.dtheta, kb.second);
        r.add_term(ka.first | t.theta, t.dtheta | kb.second, sign < 0 ? -c : c);
      }
    }
  return r;
}

CliffordElement act_on_dtheta(const CliffordElement& p, const CliffordElement& q) {
  if (!q.dtheta_only()) throw std::invalid_argument("act_on_dtheta expects a dtheta-only argument");
  CliffordElement r(std::max(p.nvars(), q.nvars()), p.field() ? p.field() : q.field());
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      // theta_A dtheta_B . dtheta_K = theta_A(dtheta_{B u K})
      if (kp.second & kq.second) continue;
      auto [sign, rest] = contract(kp.first, kp.second | kq.second);
      if (sign) r.add_term(0, rest, signed_product(sign * merge_sign(kp.second, kq.second), cp, cq));
    }
  return r;
}

CliffordElement act_on_theta(const CliffordElement& xi, const CliffordElement& p) {
  if (!p.theta_only()) throw std::invalid_argument("act_on_theta expects a theta-only argument");
  CliffordElement r(std::max(xi.nvars(), p.nvars()), xi.field() ? xi.field() : p.field());
  for (const auto& [kx, cx] : xi.terms())
    for (const auto& [kp, cp] : p.terms()) {
      auto [sign, rest] = derive(kx.second, kp.first);
      if (!sign || (rest & kx.first)) continue;
      r.add_term(kx.first | rest, 0, signed_product(sign * merge_sign(kx.first, rest), cx, cp));
    }
  return r;
}

CliffordElement star(const CliffordElement& a) {
  CliffordElement r(a.nvars(), a.field());
  for (const auto& [key, c] : a.terms()) {
    const int na = popcount(key.first), nb = popcount(key.second);
    const int sign = ((na * nb + nb) & 1) ? -1 : 1;
    for (const auto& t : reorder(key.second, key.first)) r.add_term(t.theta, t.dtheta, (sign * t.sign) < 0 ? -c : c);
  }
  return r;
}

MultiPoly pairing(const CliffordElement& p, const CliffordElement& q) {
  MultiPoly r(std::max(p.nvars(), q.nvars()), p.field() ? p.field() : q.field());
  for (const auto& [kp, cp] : p.terms()) {
    if (kp.second) throw std::invalid_argument("pairing expects theta-only on the left");
    for (const auto& [kq, cq] : q.terms()) {
      if (kq.first) throw std::invalid_argument("pairing expects dtheta-only on the right");
      if (kp.first != kq.second) continue;
      const int m = popcount(kp.first);
      r += signed_product(((m * (m - 1) / 2) & 1) ? -1 : 1, cp, cq);
    }
  }
  return r;
}

CliffordElement upsilon(const BiThetaElement& x, const CliffordElement& q1, const CliffordElement& q2) {
  CliffordElement r(x.nvars(), x.field());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [k1, c1] : q1.terms()) {
      auto [s1, rest1] = contract(kx.first, k1.second);
      if (!s1) continue;
      const int koszul = (popcount(k1.second) * popcount(kx.second)) & 1 ? -1 : 1;
      MultiPoly c01 = cx * c1;
      for (const auto& [k2, c2] : q2.terms()) {
        auto [s2, rest2] = contract(kx.second, k2.second);
        if (!s2 || (rest1 & rest2)) continue;
        r.add_term(0, rest1 | rest2, signed_product(koszul * s1 * s2 * merge_sign(rest1, rest2), c01, c2));
      }
    }
  return r;
}

CliffordElement upsilon_dagger(const BiThetaElement& x, const CliffordElement& p, const CliffordElement& q) {
  const int n = std::max({x.nvars(), p.nvars(), q.nvars()});
  const CyclotomicField* f = x.field() ? x.field() : p.field();
  CliffordElement r(n, f);
  for (Mask kp = 0; kp < (Mask{1} << n); ++kp) {
    // {theta_kp, dtheta_kp} = eps
    const int m = popcount(kp);
    const int eps = ((m * (m - 1) / 2) & 1) ? -1 : 1;
    CliffordElement probe = CliffordElement::basis(n, f, 0, kp);
    MultiPoly acc(n, f);
    for (const auto& [kx, cx] : x.terms()) {
      BiThetaElement single(n, f);
      single.add_term(kx.first, kx.second, cx);
      const int px = popcount(kx.first) + popcount(kx.second);
      CliffordElement u = upsilon(single, q, probe);
      if (u.is_zero()) continue;
      for (const auto& [kpp, cpp] : p.terms()) {
        const int sign = (popcount(kpp.first) * px) & 1 ? -1 : 1;
        MultiPoly v = pairing(CliffordElement::basis(n, f, kpp.first, 0, cpp), u);
        acc += sign < 0 ? -v : v;
      }
    }
    r.add_term(kp, 0, eps < 0 ? -acc : acc);
  }
  return r;
}

// ---------------------------------------------------------------- BiTheta

BiThetaElement BiThetaElement::one(int nvars, const CyclotomicField* f) {
  BiThetaElement r(nvars, f);
  r.add_term(0, 0, MultiPoly::constant(nvars, f, CycScalar(1)));
  return r;
}

BiThetaElement BiThetaElement::left(const CliffordElement& p) {
  if (!p.theta_only()) throw std::invalid_argument("expected a theta-only element");
  BiThetaElement r(p.nvars(), p.field());
  for (const auto& [k, c] : p.terms()) r.add_term(k.first, 0, c);
  return r;
}

BiThetaElement BiThetaElement::right(const CliffordElement& p) {
  if (!p.theta_only()) throw std::invalid_argument("expected a theta-only element");
  BiThetaElement r(p.nvars(), p.field());
  for (const auto& [k, c] : p.terms()) r.add_term(0, k.first, c);
  return r;
}

MultiPoly BiThetaElement::coefficient(Mask j1, Mask j2) const {
  auto it = terms_.find({j1, j2});
  return it == terms_.end() ? MultiPoly(nvars_, field_) : it->second;
}

void BiThetaElement::add_term(Mask j1, Mask j2, const MultiPoly& c) { accumulate(terms_, Key{j1, j2}, c); }

BiThetaElement& BiThetaElement::operator+=(const BiThetaElement& o) {
  if (!field_) field_ = o.field_;
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [key, c] : o.terms_) accumulate(terms_, key, c);
  return *this;
}

BiThetaElement operator*(const BiThetaElement& a, const BiThetaElement& b) {
  BiThetaElement r(std::max(a.nvars(), b.nvars()), a.field() ? a.field() : b.field());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if ((ka.first & kb.first) || (ka.second & kb.second)) continue;
      int sign = merge_sign(ka.first, kb.first) * merge_sign(ka.second, kb.second);
      if ((popcount(ka.second) * popcount(kb.first)) & 1) sign = -sign;
      r.add_term(ka.first | kb.first, ka.second | kb.second, signed_product(sign, ca, cb));
    }
  return r;
}

BiThetaElement operator*(const MultiPoly& c, const BiThetaElement& a) {
  BiThetaElement r(a.nvars(), a.field());
  for (const auto& [key, v] : a.terms()) r.add_term(key.first, key.second, c * v);
  return r;
}

BiThetaElement BiThetaElement::map_coeffs(const CoeffHook& fn) const {
  BiThetaElement r(nvars_, field_);
  for (const auto& [key, c] : terms_) r.add_term(key.first, key.second, fn(c));
  return r;
}

std::string BiThetaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*[" << mask_word("t", key.first) << "|" << mask_word("t", key.second) << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------- exponentials

namespace {

template <class T>
std::vector<T> exp_terms(const T& h, const T& one, const CoeffHook& reduce) {
  std::vector<T> out{one};
  for (long m = 1;; ++m) {
    const MultiPoly inv = MultiPoly::constant(h.nvars(), h.field(), CycScalar(mpq_class(1, m)));
    T next = inv * (out.back() * h);
    if (reduce) next = next.map_coeffs(reduce);
    if (next.is_zero()) break;
    if (m > 2 * h.nvars() + 1) throw std::invalid_argument("exponential of a non-nilpotent element");
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<CliffordElement> exp_series(const CliffordElement& h, const CoeffHook& reduce) {
  if (!h.is_zero() && h.degree() % 2 != 0) throw std::invalid_argument("exponential needs an even element");
  return exp_terms(h, CliffordElement::basis(h.nvars(), h.field(), 0, 0), reduce);
}

std::vector<BiThetaElement> exp_series(const BiThetaElement& h, const CoeffHook& reduce) {
  return exp_terms(h, BiThetaElement::one(h.nvars(), h.field()), reduce);
}

CliffordElement exp_nilpotent(const CliffordElement& h, const CoeffHook& reduce) {
  CliffordElement r(h.nvars(), h.field());
  for (const auto& t : exp_series(h, reduce)) r += t;
  return r;
}

BiThetaElement exp_nilpotent(const BiThetaElement& h, const CoeffHook& reduce) {
  BiThetaElement r(h.nvars(), h.field());
  for (const auto& t : exp_series(h, reduce)) r += t;
  return r;
}

}  // namespace lgorb
