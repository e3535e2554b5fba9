#include "lgorb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "lgorb/errors.hpp"

namespace lgorb {

char block_name(Block b) {
  switch (b) {
    case Block::X: return 'x';
    case Block::Y: return 'y';
    case Block::Z: return 'z';
  }
  return '?';
}

void Monomial::set(Block b, int i, std::uint16_t v) {
  auto& slot = e[static_cast<int>(b) * kMaxVars + i];
  deg = deg - slot + v;
  slot = v;
}

unsigned Monomial::blocks() const {
  unsigned mask = 0;
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < kMaxVars; ++i)
      if (e[b * kMaxVars + i]) {
        mask |= 1u << b;
        break;
      }
  return mask;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > o.e[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t k = 0; k < e.size(); ++k) r.e[k] = e[k] + o.e[k];
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t k = 0; k < e.size(); ++k) r.e[k] = e[k] - o.e[k];
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t k = 0; k < a.e.size(); ++k) {
    r.e[k] = std::max(a.e[k], b.e[k]);
    r.deg += r.e[k];
  }
  return r;
}

std::string Monomial::to_string(int nvars) const {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < nvars; ++i) {
      auto v = e[b * kMaxVars + i];
      if (!v) continue;
      if (!first) os << "*";
      first = false;
      os << block_name(static_cast<Block>(b)) << (i + 1);
      if (v > 1) os << "^" << v;
    }
  return first ? "1" : os.str();
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (std::size_t k = a.e.size(); k-- > 0;)
    if (a.e[k] != b.e[k]) return a.e[k] < b.e[k];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
  return h;
}

MultiPoly MultiPoly::constant(int nvars, const CyclotomicField* f, const CycScalar& c) {
  MultiPoly p(nvars, f);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

MultiPoly MultiPoly::variable(int nvars, const CyclotomicField* f, Block b, int i) {
  Monomial m;
  m.set(b, i, 1);
  return monomial(nvars, f, m, CycScalar(f, 1));
}

MultiPoly MultiPoly::monomial(int nvars, const CyclotomicField* f, const Monomial& m, const CycScalar& c) {
  MultiPoly p(nvars, f);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(int nvars, const CyclotomicField* f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
  MultiPoly p(nvars, f);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m)
      p.terms_.back().c += t.c;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
  }
  return p;
}

unsigned MultiPoly::blocks() const {
  unsigned mask = 0;
  for (const auto& t : terms_) mask |= t.m.blocks();
  return mask;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

CycScalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_greater(t.m, x); });
  if (it != terms_.end() && it->m == m) return it->c;
  return CycScalar(field_, 0);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

const CyclotomicField* pick(const CyclotomicField* a, const CyclotomicField* b) {
  if (a && b && a != b) throw ConfigError("polynomials over different cyclotomic fields");
  return a ? a : b;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_greater(a[i].m, b[j].m))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_greater(b[j].m, a[i].m)) {
      out.push_back({b[j].m, subtract ? -b[j].c : b[j].c});
      ++j;
    } else {
      CycScalar c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  field_ = pick(field_, o.field_);
  nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  field_ = pick(field_, o.field_);
  nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_), pick(a.field_, b.field_));
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1) {
    for (const auto& t : a.terms_) r.terms_.push_back({t.m * b.terms_[0].m, t.c * b.terms_[0].c});
    // multiplying by one monomial preserves the order; fields have no zero divisors
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::unordered_map<Monomial, CycScalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto [it, fresh] = acc.try_emplace(s.m * t.m, s.c * t.c);
      if (!fresh) it->second += s.c * t.c;
    }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.m, y.m); });
  return r;
}

MultiPoly operator*(const CycScalar& c, const MultiPoly& p) {
  MultiPoly r(p.nvars_, pick(p.field_, c.field()));
  if (c.is_zero()) return r;
  r.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) r.terms_.push_back({t.m, c * t.c});
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].m != b.terms_[k].m || a.terms_[k].c != b.terms_[k].c) return false;
  return true;
}

void MultiPoly::sub_scaled(const CycScalar& c, const Monomial& m, const MultiPoly& g) {
  field_ = pick(field_, g.field_);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial gm = g.terms_[j].m * m;
    if (i < terms_.size() && grevlex_greater(terms_[i].m, gm)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i < terms_.size() && terms_[i].m == gm) {
      CycScalar v = terms_[i].c - c * g.terms_[j].c;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    } else {
      out.push_back({gm, -(c * g.terms_[j].c)});
      ++j;
    }
  }
  terms_ = std::move(out);
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, field_, CycScalar(field_, 1));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

MultiPoly MultiPoly::make_monic() const {
  if (is_zero()) return *this;
  return terms_.front().c.inverse() * *this;
}

MultiPoly MultiPoly::map_coeffs(const std::function<CycScalar(const CycScalar&)>& fn) const {
  MultiPoly r(nvars_, field_);
  for (const auto& t : terms_) {
    CycScalar c = fn(t.c);
    if (!c.is_zero()) r.terms_.push_back({t.m, std::move(c)});
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.c.to_string();
    std::string m = t.m.to_string(nvars_);
    bool simple = t.c.is_rational();
    bool neg = simple && c[0] == '-';
    if (neg) c = c.substr(1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (m == "1") {
      os << (simple ? c : "(" + c + ")");
    } else {
      if (c != "1") os << (simple ? c : "(" + c + ")") << "*";
      os << m;
    }
  }
  return os.str();
}

namespace {

std::pair<Block, Block> blocks_of(Transition t) {
  switch (t) {
    case Transition::XtoXY: return {Block::X, Block::Y};
    case Transition::YtoYZ: return {Block::Y, Block::Z};
    case Transition::XtoXZ: return {Block::X, Block::Z};
  }
  return {Block::X, Block::Y};
}

}  // namespace

MultiPoly l_slice(const MultiPoly& f, int i, Transition t) {
  const int n = f.nvars();
  if (i < 1 || i > n + 1) throw std::out_of_range("slice index out of range");
  auto [src, dst] = blocks_of(t);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& term : f.terms()) {
    Monomial m = term.m;
    for (int v = 0; v < i - 1; ++v) {
      auto a = m.get(src, v);
      if (!a) continue;
      m.set(src, v, 0);
      m.set(dst, v, m.get(dst, v) + a);
    }
    out.push_back({m, term.c});
  }
  return MultiPoly::from_terms(n, f.field(), std::move(out));
}

MultiPoly nabla(const MultiPoly& f, int i, Transition t) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw std::out_of_range("nabla index out of range");
  auto [src, dst] = blocks_of(t);
  const int v = i - 1;
  // Per term s_v^a t_v^c R: l_i gives s^a t^c R', l_{i+1} gives t^{a+c} R',
  // and (s^a - t^a)/(s - t) = sum_{p+q=a-1} s^p t^q.
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    Monomial base = term.m;
    for (int u = 0; u < v; ++u) {
      auto a = base.get(src, u);
      if (!a) continue;
      base.set(src, u, 0);
      base.set(dst, u, base.get(dst, u) + a);
    }
    const int a = base.get(src, v);
    if (a == 0) continue;
    const int c = base.get(dst, v);
    for (int p = 0; p < a; ++p) {
      Monomial m = base;
      m.set(src, v, p);
      m.set(dst, v, c + (a - 1 - p));
      out.push_back({m, term.c});
    }
  }
  return MultiPoly::from_terms(n, f.field(), std::move(out));
}

MultiPoly substitute_diag(const MultiPoly& f, Block from, const std::vector<CycScalar>& scale, Block into) {
  const int n = f.nvars();
  if (static_cast<int>(scale.size()) < n) throw std::invalid_argument("substitution needs one scale per variable");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& term : f.terms()) {
    Monomial m = term.m;
    CycScalar c = term.c;
    bool dead = false;
    for (int v = 0; v < n && !dead; ++v) {
      auto a = m.get(from, v);
      if (!a) continue;
      if (scale[v].is_zero()) {
        dead = true;
        break;
      }
      if (!scale[v].is_one()) c *= scale[v].pow(a);
      m.set(from, v, 0);
      m.set(into, v, m.get(into, v) + a);
    }
    if (!dead) out.push_back({m, std::move(c)});
  }
  return MultiPoly::from_terms(n, f.field(), std::move(out));
}

MultiPoly res_fixed(const MultiPoly& f, const std::vector<int>& moving) {
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    bool keep = true;
    for (int v : moving) keep = keep && term.m.get(Block::X, v) == 0;
    if (keep) out.push_back(term);
  }
  return MultiPoly::from_terms(f.nvars(), f.field(), std::move(out));
}

MultiPoly partial_derivative(const MultiPoly& f, int i, Block b) {
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    auto a = term.m.get(b, i);
    if (!a) continue;
    Monomial m = term.m;
    m.set(b, i, a - 1);
    out.push_back({m, term.c * CycScalar(static_cast<long>(a))});
  }
  return MultiPoly::from_terms(f.nvars(), f.field(), std::move(out));
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, int nvars, const CyclotomicField* f) : s_(s), n_(nvars), f_(f) {}

  MultiPoly run() {
    MultiPoly acc(n_, f_);
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = get() == '-';
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      MultiPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + why +
                          " in \"" + s_ + "\"");
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    if (pos_ - start > 18) fail("integer too large");
    return neg ? -v : v;
  }

  MultiPoly term() {
    MultiPoly t = MultiPoly::constant(n_, f_, CycScalar(f_, 1));
    while (true) {
      skip();
      t = t * factor();
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  MultiPoly factor() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) num = num * 10 + (get() - '0');
      mpq_class q(num);
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        mpz_class den = 0;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) den = den * 10 + (get() - '0');
        if (den == 0) fail("zero denominator");
        q = mpq_class(num, den);
        q.canonicalize();
      }
      return MultiPoly::constant(n_, f_, CycScalar(f_, q));
    }
    if (s_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      long k = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        k = integer();
      }
      if (!f_) fail("zeta needs a cyclotomic order");
      return MultiPoly::constant(n_, f_, zeta_power_in(f_, k, f_->order()));
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Block b = c == 'x' ? Block::X : c == 'y' ? Block::Y : Block::Z;
      int idx = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        idx = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) idx = idx * 10 + (get() - '0');
      }
      if (idx < 1 || idx > n_) fail("variable index out of range");
      long e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        e = integer();
        if (e < 0 || e > 60000) fail("bad exponent");
      }
      Monomial m;
      m.set(b, idx - 1, static_cast<std::uint16_t>(e));
      return MultiPoly::monomial(n_, f_, m, CycScalar(f_, 1));
    }
    fail(c == '\0' ? std::string("unexpected end of input") : std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int n_;
  const CyclotomicField* f_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int nvars, const CyclotomicField* f) {
  if (nvars < 1 || nvars > kMaxVars) throw ConfigError("nvars must be in 1.." + std::to_string(kMaxVars));
  return Parser(text, nvars, f).run();
}

}  // namespace lgorb
