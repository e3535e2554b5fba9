#include "lgorb/orbifold.hpp"

#include <numeric>
#include <sstream>

#include "lgorb/errors.hpp"
#include "parallel.hpp"

namespace lgorb {

namespace {

Mask bit(int i) { return Mask{1} << i; }

std::vector<CycScalar> ones(int n) { return std::vector<CycScalar>(n, CycScalar(1)); }

// Scale 1 on fixed coordinates and 0 on moving ones: y := x^g.
std::vector<CycScalar> fixed_part(const GroupElement& g) {
  std::vector<CycScalar> s(g.nvars(), CycScalar(1));
  for (int i : g.moving()) s[i] = CycScalar(0);
  return s;
}

MilnorClass add(MilnorClass a, const MilnorClass& b) {
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) a.coeffs[k] += b.coeffs[k];
  return a;
}

MilnorClass scale(MilnorClass a, const CycScalar& c) {
  for (auto& x : a.coeffs) x *= c;
  return a;
}

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

mpz_class factorial(int d) {
  mpz_class r = 1;
  for (int k = 2; k <= d; ++k) r *= k;
  return r;
}

MilnorClass sigma_impl(const BiThetaElement& hw, const MultiPoly& w, const GroupElement& g, const GroupElement& h,
                       const MilnorAlgebra& alg) {
  const mpq_class defect = pair_defect(g, h);
  if (defect < 0 || defect.get_den() != 1) return alg.zero();
  const int d = static_cast<int>(defect.get_num().get_si());
  const int n = w.nvars();
  const auto* f = w.field();
  const CoeffHook red = [&alg](const MultiPoly& p) { return alg.reduce(p); };

  BiThetaElement x = restrict_h_w(hw, g, identity_element(n, g.n)).map_coeffs(red);
  x += BiThetaElement::left(h_wg(w, g).map_coeffs(red));
  x += BiThetaElement::right(h_wg(w, h, HwgVariant::Shifted, &g).map_coeffs(red));

  BiThetaElement p = BiThetaElement::one(n, f);
  for (int k = 0; k < d && !p.is_zero(); ++k) p = (p * x).map_coeffs(red);
  if (p.is_zero()) return alg.zero();

  const auto qg = CliffordElement::basis(n, f, 0, g.moving_mask());
  const auto qh = CliffordElement::basis(n, f, 0, h.moving_mask());
  const MultiPoly c = upsilon(p, qg, qh).coefficient(0, (g * h).moving_mask());
  return alg.class_of(CycScalar(mpq_class(1, factorial(d))) * c);
}

const CyclotomicField* require_field(const MultiPoly& w, int n) {
  const auto* f = w.field();
  if (!f) throw ConfigError("potential has no coefficient field");
  if (f->order() % n != 0)
    throw ConfigError("group modulus " + std::to_string(n) + " does not divide field order " +
                      std::to_string(f->order()));
  return f;
}

}  // namespace

BiThetaElement h_w(const MultiPoly& w) {
  const int n = w.nvars();
  BiThetaElement out(n, w.field());
  for (int i = 1; i <= n; ++i) {
    const MultiPoly di = nabla(w, i, Transition::XtoXY);
    for (int j = 1; j <= i; ++j) out.add_term(bit(i - 1), bit(j - 1), nabla(di, j, Transition::YtoYZ));
  }
  return out;
}

BiThetaElement restrict_h_w(const BiThetaElement& hw, const GroupElement& g, const GroupElement& k) {
  const auto* f = require_field(MultiPoly(hw.nvars(), hw.field()), std::lcm(g.n, k.n));
  const auto gy = g.entries(f);
  const auto kz = k.entries(f);
  return hw.map_coeffs([&](const MultiPoly& p) {
    return substitute_diag(substitute_diag(p, Block::Y, gy, Block::X), Block::Z, kz, Block::X);
  });
}

BiThetaElement h_w_restricted(const MultiPoly& w, const GroupElement& g) {
  return restrict_h_w(h_w(w), g, identity_element(w.nvars(), g.n));
}

CliffordElement h_wg(const MultiPoly& w, const GroupElement& g, HwgVariant variant, const GroupElement* shift) {
  const int n = w.nvars();
  const auto* f = require_field(w, g.n);
  if (variant == HwgVariant::Shifted && !shift) throw ConfigError("shifted H_{W,g} needs a shift element");
  CliffordElement out(n, f);
  const auto ge = g.entries(f);
  const auto yfix = fixed_part(g);
  const auto mov = g.moving();
  for (int i : mov) {
    MultiPoly p = nabla(w, i + 1, Transition::XtoXY);
    if (variant == HwgVariant::Dagger) {
      p = substitute_diag(substitute_diag(p, Block::X, ge, Block::X), Block::Y, ones(n), Block::X);
    } else {
      p = substitute_diag(p, Block::Y, ge, Block::X);
    }
    for (int j : mov) {
      if (j >= i) break;
      MultiPoly q = substitute_diag(nabla(p, j + 1, Transition::XtoXY), Block::Y, yfix, Block::X);
      q = (CycScalar(1) - ge[j]).inverse() * q;
      out.add_term(bit(j) | bit(i), 0, q);
    }
  }
  if (variant == HwgVariant::Shifted) {
    const auto se = shift->entries(require_field(w, shift->n));
    out = out.map_coeffs([&](const MultiPoly& p) { return substitute_diag(p, Block::X, se, Block::X); });
  }
  return out;
}

MilnorClass sigma(const MultiPoly& w, const GroupElement& g, const GroupElement& h, const MilnorAlgebra& alg_gh) {
  return sigma_impl(h_w(w), w, g, h, alg_gh);
}

// ---------------------------------------------------------------------------

int TwistedElement::parity() const {
  int p = -1;
  for (const auto& [key, c] : terms_) {
    const int q = alg_->parity(key.first, side_);
    if (p >= 0 && p != q) throw ComputationError("element is not homogeneous");
    p = q;
  }
  return p < 0 ? 0 : p;
}

void TwistedElement::add_term(std::size_t sector, int t, const MilnorClass& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace({sector, t}, c);
  if (fresh) return;
  it->second = add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
  if (!alg_) {
    alg_ = o.alg_;
    side_ = o.side_;
  }
  if (o.alg_ && (o.alg_ != alg_ || o.side_ != side_)) throw ComputationError("adding elements of different modules");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

TwistedElement TwistedElement::operator-() const { return scaled(CycScalar(-1)); }

TwistedElement TwistedElement::scaled(const CycScalar& c) const {
  TwistedElement r(alg_, side_);
  for (const auto& [key, v] : terms_) r.add_term(key.first, key.second, scale(v, c));
  return r;
}

TwistedElement TwistedElement::collapse_t() const {
  TwistedElement r(alg_, side_);
  for (const auto& [key, v] : terms_) r.add_term(key.first, 0, v);
  return r;
}

bool operator==(const TwistedElement& a, const TwistedElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && a.side_ != b.side_) return false;
  return a.terms_ == b.terms_;
}

std::string TwistedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << alg_->algebra(key.first).to_string(c) << ")";
    if (key.second != 0) os << "*t^" << key.second;
    os << (side_ == Side::Xi ? "*xi" : "*omega") << alg_->group()[key.first].to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

TwistedAlgebra::TwistedAlgebra(MultiPoly w, SymmetryGroup group, TwistedOptions opt)
    : w_(std::move(w)), group_(std::move(group)) {
  require_field(w_, group_.modulus());
  if (group_.nvars() != w_.nvars()) throw ConfigError("group and potential disagree on the number of variables");
  for (const auto& g : group_.elements()) check_invariance(g, w_);

  const std::size_t m = group_.size();
  data_.resize(m);
  algs_.resize(m);
  detail::parallel_for(m, opt.jobs, [&](std::size_t i) {
    data_[i] = sector_data(group_[i]);
    algs_[i] = std::make_shared<const MilnorAlgebra>(w_, group_[i], opt.local, opt.d_max);
  });

  const BiThetaElement hw = h_w(w_);
  sigma_.resize(m * m);
  texp_.resize(m * m);
  detail::parallel_for(m * m, opt.jobs, [&](std::size_t ij) {
    const std::size_t i = ij / m, j = ij % m;
    const mpq_class defect = pair_defect(group_[i], group_[j]);
    if (defect >= 0 && defect.get_den() == 1) texp_[ij] = static_cast<int>(defect.get_num().get_si());
    sigma_[ij] = sigma_impl(hw, w_, group_[i], group_[j], *algs_[group_.mul(i, j)]);
  });
}

int TwistedAlgebra::parity(std::size_t i, Side side) const {
  const int d = data_[i].d - (side == Side::Omega ? nvars() : 0);
  return ((d % 2) + 2) % 2;
}

TwistedElement TwistedAlgebra::generator(std::size_t i, Side side) const {
  TwistedElement r(this, side);
  r.add_term(i, 0, algs_[i]->unit());
  return r;
}

TwistedElement TwistedAlgebra::basis_element(std::size_t i, std::size_t k, Side side) const {
  MilnorClass c = algs_[i]->zero();
  c.coeffs.at(k) = CycScalar(1);
  TwistedElement r(this, side);
  r.add_term(i, 0, c);
  return r;
}

std::vector<TwistedElement> TwistedAlgebra::basis(Side side) const {
  std::vector<TwistedElement> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < algs_[i]->dim(); ++k) out.push_back(basis_element(i, k, side));
  return out;
}

TwistedElement TwistedAlgebra::multiply(const TwistedElement& u, const TwistedElement& v, Side out) const {
  if ((u.algebra() && u.algebra() != this) || (v.algebra() && v.algebra() != this))
    throw ComputationError("operands belong to a different algebra");
  TwistedElement r(this, out);
  for (const auto& [ku, cu] : u.terms()) {
    const MultiPoly pu = algs_[ku.first]->to_poly(cu);
    for (const auto& [kv, cv] : v.terms()) {
      const std::size_t ij = ku.first * size() + kv.first;
      if (!texp_[ij] || sigma_[ij].is_zero()) continue;
      const std::size_t k = group_.mul(ku.first, kv.first);
      const auto& alg = *algs_[k];
      const MultiPoly prod = pu * algs_[kv.first]->to_poly(cv) * alg.to_poly(sigma_[ij]);
      r.add_term(k, ku.second + kv.second + *texp_[ij], alg.class_of(prod));
    }
  }
  return r;
}

TwistedElement TwistedAlgebra::cup(const TwistedElement& u, const TwistedElement& v) const {
  if (u.side() != Side::Xi || v.side() != Side::Xi) throw ComputationError("cup takes two xi-side elements");
  return multiply(u, v, Side::Xi);
}

TwistedElement TwistedAlgebra::cap(const TwistedElement& w, const TwistedElement& v) const {
  if (w.side() != Side::Omega || v.side() != Side::Xi) throw ComputationError("cap takes an omega-side element and a xi-side element");
  return multiply(w, v, Side::Omega);
}

int TwistedAlgebra::character_exponent(const GroupElement& h, std::size_t i, std::size_t k, Side side) const {
  const auto& s = data_[i];
  int e = h.character_exponent(algs_[i]->basis()[k]);
  e += side == Side::Xi ? -h.sum_over(s.moving_set) : h.sum_over(s.fixed_set);
  return ((e % h.n) + h.n) % h.n;
}

TwistedElement TwistedAlgebra::g_action(const GroupElement& h, const TwistedElement& u) const {
  TwistedElement r(this, u.side());
  for (const auto& [key, c] : u.terms()) {
    const auto& s = data_[key.first];
    const int e = u.side() == Side::Xi ? -h.sum_over(s.moving_set) : h.sum_over(s.fixed_set);
    r.add_term(key.first, key.second, scale(g_act(h, c), zeta_power_in(field(), e, h.n)));
  }
  return r;
}

std::vector<TwistedElement> TwistedAlgebra::invariants() const {
  std::vector<TwistedElement> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < algs_[i]->dim(); ++k) {
      bool fixed = true;
      for (const auto& h : group_.elements())
        if (character_exponent(h, i, k, Side::Xi) != 0) {
          fixed = false;
          break;
        }
      if (fixed) out.push_back(basis_element(i, k));
    }
  return out;
}

std::vector<TwistedElement> TwistedAlgebra::coinvariants() const {
  std::vector<TwistedElement> out;
  const CycScalar inv_order(mpq_class(1, static_cast<long>(size())));
  for (const auto& b : basis(Side::Omega)) {
    TwistedElement avg = zero(Side::Omega);
    for (const auto& h : group_.elements()) avg += g_action(h, b);
    if (!avg.is_zero()) out.push_back(avg.scaled(inv_order));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void fail(CheckResult& r, const std::string& what) {
  if (!r.passed) return;
  r.passed = false;
  r.witness = what;
}

std::string pair_name(const TwistedAlgebra& a, std::size_t i, std::size_t j) {
  return "(" + a.group()[i].to_string() + ", " + a.group()[j].to_string() + ")";
}

}  // namespace

CheckResult check_unit(const TwistedAlgebra& a) {
  CheckResult r{"unit", true, 0, {}};
  const auto one = a.unit();
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++r.cases;
    const auto& u = a.algebra(i).unit();
    if (!(a.sigma(0, i) == u) || !(a.sigma(i, 0) == u)) fail(r, "sigma(e,g) != 1 at " + pair_name(a, 0, i));
  }
  for (const auto& b : a.basis()) {
    ++r.cases;
    if (!(a.cup(one, b) == b) || !(a.cup(b, one) == b)) fail(r, "xi_e does not act as unit on " + b.to_string());
  }
  return r;
}

CheckResult check_braided(const TwistedAlgebra& a) {
  CheckResult r{"braided", true, 0, {}};
  const auto basis = a.basis();
  for (const auto& u : basis)
    for (const auto& v : basis) {
      ++r.cases;
      const std::size_t j = v.terms().begin()->first.first;
      const auto lhs = a.cup(u, v);
      auto rhs = a.cup(v, a.g_action(a.group()[a.group().inverse(j)], u));
      if (u.parity() * v.parity() % 2) rhs = -rhs;
      if (!(lhs == rhs)) fail(r, u.to_string() + " cup " + v.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  return r;
}

CheckResult check_associative(const TwistedAlgebra& a) {
  CheckResult r{"assoc", true, 0, {}};
  const auto basis = a.basis();
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const auto uv = a.cup(u, v);
      for (const auto& w : basis) {
        ++r.cases;
        const auto lhs = a.cup(uv, w);
        const auto rhs = a.cup(u, a.cup(v, w));
        if (!(lhs == rhs))
          fail(r, "(" + u.to_string() + ", " + v.to_string() + ", " + w.to_string() + "): " + lhs.to_string() +
                      " vs " + rhs.to_string());
      }
    }
  return r;
}

CheckResult check_equivariance(const TwistedAlgebra& a) {
  CheckResult r{"equivariance", true, 0, {}};
  const auto basis = a.basis();
  for (const auto& k : a.group().elements())
    for (const auto& u : basis)
      for (const auto& v : basis) {
        ++r.cases;
        const auto lhs = a.g_action(k, a.cup(u, v));
        const auto rhs = a.cup(a.g_action(k, u), a.g_action(k, v));
        if (!(lhs == rhs)) fail(r, k.to_string() + " on " + u.to_string() + " cup " + v.to_string());
      }
  return r;
}

CheckResult check_transversal(const TwistedAlgebra& a) {
  CheckResult r{"transversal", true, 0, {}};
  const int n = a.nvars();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto t = a.t_exponent(i, j);
      if (!t || *t != 0) continue;
      ++r.cases;
      const auto& g = a.group()[i];
      const auto& h = a.group()[j];
      const Mask mg = g.moving_mask(), mh = h.moving_mask();
      if ((mg & mh) != 0 || (mg | mh) != (g * h).moving_mask()) {
        fail(r, "d_{g,h}=0 without transversal moving sets at " + pair_name(a, i, j));
        continue;
      }
      const auto ups = upsilon(BiThetaElement::one(n, a.field()), CliffordElement::basis(n, a.field(), 0, mg),
                               CliffordElement::basis(n, a.field(), 0, mh));
      const CycScalar from_upsilon = ups.coefficient(0, mg | mh).constant_term();
      const CycScalar shuffle(merge_sign(mg, mh));
      const auto& alg = a.algebra(a.group().mul(i, j));
      if (!(from_upsilon == shuffle) || !(a.sigma(i, j) == scale(alg.unit(), shuffle)))
        fail(r, "sigma" + pair_name(a, i, j) + " = " + alg.to_string(a.sigma(i, j)) + ", shuffle sign " +
                    shuffle.to_string());
    }
  return r;
}

CheckResult check_omega(const TwistedAlgebra& a) {
  CheckResult r{"omega", true, 0, {}};
  const auto omega_e = a.generator(0, Side::Omega);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++r.cases;
    if (!(a.cap(omega_e, a.generator(i)) == a.generator(i, Side::Omega)))
      fail(r, "omega_e cap xi_g != omega_g for g = " + a.group()[i].to_string());
  }
  const auto xs = a.basis();
  for (const auto& w : a.basis(Side::Omega))
    for (const auto& u : xs)
      for (const auto& v : xs) {
        ++r.cases;
        const auto lhs = a.cap(a.cap(w, u), v);
        const auto rhs = a.cap(w, a.cup(u, v));
        if (!(lhs == rhs)) fail(r, "(" + w.to_string() + " cap " + u.to_string() + ") cap " + v.to_string());
      }
  return r;
}

CheckResult check_invariant_subalgebra(const TwistedAlgebra& a) {
  CheckResult r{"invariant_subalgebra", true, 0, {}};
  const auto inv = a.invariants();
  for (const auto& u : inv)
    for (const auto& v : inv) {
      ++r.cases;
      const auto uv = a.cup(u, v);
      for (const auto& h : a.group().elements())
        if (!(a.g_action(h, uv) == uv)) fail(r, u.to_string() + " cup " + v.to_string() + " is not invariant");
      auto vu = a.cup(v, u);
      if (u.parity() * v.parity() % 2) vu = -vu;
      if (!(uv == vu)) fail(r, u.to_string() + " and " + v.to_string() + " do not super-commute");
    }
  return r;
}

std::vector<InverseIdentity> inverse_pair_identity(const TwistedAlgebra& a) {
  std::vector<InverseIdentity> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = a.group().inverse(i);
    const auto& g = a.group()[i];
    const CycScalar det = zeta_power_in(a.field(), g.det_exponent(), g.n);
    const MilnorClass rhs = scale(a.sigma(i, j), det);
    InverseIdentity e{i};
    e.det_holds = a.sigma(j, i) == rhs;
    e.signed_det_holds = a.sigma(j, i) == scale(rhs, CycScalar(sign_pow(a.sector(i).d)));
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiPoly shift_variables(const MultiPoly& p, int nvars, int offset) {
  if (offset < 0 || p.nvars() + offset > nvars || nvars > kMaxVars) throw ConfigError("variable shift out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < p.nvars(); ++i) m.set(static_cast<Block>(b), i + offset, t.m.get(static_cast<Block>(b), i));
    terms.push_back({m, t.c});
  }
  return MultiPoly::from_terms(nvars, p.field(), std::move(terms));
}

namespace {

// Solves rows * e = rhs over GF(2); returns false when inconsistent.
bool solve_gf2(std::vector<std::vector<bool>> rows, std::vector<bool> rhs, std::size_t nvar, std::vector<int>& sol) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nvar && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    std::swap(rhs[p], rhs[rank]);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != rank && rows[q][c]) {
        for (std::size_t k = 0; k < nvar; ++k) rows[q][k] = rows[q][k] != rows[rank][k];
        rhs[q] = rhs[q] != rhs[rank];
      }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (std::size_t q = rank; q < rows.size(); ++q)
    if (rhs[q]) return false;
  sol.assign(nvar, 0);
  for (std::size_t q = 0; q < rank; ++q) sol[pivot_col[q]] = rhs[q] ? 1 : 0;
  return true;
}

}  // namespace

KunnethResult kunneth(const TwistedAlgebra& a1, const TwistedAlgebra& a2, TwistedOptions opt) {
  const int n1 = a1.nvars(), n2 = a2.nvars(), nv = n1 + n2;
  if (nv > kMaxVars) throw ConfigError("too many variables for a product model");
  if (a1.field() != a2.field()) throw ConfigError("Kunneth factors must share a coefficient field");
  const int m1 = a1.group().modulus(), m2 = a2.group().modulus();
  const int n = std::lcm(m1, m2);

  std::vector<GroupElement> elems;
  for (const auto& g1 : a1.group().elements())
    for (const auto& g2 : a2.group().elements()) {
      GroupElement g{std::vector<int>(nv), n};
      for (int i = 0; i < n1; ++i) g.a[i] = g1.a[i] * (n / m1);
      for (int i = 0; i < n2; ++i) g.a[n1 + i] = g2.a[i] * (n / m2);
      elems.push_back(g);
    }
  MultiPoly w = shift_variables(a1.potential(), nv, 0) + shift_variables(a2.potential(), nv, n1);
  KunnethResult res;
  res.direct = std::make_unique<TwistedAlgebra>(w, SymmetryGroup(nv, n, elems), opt);
  const auto& d = *res.direct;

  const std::size_t s1 = a1.size(), s2 = a2.size(), m = d.size();
  res.sector_of.assign(s1, std::vector<std::size_t>(s2));
  std::vector<std::pair<std::size_t, std::size_t>> factor(m);
  for (std::size_t i = 0; i < s1; ++i)
    for (std::size_t j = 0; j < s2; ++j) {
      res.sector_of[i][j] = d.group().index_of(elems[i * s2 + j]);
      factor[res.sector_of[i][j]] = {i, j};
      if (d.algebra(res.sector_of[i][j]).dim() != a1.algebra(i).dim() * a2.algebra(j).dim()) {
        res.dims_multiply = false;
        if (res.witness.empty()) res.witness = "dimension mismatch at " + d.group()[res.sector_of[i][j]].to_string();
      }
    }

  std::vector<std::vector<bool>> rows;
  std::vector<bool> rhs;
  std::vector<bool> gauge(m, false);
  gauge[0] = true;
  rows.push_back(gauge);
  rhs.push_back(false);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      const auto [g1, g2] = factor[g];
      const auto [h1, h2] = factor[h];
      const std::size_t gh = d.group().mul(g, h);
      const auto& alg = d.algebra(gh);
      const auto t1 = a1.t_exponent(g1, h1), t2 = a2.t_exponent(g2, h2), t = d.t_exponent(g, h);
      const bool t_ok = (!t1 || !t2) ? !t || d.sigma(g, h).is_zero() : (t && *t == *t1 + *t2);
      MilnorClass tensor = alg.zero();
      if (t1 && t2) {
        const MultiPoly p1 = shift_variables(a1.algebra(a1.group().mul(g1, h1)).to_poly(a1.sigma(g1, h1)), nv, 0);
        const MultiPoly p2 = shift_variables(a2.algebra(a2.group().mul(g2, h2)).to_poly(a2.sigma(g2, h2)), nv, n1);
        const long koszul = static_cast<long>(a2.sector(g2).d) * a1.sector(h1).d;
        tensor = alg.class_of(CycScalar(sign_pow(koszul)) * (p1 * p2));
      }
      const auto& direct = d.sigma(g, h);
      int s = 0;
      if (direct.is_zero() && tensor.is_zero()) continue;
      if (direct == tensor) s = 1;
      else if (direct == scale(tensor, CycScalar(-1))) s = -1;
      if (s == 0 || !t_ok) {
        res.consistent = false;
        if (res.witness.empty())
          res.witness = "sigma" + pair_name(d, g, h) + ": direct " + alg.to_string(direct) + ", tensor " +
                        alg.to_string(tensor);
        continue;
      }
      std::vector<bool> row(m, false);
      row[g] = !row[g];
      row[h] = !row[h];
      row[gh] = !row[gh];
      rows.push_back(row);
      rhs.push_back(s < 0);
    }

  std::vector<int> bits;
  if (!solve_gf2(rows, rhs, m, bits)) {
    res.consistent = false;
    if (res.witness.empty()) res.witness = "no sign assignment reconciles the two tables";
    bits.assign(m, 0);
  }
  res.epsilon.resize(m);
  for (std::size_t g = 0; g < m; ++g) res.epsilon[g] = bits[g] ? -1 : 1;
  return res;
}

}  // namespace lgorb
