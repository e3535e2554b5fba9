#include "lgorb/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "lgorb/errors.hpp"

namespace lgorb {

namespace {

int mod(long v, int n) {
  long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

bool GroupElement::is_identity() const {
  return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r{a, n};
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = mod(a[i] + o.a[i], n);
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r{a, n};
  for (auto& v : r.a) v = mod(-v, n);
  return r;
}

GroupElement GroupElement::pow(long k) const {
  GroupElement r{a, n};
  for (auto& v : r.a) v = mod(static_cast<long>(v) * mod(k, n), n);
  return r;
}

CycScalar GroupElement::entry(const CyclotomicField* f, int i) const { return zeta_power_in(f, a[i], n); }

std::vector<CycScalar> GroupElement::entries(const CyclotomicField* f) const {
  std::vector<CycScalar> out;
  for (int i = 0; i < nvars(); ++i) out.push_back(entry(f, i));
  return out;
}

int GroupElement::character_exponent(const Monomial& m) const {
  long s = 0;
  for (int i = 0; i < nvars(); ++i) s += static_cast<long>(a[i]) * m.get(Block::X, i);
  return mod(s, n);
}

int GroupElement::sum_over(const std::vector<int>& idx) const {
  long s = 0;
  for (int i : idx) s += a[i];
  return mod(s, n);
}

std::vector<int> GroupElement::fixed() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (a[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> GroupElement::moving() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (a[i] != 0) out.push_back(i);
  return out;
}

unsigned GroupElement::moving_mask() const {
  unsigned m = 0;
  for (int i = 0; i < nvars(); ++i)
    if (a[i] != 0) m |= 1u << i;
  return m;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")/" << n;
  return os.str();
}

GroupElement identity_element(int nvars, int n) { return GroupElement{std::vector<int>(nvars, 0), n}; }

SectorData sector_data(const GroupElement& g) {
  SectorData s;
  s.g = g;
  s.fixed_set = g.fixed();
  s.moving_set = g.moving();
  s.d = static_cast<int>(s.moving_set.size());
  s.age = 0;
  for (int v : g.a) s.age += mpq_class(v, g.n);
  s.age.canonicalize();
  return s;
}

mpq_class pair_defect(const GroupElement& g, const GroupElement& h) {
  const int dg = static_cast<int>(g.moving().size());
  const int dh = static_cast<int>(h.moving().size());
  const int dgh = static_cast<int>((g * h).moving().size());
  mpq_class r(dg + dh - dgh, 2);
  r.canonicalize();
  return r;
}

SymmetryGroup::SymmetryGroup(int nvars, int n, std::vector<GroupElement> elements)
    : nvars_(nvars), n_(n), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i].a] = i;
  const std::size_t s = elems_.size();
  mul_.resize(s * s);
  inv_.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) mul_[i * s + j] = index_of(elems_[i] * elems_[j]);
    inv_[i] = index_of(elems_[i].inverse());
  }
}

std::size_t SymmetryGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g.a);
  if (it == index_.end()) throw ComputationError("element " + g.to_string() + " is not in the group");
  return it->second;
}

void check_invariance(const GroupElement& g, const MultiPoly& w) {
  for (const auto& t : w.terms())
    if (g.character_exponent(t.m) != 0)
      throw ValidationError("generator " + g.to_string() + " does not preserve the monomial " + t.m.to_string(w.nvars()));
}

SymmetryGroup generate_group(const std::vector<std::vector<int>>& generators, int n, const MultiPoly& w) {
  if (n < 1) throw ConfigError("group order must be positive");
  const int nv = w.nvars();
  std::vector<GroupElement> gens;
  for (const auto& v : generators) {
    if (static_cast<int>(v.size()) != nv)
      throw ValidationError("generator has " + std::to_string(v.size()) + " entries, expected " + std::to_string(nv));
    GroupElement g{v, n};
    for (auto& x : g.a) x = mod(x, n);
    check_invariance(g, w);
    gens.push_back(g);
  }
  std::set<std::vector<int>> seen;
  std::vector<GroupElement> all;
  std::deque<GroupElement> queue{identity_element(nv, n)};
  seen.insert(queue.front().a);
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    all.push_back(g);
    for (const auto& s : gens) {
      GroupElement h = g * s;
      if (seen.insert(h.a).second) queue.push_back(h);
    }
  }
  return SymmetryGroup(nv, n, std::move(all));
}

DiagonalSymmetries maximal_diagonal_symmetries(const MultiPoly& w) {
  const int nv = w.nvars();
  if (static_cast<int>(w.size()) != nv) throw ValidationError("W must have as many monomials as variables");
  // augmented [E | I], rows are monomials
  std::vector<std::vector<mpq_class>> m(nv, std::vector<mpq_class>(2 * nv));
  for (int r = 0; r < nv; ++r) {
    for (int c = 0; c < nv; ++c) m[r][c] = w.terms()[r].m.get(Block::X, c);
    m[r][nv + r] = 1;
  }
  for (int c = 0; c < nv; ++c) {
    int p = c;
    while (p < nv && m[p][c] == 0) ++p;
    if (p == nv) throw ValidationError("exponent matrix of W is singular");
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (int r = 0; r < nv; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int k = 0; k < 2 * nv; ++k) m[r][k] -= f * m[c][k];
    }
  }
  // columns of E^{-1}
  mpz_class l = 1;
  for (int r = 0; r < nv; ++r)
    for (int c = 0; c < nv; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[r][nv + c].get_den_mpz_t());
  DiagonalSymmetries out;
  out.n = static_cast<int>(l.get_si());
  for (int c = 0; c < nv; ++c) {
    std::vector<int> g(nv);
    for (int r = 0; r < nv; ++r) {
      mpq_class v = m[r][nv + c] * out.n;
      g[r] = mod(mpz_class(v.get_num()).get_si(), out.n);
    }
    if (std::any_of(g.begin(), g.end(), [](int v) { return v != 0; })) out.generators.push_back(g);
  }
  return out;
}

}  // namespace lgorb
