#include "lgorb/btw_jacobian.hpp"

#include <optional>
#include <sstream>

#include "lgorb/errors.hpp"
#include "parallel.hpp"

namespace lgorb {

std::string to_string(AtomicType t) {
  switch (t) {
    case AtomicType::Fermat: return "fermat";
    case AtomicType::Chain: return "chain";
    case AtomicType::Loop: return "loop";
  }
  return "?";
}

std::string AtomicBlock::to_string() const {
  std::ostringstream os;
  os << lgorb::to_string(type) << "(";
  for (std::size_t k = 0; k < exponents.size(); ++k) os << (k ? "," : "") << exponents[k];
  os << ")";
  return os.str();
}

std::vector<AtomicBlock> atomic_decompose(const MultiPoly& w) {
  const int n = w.nvars();
  const ValidationError bad("W is not an invertible polynomial");
  if (static_cast<int>(w.size()) != n || n == 0) throw bad;

  std::vector<int> owner_exp(n, 0), next(n, -1), indeg(n, 0);
  for (const auto& t : w.terms()) {
    if (t.m.blocks() != 1u) throw bad;
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if (t.m.get(Block::X, i)) vars.push_back(i);
    int own = -1, to = -1;
    if (vars.size() == 1) {
      own = vars[0];
    } else if (vars.size() == 2) {
      const int e0 = t.m.get(Block::X, vars[0]), e1 = t.m.get(Block::X, vars[1]);
      if (e0 >= 2 && e1 == 1) own = vars[0], to = vars[1];
      else if (e1 >= 2 && e0 == 1) own = vars[1], to = vars[0];
    }
    if (own < 0 || t.m.get(Block::X, own) < 2 || owner_exp[own] != 0) throw bad;
    owner_exp[own] = t.m.get(Block::X, own);
    next[own] = to;
    if (to >= 0 && ++indeg[to] > 1) throw bad;
  }

  std::vector<AtomicBlock> out;
  std::vector<bool> seen(n, false);
  for (int head = 0; head < n; ++head) {
    if (indeg[head] != 0) continue;
    AtomicBlock b{AtomicType::Chain, {}, {}};
    for (int v = head; v >= 0; v = next[v]) {
      seen[v] = true;
      b.vars.push_back(v);
      b.exponents.push_back(owner_exp[v]);
    }
    if (b.vars.size() == 1) b.type = AtomicType::Fermat;
    out.push_back(b);
  }
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    AtomicBlock b{AtomicType::Loop, {}, {}};
    int v = start;
    do {
      if (v < 0 || seen[v]) throw bad;
      seen[v] = true;
      b.vars.push_back(v);
      b.exponents.push_back(owner_exp[v]);
      v = next[v];
    } while (v != start);
    out.push_back(b);
  }
  return out;
}

namespace {

MultiPoly det(const std::vector<std::vector<MultiPoly>>& m, int nvars, const CyclotomicField* f) {
  const std::size_t k = m.size();
  if (k == 0) return MultiPoly::constant(nvars, f, CycScalar(1));
  if (k == 1) return m[0][0];
  MultiPoly acc(nvars, f);
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t q = 0; q < k; ++q)
        if (q != c) row.push_back(m[r][q]);
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][c] * det(minor, nvars, f);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace

MultiPoly hessian_minor(const MultiPoly& w, const std::vector<int>& idx) {
  std::vector<std::vector<MultiPoly>> h;
  for (int i : idx) {
    std::vector<MultiPoly> row;
    const MultiPoly di = partial_derivative(w, i);
    for (int j : idx) row.push_back(partial_derivative(di, j));
    h.push_back(std::move(row));
  }
  return det(h, w.nvars(), w.field());
}

JacPrimeAlgebra::JacPrimeAlgebra(const MultiPoly& w, const SymmetryGroup& group, TwistedOptions opt)
    : w_(w), group_(group), blocks_(atomic_decompose(w)) {
  const int n = group_.modulus();
  if (!w_.field() || w_.field()->order() % (2 * n) != 0)
    throw ConfigError("the twisted Jacobian algebra needs zeta_" + std::to_string(2 * n) +
                      " in the coefficient field (enable field doubling)");
  for (const auto& g : group_.elements()) check_invariance(g, w_);

  const std::size_t m = group_.size();
  algs_.resize(m);
  detail::parallel_for(m, opt.jobs, [&](std::size_t i) {
    algs_[i] = std::make_shared<const MilnorAlgebra>(w_, group_[i], opt.local, opt.d_max);
  });
  sigma_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = group_.mul(i, j);
      const auto& alg = *algs_[k];
      if (i == 0 || j == 0) {
        sigma_[i * m + j] = alg.unit();
      } else if (k == 0) {
        const MultiPoly hess = hessian_minor(w_, group_[i].moving());
        sigma_[i * m + j] = alg.class_of(age_factor(i) * hess);
      } else {
        sigma_[i * m + j] = alg.zero();
      }
    }
}

CycScalar JacPrimeAlgebra::age_factor(std::size_t i) const {
  // age(g) * n = sum of exponents, so e^{-pi i age} = zeta_{2n}^{-sum}
  const auto& g = group_[i];
  long s = 0;
  for (int a : g.a) s += a;
  return zeta_power_in(w_.field(), -s, 2 * g.n);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IsomorphicViaRescaling: return "isomorphic_via_rescaling";
    case Verdict::VanishingMismatch: return "vanishing_mismatch";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// c with a = c * b, if it exists and b != 0.
std::optional<CycScalar> ratio(const MilnorClass& a, const MilnorClass& b) {
  std::optional<CycScalar> r;
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
    if (b.coeffs[k].is_zero()) continue;
    r = a.coeffs[k] / b.coeffs[k];
    break;
  }
  if (!r) return std::nullopt;
  for (std::size_t k = 0; k < b.coeffs.size(); ++k)
    if (a.coeffs[k] != *r * b.coeffs[k]) return std::nullopt;
  return r;
}

}  // namespace

Comparison compare(const TwistedAlgebra& m, const JacPrimeAlgebra& j) {
  if (m.potential() != j.potential() || m.group().elements() != j.group().elements())
    throw ValidationError("compared algebras have different potentials or groups");
  const std::size_t s = m.size();
  for (std::size_t i = 0; i < s; ++i)
    if (m.algebra(i).dim() != j.algebra(i).dim())
      throw ValidationError("sector " + m.group()[i].to_string() + " has different dimensions");

  Comparison out;
  auto pair_name = [&](std::size_t a, std::size_t b) {
    return "(" + m.group()[a].to_string() + ", " + m.group()[b].to_string() + ")";
  };
  bool richer = false;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const bool zm = m.sigma(a, b).is_zero(), zj = j.sigma(a, b).is_zero();
      if (zm != zj) {
        out.verdict = Verdict::VanishingMismatch;
        out.witness = "sigma" + pair_name(a, b) + (zm ? " vanishes" : " is nonzero") + " but sigma'" +
                      (zj ? " vanishes" : " does not");
        return out;
      }
      if (!zm && a != 0 && b != 0 && m.group().mul(a, b) != 0) richer = true;
    }
  if (richer) {
    out.witness = "nonzero structure constants outside unit and inverse pairs";
    return out;
  }
  for (std::size_t a = 1; a < s; ++a) {
    const std::size_t b = m.group().inverse(a);
    if (!(m.sigma(0, a) == m.algebra(a).unit()) || !(m.sigma(a, 0) == m.algebra(a).unit()) ||
        !(j.sigma(0, a) == j.algebra(a).unit()) || !(j.sigma(a, 0) == j.algebra(a).unit())) {
      out.witness = "unit constants differ from 1 at " + m.group()[a].to_string();
      return out;
    }
    auto r = ratio(m.sigma(a, b), j.sigma(a, b));
    if (!r) {
      out.witness = "sigma" + pair_name(a, b) + " is not a scalar multiple of sigma'";
      return out;
    }
    out.alpha[a] = *r;
  }
  for (const auto& [a, r] : out.alpha) {
    const std::size_t b = m.group().inverse(a);
    if (out.alpha.at(b) != r) {
      out.witness = "alpha differs between " + m.group()[a].to_string() + " and its inverse";
      out.alpha.clear();
      return out;
    }
  }
  out.verdict = Verdict::IsomorphicViaRescaling;
  return out;
}

}  // namespace lgorb
