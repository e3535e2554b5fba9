#include "lgorb/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lgorb/errors.hpp"

namespace lgorb {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.e.size(); ++k)
    if (a.e[k] && b.e[k]) return false;
  return true;
}

const MultiPoly* find_divisor(const std::vector<const MultiPoly*>& basis, const Monomial& m) {
  for (const auto* g : basis)
    if (g->leading().m.divides(m)) return g;
  return nullptr;
}

// Full reduction against monic polynomials.
MultiPoly reduce_full(MultiPoly p, const std::vector<const MultiPoly*>& basis, int nvars,
                      const CyclotomicField* f) {
  std::vector<Term> rem;  // collected in decreasing order
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    if (const MultiPoly* g = find_divisor(basis, lt.m)) {
      CycScalar c = lt.c;
      Monomial q = lt.m / g->leading().m;
      p.sub_scaled(c, q, *g);
    } else {
      rem.push_back(lt);
      p.drop_leading();
    }
  }
  return MultiPoly::from_terms(nvars, f, std::move(rem));
}

MultiPoly spoly(const MultiPoly& a, const MultiPoly& b) {
  Monomial l = Monomial::lcm(a.leading().m, b.leading().m);
  MultiPoly r = MultiPoly::monomial(a.nvars(), a.field(), l / a.leading().m, CycScalar(a.field(), 1)) * a;
  r.sub_scaled(CycScalar(a.field(), 1), l / b.leading().m, b);
  return r;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

MultiPoly GroebnerBasis::normal_form(const MultiPoly& f) const {
  std::vector<const MultiPoly*> basis;
  for (const auto& g : gens_) basis.push_back(&g);
  return reduce_full(f, basis, std::max(nvars_, f.nvars()), field_ ? field_ : f.field());
}

bool GroebnerBasis::is_zero_dimensional() const {
  for (int i = 0; i < nvars_; ++i) {
    bool found = false;
    for (const auto& g : gens_) {
      const Monomial& m = g.leading().m;
      if (m.get(Block::X, i) > 0 && m.get(Block::X, i) == m.deg) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> GroebnerBasis::quotient_basis() const {
  if (!is_zero_dimensional()) throw ComputationError("non-isolated critical locus");
  std::vector<Monomial> out;
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& g : gens_)
      if (g.leading().m.divides(m)) return true;
    return false;
  };
  if (in_ideal(Monomial{})) return out;
  std::vector<Monomial> frontier{Monomial{}};
  std::set<std::vector<std::uint16_t>> seen;
  auto key = [](const Monomial& m) { return std::vector<std::uint16_t>(m.e.begin(), m.e.end()); };
  seen.insert(key(Monomial{}));
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      out.push_back(m);
      for (int i = 0; i < nvars_; ++i) {
        Monomial n = m;
        n.set(Block::X, i, m.get(Block::X, i) + 1);
        if (in_ideal(n) || !seen.insert(key(n)).second) continue;
        next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); });
  return out;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens) {
  int n = 0;
  const CyclotomicField* f = nullptr;
  for (const auto& g : gens) {
    n = std::max(n, g.nvars());
    if (!f) f = g.field();
  }
  return buchberger(n, f, gens);
}

GroebnerBasis buchberger(int nvars, const CyclotomicField* field, const std::vector<MultiPoly>& input) {
  std::vector<MultiPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_ptrs = [&]() {
    std::vector<const MultiPoly*> v;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) v.push_back(&polys[k]);
    return v;
  };

  // Gebauer-Moeller update with a new monic polynomial h.
  auto add = [&](MultiPoly h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = polys[hi].leading().m;

    // C: new pairs; scan them in order, keeping p if its lcm is not divisible
    // by the lcm of a pair still waiting in C or already kept in D.
    std::vector<Pair> c;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) c.push_back({k, hi, Monomial::lcm(polys[k].leading().m, lh)});
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = coprime(polys[c[a].i].leading().m, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) keep = !c[b].lcm.divides(c[a].lcm);
        for (const auto& q : d)
          if (keep && q.lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    std::vector<Pair> fresh;
    for (const auto& p : d)
      if (!coprime(polys[p.i].leading().m, lh)) fresh.push_back(p);

    std::vector<Pair> old;
    for (const auto& p : pairs) {
      const bool kill = lh.divides(p.lcm) && Monomial::lcm(polys[p.i].leading().m, lh) != p.lcm &&
                        Monomial::lcm(polys[p.j].leading().m, lh) != p.lcm;
      if (!kill) old.push_back(p);
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());

    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && lh.divides(polys[k].leading().m)) active[k] = false;
  };

  for (const auto& g : input) {
    MultiPoly r = reduce_full(g, active_ptrs(), nvars, field);
    if (r.is_zero()) continue;
    add(r.make_monic());
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [](const Pair& a, const Pair& b) { return grevlex_greater(b.lcm, a.lcm); });
    Pair p = *it;
    pairs.erase(it);
    MultiPoly r = reduce_full(spoly(polys[p.i], polys[p.j]), active_ptrs(), nvars, field);
    if (r.is_zero()) continue;
    add(r.make_monic());
  }

  // minimal basis, then inter-reduce
  std::vector<MultiPoly> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::sort(minimal.begin(), minimal.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return grevlex_greater(b.leading().m, a.leading().m); });
  std::vector<MultiPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const MultiPoly*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(&minimal[l]);
    // tail reduction: leading term is not divisible by the others in a minimal basis
    MultiPoly tail = MultiPoly::from_terms(nvars, field,
                                           std::vector<Term>(minimal[k].terms().begin() + 1, minimal[k].terms().end()));
    MultiPoly r = MultiPoly::monomial(nvars, field, minimal[k].leading().m, minimal[k].leading().c) +
                  reduce_full(tail, others, nvars, field);
    reduced.push_back(r.make_monic());
  }
  return GroebnerBasis(nvars, field, std::move(reduced));
}

std::vector<MultiPoly> monomials_of_degree(int nvars, const CyclotomicField* f, int d) {
  std::vector<MultiPoly> out;
  std::vector<int> e(nvars, 0);
  // enumerate compositions of d into nvars parts
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      Monomial m;
      for (int k = 0; k < nvars; ++k) m.set(Block::X, k, static_cast<std::uint16_t>(e[k]));
      out.push_back(MultiPoly::monomial(nvars, f, m, CycScalar(f, 1)));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (nvars > 0) rec(0, d);
  return out;
}

LocalQuotient local_quotient_at_origin(int nvars, const CyclotomicField* f, const std::vector<MultiPoly>& gens,
                                       int d_max) {
  std::size_t prev = 0;
  GroebnerBasis prev_gb;
  for (int d = 1; d <= d_max + 1; ++d) {
    std::vector<MultiPoly> all = gens;
    auto pad = monomials_of_degree(nvars, f, d);
    all.insert(all.end(), pad.begin(), pad.end());
    GroebnerBasis gb = buchberger(nvars, f, all);
    const std::size_t dim = gb.quotient_basis().size();
    if (d > 1 && dim == prev) return {prev_gb, d - 1};
    prev = dim;
    prev_gb = std::move(gb);
  }
  std::ostringstream os;
  os << "local quotient did not stabilize up to degree " << d_max << " (last dimension " << prev << ")";
  throw ComputationError(os.str());
}

}  // namespace lgorb
