#include "lgorb/koszul_oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "lgorb/errors.hpp"
#include "lgorb/linalg.hpp"
#include "lgorb/orbifold.hpp"

namespace lgorb {

namespace {

Mask bit(int i) { return Mask{1} << i; }

MultiPoly on_graph(const MultiPoly& p, const std::vector<CycScalar>& ge) {
  return substitute_diag(p, Block::Y, ge, Block::X);
}

CliffordElement series_term(const std::vector<CliffordElement>& s, std::size_t k, int nvars,
                            const CyclotomicField* f) {
  return k < s.size() ? s[k] : CliffordElement(nvars, f);
}

}  // namespace

SectorComplex sector_complex(const MultiPoly& w, const GroupElement& g) {
  const int n = w.nvars();
  const auto* f = w.field();
  if (!f || f->order() % g.n != 0) throw ConfigError("sector complex needs zeta_" + std::to_string(g.n));
  const auto ge = g.entries(f);
  SectorComplex sc{g, CliffordElement(n, f), CliffordElement(n, f), CliffordElement(n, f), CliffordElement(n, f)};
  const unsigned mov = g.moving_mask();
  for (int i = 0; i < n; ++i) {
    const MultiPoly c = -on_graph(nabla(w, i + 1, Transition::XtoXY), ge);
    if (mov & bit(i)) {
      sc.kos.add_term(0, bit(i), (CycScalar(1) - ge[i]) * MultiPoly::variable(n, f, Block::X, i));
      sc.curv_moving.add_term(bit(i), 0, c);
    } else {
      sc.curv_fixed.add_term(bit(i), 0, c);
    }
    sc.curv.add_term(bit(i), 0, c);
  }
  return sc;
}

ConjugationCheck verify_conjugation(const MultiPoly& w, const GroupElement& g) {
  const int n = w.nvars();
  const auto* f = w.field();
  const SectorComplex sc = sector_complex(w, g);
  const CliffordElement h = h_wg(w, g);
  const auto ep = exp_series(h);
  const auto em = exp_series(-h);

  ConjugationCheck out;
  const std::size_t top = ep.size() + em.size();
  for (std::size_t k = 0; k <= top; ++k) {
    CliffordElement rhs(n, f);
    for (std::size_t a = 0; a <= k; ++a) {
      const CliffordElement left = series_term(ep, a, n, f);
      if (left.is_zero()) continue;
      rhs += cl_mul(cl_mul(left, sc.kos), series_term(em, k - a, n, f));
      if (a + 1 <= k) rhs += cl_mul(cl_mul(left, sc.curv_fixed), series_term(em, k - 1 - a, n, f));
    }
    const CliffordElement lhs = k == 0 ? sc.kos : k == 1 ? sc.curv : CliffordElement(n, f);
    if (!(lhs == rhs)) {
      out.equal = false;
      out.witness = "t^" + std::to_string(k) + ": expected " + lhs.to_string() + ", got " + rhs.to_string();
      return out;
    }
  }
  return out;
}

std::optional<std::vector<mpq_class>> quasi_homogeneous_weights(const MultiPoly& w) {
  const int n = w.nvars();
  // Rows [alpha | 1] in exact rational arithmetic.
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& t : w.terms()) {
    if (t.m.blocks() & ~1u) return std::nullopt;
    std::vector<mpq_class> r(n + 1);
    for (int i = 0; i < n; ++i) r[i] = t.m.get(Block::X, i);
    r[n] = 1;
    rows.push_back(std::move(r));
  }
  std::size_t rk = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < n && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    const mpq_class inv = 1 / rows[rk][c];
    for (auto& v : rows[rk]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || rows[r][c] == 0) continue;
      const mpq_class fac = rows[r][c];
      for (int k = 0; k <= n; ++k) rows[r][k] -= fac * rows[rk][k];
    }
    pivot_col.push_back(c);
    ++rk;
  }
  if (static_cast<int>(rk) != n) return std::nullopt;
  for (std::size_t r = rk; r < rows.size(); ++r)
    if (rows[r][n] != 0) return std::nullopt;
  std::vector<mpq_class> q(n);
  for (std::size_t r = 0; r < rk; ++r) q[pivot_col[r]] = rows[r][n];
  for (const auto& v : q)
    if (v <= 0) return std::nullopt;
  return q;
}

namespace {

struct Cell {
  std::vector<int> alpha;
  Mask k;
  bool operator<(const Cell& o) const { return std::tie(k, alpha) < std::tie(o.k, o.alpha); }
};

// Monomials x^alpha with sum alpha_i c_i <= cap (c_i > 0), or |alpha| <= cap when c is empty.
void enumerate(int i, int n, const std::vector<mpq_class>& c, const mpq_class& room, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; c[i] * e <= room; ++e) {
    cur[i] = e;
    enumerate(i + 1, n, c, room - c[i] * e, cur, out);
  }
  cur[i] = 0;
}

MultiPoly cell_poly(const Cell& cell, int n, const CyclotomicField* f) {
  Monomial m;
  for (int i = 0; i < n; ++i) m.set(Block::X, i, static_cast<std::uint16_t>(cell.alpha[i]));
  return MultiPoly::monomial(n, f, m, CycScalar(1));
}

// D applied to every cell of `from`, written in the coordinates of `index`.
// With `above` >= 0 only target monomials of degree > above are kept.
std::size_t image_rank(const CliffordElement& d, const std::vector<Cell>& from, std::map<Cell, int>& index,
                       int n, const CyclotomicField* f, int above = -1) {
  std::vector<SparseRow> rows;
  rows.reserve(from.size());
  for (const auto& cell : from) {
    const auto v = act_on_dtheta(d, CliffordElement::basis(n, f, 0, cell.k, cell_poly(cell, n, f)));
    SparseRow row;
    for (const auto& [key, coeff] : v.terms()) {
      for (const auto& t : coeff.terms()) {
        Cell target{std::vector<int>(n), key.second};
        for (int i = 0; i < n; ++i) target.alpha[i] = t.m.get(Block::X, i);
        if (above >= 0 && static_cast<int>(t.m.deg) <= above) continue;
        auto [it, fresh] = index.try_emplace(target, static_cast<int>(index.size()));
        row[it->second] += t.c;
      }
    }
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

}  // namespace

SectorDimensions sector_dimension_oracle(const MultiPoly& w, const GroupElement& g, int truncation) {
  const int n = w.nvars();
  const auto* f = w.field();
  const CliffordElement d = sector_complex(w, g).total();
  const unsigned mov = g.moving_mask();
  SectorDimensions out;
  std::map<Cell, int> index;

  if (auto q = quasi_homogeneous_weights(w); q && truncation == 0) {
    // wt(x_i) = q_i, wt(dtheta_i) = 1/2 - q_i, D has weight 1/2.
    mpq_class bound = 0;
    for (int i = 0; i < n; ++i) bound += (mov & bit(i)) ? mpq_class(mpq_class(1, 2) - (*q)[i]) : mpq_class(1 - 2 * (*q)[i]);
    const mpq_class cap = bound + 1;
    std::vector<mpq_class> kw(Mask{1} << n);
    for (Mask k = 0; k < kw.size(); ++k)
      for (int i = 0; i < n; ++i)
        if (k & bit(i)) kw[k] += mpq_class(1, 2) - (*q)[i];

    // (weight, parity) -> cells
    std::map<std::pair<mpq_class, int>, std::vector<Cell>> pieces;
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur(n, 0);
    mpq_class min_kw = 0;
    for (const auto& v : kw) min_kw = std::min(min_kw, v);
    enumerate(0, n, *q, cap - min_kw, cur, alphas);
    for (const auto& a : alphas) {
      mpq_class aw = 0;
      for (int i = 0; i < n; ++i) aw += (*q)[i] * a[i];
      for (Mask k = 0; k < kw.size(); ++k) {
        const mpq_class wt = aw + kw[k];
        if (wt <= cap) pieces[{wt, popcount(k) % 2}].push_back(Cell{a, k});
      }
    }
    std::map<std::pair<mpq_class, int>, std::size_t> rk;
    for (const auto& [key, cells] : pieces) rk[key] = image_rank(d, cells, index, n, f);
    out.exact = true;
    out.certified = true;
    for (const auto& [key, cells] : pieces) {
      const auto& [wt, p] = key;
      auto prev = rk.find({wt - mpq_class(1, 2), 1 - p});
      const std::size_t h = cells.size() - rk[key] - (prev == rk.end() ? 0 : prev->second);
      if (h == 0) continue;
      if (wt > bound) {
        out.certified = false;
        continue;
      }
      (p == 0 ? out.even : out.odd) += h;
    }
    return out;
  }

  // Heuristic: truncate by polynomial degree. Cocycles of degree <= d are
  // compared against boundaries of chains up to the truncation degree that
  // land in degree <= d; readings are taken over the middle third.
  const int top = truncation > 0 ? truncation : 3 * w.total_degree();
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur(n, 0);
  enumerate(0, n, std::vector<mpq_class>(n, 1), top, cur, alphas);
  auto upto = [&](int dd, int p) {
    std::vector<Cell> cells;
    for (const auto& a : alphas) {
      int s = 0;
      for (int v : a) s += v;
      if (s > dd) continue;
      for (Mask k = 0; k < (Mask{1} << n); ++k)
        if (popcount(k) % 2 == p) cells.push_back(Cell{a, k});
    }
    return cells;
  };
  const std::vector<Cell> all[2] = {upto(top, 0), upto(top, 1)};
  const std::size_t all_rank[2] = {image_rank(d, all[0], index, n, f), image_rank(d, all[1], index, n, f)};
  for (int dd = top / 3; dd <= (2 * top) / 3; ++dd) {
    std::size_t h[2];
    for (int p = 0; p < 2; ++p) {
      const auto cells = upto(dd, p);
      const std::size_t cocycles = cells.size() - image_rank(d, cells, index, n, f);
      const std::size_t boundaries = all_rank[1 - p] - image_rank(d, all[1 - p], index, n, f, dd);
      h[p] = cocycles - boundaries;
    }
    out.readings.push_back(h[0] + h[1]);
    out.even = h[0];
    out.odd = h[1];
  }
  out.stabilized = !out.readings.empty() &&
                   std::all_of(out.readings.begin(), out.readings.end(), [&](std::size_t r) { return r == out.readings[0]; });
  return out;
}

MilnorClass chain_cup_oracle(const MultiPoly& w, const GroupElement& g, const GroupElement& h,
                             const MilnorAlgebra& alg_gh) {
  const int n = w.nvars();
  const auto* f = w.field();
  const GroupElement gh = g * h;
  const auto ge = g.entries(f);
  auto closed = [&](const GroupElement& k, const CliffordElement& v) {
    return act_on_dtheta(sector_complex(w, k).total(), v).is_zero();
  };

  const CliffordElement q1 = act_on_dtheta(exp_nilpotent(h_wg(w, g)), CliffordElement::basis(n, f, 0, g.moving_mask()));
  CliffordElement q2 = act_on_dtheta(exp_nilpotent(h_wg(w, h)), CliffordElement::basis(n, f, 0, h.moving_mask()));
  if (!closed(g, q1) || !closed(h, q2))
    throw ComputationError("sector generator is not closed under the twisted differential");
  q2 = q2.map_coeffs([&](const MultiPoly& p) { return substitute_diag(p, Block::X, ge, Block::X); });

  const BiThetaElement e = exp_nilpotent(restrict_h_w(h_w(w), g, gh));
  const CliffordElement prod = upsilon(e, q1, q2);
  if (!closed(gh, prod)) throw ComputationError("representative left the expected subspace");
  const CliffordElement r = act_on_dtheta(exp_nilpotent(-h_wg(w, gh)), prod);
  return alg_gh.class_of(r.coefficient(0, gh.moving_mask()));
}

}  // namespace lgorb
