#include "lgorb/milnor.hpp"

#include <sstream>

#include "lgorb/errors.hpp"

namespace lgorb {

LocalMode parse_local_mode(const std::string& s) {
  if (s == "auto") return LocalMode::Auto;
  if (s == "on") return LocalMode::On;
  if (s == "off") return LocalMode::Off;
  throw ConfigError("local must be auto, on or off (got '" + s + "')");
}

std::string to_string(LocalMode m) {
  switch (m) {
    case LocalMode::Auto: return "auto";
    case LocalMode::On: return "on";
    case LocalMode::Off: return "off";
  }
  return "?";
}

bool MilnorClass::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

// Every fixed variable is nilpotent in the quotient, so it is supported at 0.
bool supported_at_origin(const GroebnerBasis& gb, const std::vector<int>& fixed, std::size_t mu) {
  for (int i : fixed) {
    Monomial m;
    m.set(Block::X, i, static_cast<std::uint16_t>(mu));
    if (!gb.contains(MultiPoly::monomial(gb.nvars(), gb.field(), m, CycScalar(1)))) return false;
  }
  return true;
}

}  // namespace

MilnorAlgebra::MilnorAlgebra(const MultiPoly& w, const GroupElement& g, LocalMode mode, int d_max)
    : nvars_(w.nvars()), field_(w.field()), g_(g) {
  const auto moving = g.moving();
  const auto fixed = g.fixed();
  const MultiPoly wg = res_fixed(w, moving);
  std::vector<MultiPoly> gens;
  for (int i : moving) gens.push_back(MultiPoly::variable(nvars_, field_, Block::X, i));
  for (int i : fixed) gens.push_back(partial_derivative(wg, i));
  if (d_max <= 0) d_max = 4 * std::max(1, w.total_degree());

  const std::string where = "non-isolated singularity in sector " + g.to_string();
  auto go_local = [&]() {
    try {
      auto lq = local_quotient_at_origin(nvars_, field_, gens, d_max);
      gb_ = std::move(lq.gb);
      local_degree_ = lq.degree;
      local_ = true;
    } catch (const ComputationError& e) {
      throw ComputationError(where + ": " + e.what());
    }
  };

  if (mode == LocalMode::On) {
    go_local();
  } else {
    gb_ = buchberger(nvars_, field_, gens);
    const bool finite = gb_.is_zero_dimensional();
    if (mode == LocalMode::Off) {
      if (!finite) throw ComputationError(where);
    } else if (!finite || !supported_at_origin(gb_, fixed, gb_.quotient_basis().size())) {
      go_local();
    }
  }
  basis_ = gb_.quotient_basis();
}

MilnorAlgebra build_sector_algebra(const MultiPoly& w, const GroupElement& g, LocalMode mode, int d_max) {
  return MilnorAlgebra(w, g, mode, d_max);
}

MilnorClass MilnorAlgebra::zero() const { return MilnorClass{this, std::vector<CycScalar>(basis_.size())}; }

MilnorClass MilnorAlgebra::class_of(const MultiPoly& f) const {
  MultiPoly nf = reduce(f);
  MilnorClass c = zero();
  for (const auto& t : nf.terms()) {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k] == t.m) {
        c.coeffs[k] = t.c;
        break;
      }
  }
  return c;
}

MultiPoly MilnorAlgebra::to_poly(const MilnorClass& c) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!c.coeffs[k].is_zero()) terms.push_back({basis_[k], c.coeffs[k]});
  return MultiPoly::from_terms(nvars_, field_, std::move(terms));
}

MilnorClass MilnorAlgebra::mul(const MilnorClass& a, const MilnorClass& b) const {
  return class_of(to_poly(a) * to_poly(b));
}

std::string MilnorAlgebra::to_string(const MilnorClass& c) const { return to_poly(c).to_string(); }

MilnorClass g_act(const GroupElement& h, const MilnorClass& c) {
  MilnorClass r = c;
  const auto* f = c.alg->field();
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
    if (r.coeffs[k].is_zero()) continue;
    r.coeffs[k] *= zeta_power_in(f, h.character_exponent(c.alg->basis()[k]), h.n);
  }
  return r;
}

}  // namespace lgorb
