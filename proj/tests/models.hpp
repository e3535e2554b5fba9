#pragma once

// Regression models shared by the unit tests and the acceptance binary.

#include <string>

#include "lgorb/orbifold.hpp"

namespace models {

using namespace lgorb;

struct Model {
  std::string name;
  MultiPoly w;
  SymmetryGroup group;
};

// `mult` scales the field order; 2 gives room for e^{-pi i age}.
inline Model cube(int mult = 1) {
  const auto* f = CyclotomicField::get(3 * mult);
  auto w = parse_poly("x1^3", 1, f);
  return {"x^3/Z3", w, generate_group({{1}}, 3, w)};
}

inline Model fermat_pair(int mult = 1) {
  const auto* f = CyclotomicField::get(3 * mult);
  auto w = parse_poly("x1^3 + x2^3", 2, f);
  return {"x^3+y^3/Z3xZ3", w, generate_group({{1, 0}, {0, 1}}, 3, w)};
}

inline MultiPoly chain_poly(int a1, int a2, const CyclotomicField* f) {
  return parse_poly("x1^" + std::to_string(a1) + "*x2 + x2^" + std::to_string(a2), 2, f);
}

// Chain x1^a1 x2 + x2^a2 with its maximal diagonal group.
inline Model chain(int a1, int a2, int mult = 1) {
  auto sym = maximal_diagonal_symmetries(chain_poly(a1, a2, CyclotomicField::get(1)));
  auto w = chain_poly(a1, a2, CyclotomicField::get(sym.n * mult));
  return {"chain(" + std::to_string(a1) + "," + std::to_string(a2) + ")", w, generate_group(sym.generators, sym.n, w)};
}

inline Model loop(int a1, int a2, int mult = 1) {
  const std::string text = "x1^" + std::to_string(a1) + "*x2 + x2^" + std::to_string(a2) + "*x1";
  auto sym = maximal_diagonal_symmetries(parse_poly(text, 2, CyclotomicField::get(1)));
  auto w = parse_poly(text, 2, CyclotomicField::get(sym.n * mult));
  return {"loop(" + std::to_string(a1) + "," + std::to_string(a2) + ")", w, generate_group(sym.generators, sym.n, w)};
}

inline MultiPoly surface_poly(int genus, const CyclotomicField* f) {
  const std::string e = std::to_string(2 * genus + 1);
  return parse_poly("x1^" + e + " + x2^" + e + " + x3^" + e + " - x1*x2*x3", 3, f);
}

// The genus-g mirror model with G generated by (zeta, zeta, zeta^-2).
inline Model surface(int genus) {
  const int n = 2 * genus + 1;
  auto w = surface_poly(genus, CyclotomicField::get(n));
  return {"surface(" + std::to_string(genus) + ")", w, generate_group({{1, 1, n - 2}}, n, w)};
}

inline GroupElement surface_gen(int genus, int k) {
  const int n = 2 * genus + 1;
  return GroupElement{{1, 1, n - 2}, n}.pow(k);
}

inline std::unique_ptr<TwistedAlgebra> build(const Model& m, int jobs = 0) {
  TwistedOptions opt;
  opt.jobs = jobs;
  return std::make_unique<TwistedAlgebra>(m.w, m.group, opt);
}

}  // namespace models
