#pragma once

// Independent floating-point oracles: evaluate exact objects under the complex
// embedding zeta_n -> exp(2*pi*i/n). Used only to cross-check derived values.

#include <complex>
#include <cmath>
#include <numbers>

#include "lgorb/poly.hpp"
#include "lgorb/scalars.hpp"

namespace oracle {

inline std::complex<double> embed(const lgorb::CycScalar& a) {
  const int n = a.order();
  std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / n);
  std::complex<double> acc = 0, p = 1;
  for (const auto& c : a.coeffs()) {
    acc += c.get_d() * p;
    p *= z;
  }
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) < tol * (1 + std::abs(a) + std::abs(b));
}

inline std::complex<double> root(int n, long k = 1) { return std::polar(1.0, 2 * std::numbers::pi * k / n); }

// Evaluate a polynomial at complex points for x, y, z blocks.
inline std::complex<double> eval(const lgorb::MultiPoly& f, const std::vector<std::complex<double>>& x,
                                 const std::vector<std::complex<double>>& y = {},
                                 const std::vector<std::complex<double>>& z = {}) {
  std::complex<double> acc = 0;
  for (const auto& t : f.terms()) {
    std::complex<double> v = embed(t.c);
    for (int i = 0; i < f.nvars(); ++i) {
      if (auto e = t.m.get(lgorb::Block::X, i)) v *= std::pow(x.at(i), e);
      if (auto e = t.m.get(lgorb::Block::Y, i)) v *= std::pow(y.at(i), e);
      if (auto e = t.m.get(lgorb::Block::Z, i)) v *= std::pow(z.at(i), e);
    }
    acc += v;
  }
  return acc;
}

}  // namespace oracle
