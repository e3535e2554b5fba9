#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lgorb/scalars.hpp"

namespace lgorb {

inline constexpr int kMaxVars = 8;

enum class Block : int { X = 0, Y = 1, Z = 2 };

char block_name(Block b);

// Exponents for x_1..x_N, y_1..y_N, z_1..z_N in fixed slots.
struct Monomial {
  std::array<std::uint16_t, 3 * kMaxVars> e{};
  std::uint32_t deg = 0;

  std::uint16_t get(Block b, int i) const { return e[static_cast<int>(b) * kMaxVars + i]; }
  void set(Block b, int i, std::uint16_t v);
  // Bitmask of blocks with a nonzero exponent.
  unsigned blocks() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  std::string to_string(int nvars) const;
};

// Graded reverse lexicographic order, x_1 > ... > x_N > y_1 > ... > z_N.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial m;
  CycScalar c;
};

// Sparse polynomial; terms sorted with the leading monomial first.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int nvars, const CyclotomicField* f) : nvars_(nvars), field_(f) {}

  static MultiPoly constant(int nvars, const CyclotomicField* f, const CycScalar& c);
  static MultiPoly variable(int nvars, const CyclotomicField* f, Block b, int i);
  static MultiPoly monomial(int nvars, const CyclotomicField* f, const Monomial& m, const CycScalar& c);
  // Build from unsorted, possibly repeated terms.
  static MultiPoly from_terms(int nvars, const CyclotomicField* f, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const CyclotomicField* field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  void drop_leading() { terms_.erase(terms_.begin()); }
  unsigned blocks() const;
  int total_degree() const;
  CycScalar coefficient(const Monomial& m) const;
  CycScalar constant_term() const { return coefficient(Monomial{}); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const CycScalar& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // this - c*m*g, merged in one pass.
  void sub_scaled(const CycScalar& c, const Monomial& m, const MultiPoly& g);
  MultiPoly pow(unsigned e) const;
  MultiPoly make_monic() const;
  // Apply fn to every coefficient, dropping zeros.
  MultiPoly map_coeffs(const std::function<CycScalar(const CycScalar&)>& fn) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  const CyclotomicField* field_ = nullptr;
  std::vector<Term> terms_;
};

enum class Transition { XtoXY, YtoYZ, XtoXZ };

// l_i: variables of index < i move from the source block to the target block.
// i is 1-based and ranges over 1..N+1.
MultiPoly l_slice(const MultiPoly& f, int i, Transition t = Transition::XtoXY);

// Difference derivative (l_i f - l_{i+1} f) / (s_i - t_i), i 1-based.
MultiPoly nabla(const MultiPoly& f, int i, Transition t = Transition::XtoXY);

// v_i -> scale_i * w_i for every variable of block `from`, landing in `into`.
MultiPoly substitute_diag(const MultiPoly& f, Block from, const std::vector<CycScalar>& scale, Block into);

// Set x_i = 0 for i in `moving` (0-based indices).
MultiPoly res_fixed(const MultiPoly& f, const std::vector<int>& moving);

// d/dv_i, i 0-based.
MultiPoly partial_derivative(const MultiPoly& f, int i, Block b = Block::X);

// Text grammar: terms joined by + / -, each a product of factors separated by
// '*': an integer, p/q, zeta, zeta^k, or a variable x<i>, y<i>, z<i> with an
// optional ^e. `x`, `y`, `z` alone mean index 1.
MultiPoly parse_poly(const std::string& text, int nvars, const CyclotomicField* f);

}  // namespace lgorb
