#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lgorb/clifford.hpp"
#include "lgorb/milnor.hpp"

namespace lgorb {

// Twisted Koszul differentials of the g-sector on K[X][dtheta].
struct SectorComplex {
  GroupElement g;
  CliffordElement kos;          // sum_{i in I_g} (1 - g_i) x_i dtheta_i
  CliffordElement curv;         // -sum_i nabla_i W(x, g(x)) theta_i
  CliffordElement curv_moving;  // i in I_g
  CliffordElement curv_fixed;   // i in I^g

  CliffordElement total() const { return kos + curv; }
};

SectorComplex sector_complex(const MultiPoly& w, const GroupElement& g);

struct ConjugationCheck {
  bool equal = true;
  std::string witness;
};

// kos + t curv == e^{tH} (kos + t curv'') e^{-tH} with H = H_{W,g}, compared
// coefficient by coefficient in t.
ConjugationCheck verify_conjugation(const MultiPoly& w, const GroupElement& g);

// Positive rational weights with W quasi-homogeneous of weight 1, if they exist
// and are unique.
std::optional<std::vector<mpq_class>> quasi_homogeneous_weights(const MultiPoly& w);

struct SectorDimensions {
  std::size_t even = 0;
  std::size_t odd = 0;
  // Weight-graded computation; `certified` means every weight piece above the
  // socle bound was checked to be acyclic.
  bool exact = false;
  bool certified = false;
  // Heuristic mode: the middle-range readings agreed.
  bool stabilized = false;
  std::vector<std::size_t> readings;

  std::size_t total() const { return even + odd; }
};

// Cohomology of kos + curv (t = 1) on K[X] (x) K[dtheta]. `truncation` is the
// polynomial degree bound for heuristic mode (0: three times deg W).
SectorDimensions sector_dimension_oracle(const MultiPoly& w, const GroupElement& g, int truncation = 0);

// sigma_{g,h} by the chain-level route: Upsilon of e^{H_W(x, g(x), gh(x))}
// against e^{H_{W,g}} dtheta_{I_g} and g(e^{H_{W,h}} dtheta_{I_h}), then
// e^{-H_{W,gh}}, then the dtheta_{I_gh} coefficient reduced in M(W^gh).
// Throws ComputationError if an intermediate representative is not closed.
MilnorClass chain_cup_oracle(const MultiPoly& w, const GroupElement& g, const GroupElement& h,
                             const MilnorAlgebra& alg_gh);

}  // namespace lgorb
