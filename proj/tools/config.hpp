#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgorb/milnor.hpp"

namespace lgorb::cli {

// Contents of a model file:
//
//   [model]
//   nvars = 1
//   order = 3
//   W = x1^3
//   [group]
//   generators = 1
//   [options]
//   local = auto
//   double_field = false
//
// `genus = g` under [model] replaces nvars/order/W/generators with the
// genus-g surface mirror model.
struct ModelConfig {
  int nvars = 0;
  int order = 1;
  std::string w_text;
  std::vector<std::vector<int>> generators;
  LocalMode local = LocalMode::Auto;
  bool double_field = false;
  std::optional<int> genus;

  // Field order used for computations.
  int field_order() const { return double_field ? 2 * order : order; }
};

ModelConfig surface_config(int genus);

// Throws ValidationError with the offending line (and column for W).
ModelConfig parse_config(const std::string& text, const std::string& origin = "config");
ModelConfig load_config(const std::string& path);

// "1,1,3" -> {1, 1, 3}
std::vector<int> parse_vector(const std::string& text);

struct Model {
  MultiPoly w;
  SymmetryGroup group;
};

// Parses W over Q(zeta_{field_order}) and generates G; validates invariance.
Model build_model(const ModelConfig& cfg);

}  // namespace lgorb::cli
