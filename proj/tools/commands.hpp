#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "lgorb/orbifold.hpp"

namespace lgorb::cli {

using Json = nlohmann::ordered_json;

// A command result. `ok` is false when a check suite failed.
struct Outcome {
  Json doc;
  bool ok = true;
};

Json scalar_json(const CycScalar& c, const CyclotomicField* f);
Json class_json(const MilnorClass& c, const CyclotomicField* f);
Json element_json(const TwistedElement& e);

Outcome cmd_sectors(const TwistedAlgebra& a);
Outcome cmd_sigma(const TwistedAlgebra& a, const GroupElement& g, const GroupElement& h);
Outcome cmd_table(const TwistedAlgebra& a, bool invariants_only, bool with_cap);
Outcome cmd_invariants(const TwistedAlgebra& a);
// suite: braided, assoc, unit, equivariance, oracle or all
Outcome cmd_check(const TwistedAlgebra& a, const std::string& suite);
Outcome cmd_oracle(const TwistedAlgebra& a);
Outcome cmd_compare_jac(const ModelConfig& cfg, TwistedOptions opt);
Outcome cmd_surface(int genus, TwistedOptions opt);

std::string render_plain(const Json& doc);
std::string render_latex(const Json& doc);

// Exit codes: 0 success, 1 validation error, 2 computation error, 3 check failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgorb::cli
