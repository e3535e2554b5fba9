#include "commands.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lgorb/btw_jacobian.hpp"
#include "lgorb/errors.hpp"
#include "lgorb/koszul_oracle.hpp"

namespace lgorb::cli {

namespace {

Json group_json(const GroupElement& g) { return Json(g.a); }

std::string mpq_text(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json model_json(const TwistedAlgebra& a) {
  Json m;
  m["W"] = a.potential().to_string();
  m["nvars"] = a.nvars();
  m["order"] = a.group().modulus();
  m["field_order"] = a.field()->order();
  m["group_size"] = a.size();
  return m;
}

Json check_json(const CheckResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"witness", r.witness}};
}

std::size_t sector_index(const TwistedAlgebra& a, const GroupElement& g) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.group()[i] == g) return i;
  throw ValidationError(g.to_string() + " is not in the group");
}

std::string parity_name(int p) { return p ? "odd" : "even"; }

Json sigma_entry(const TwistedAlgebra& a, std::size_t i, std::size_t j) {
  const std::size_t k = a.group().mul(i, j);
  Json e;
  e["g"] = group_json(a.group()[i]);
  e["h"] = group_json(a.group()[j]);
  e["gh"] = group_json(a.group()[k]);
  const auto t = a.t_exponent(i, j);
  e["t"] = t ? Json(*t) : Json(nullptr);
  e["sigma"] = class_json(a.sigma(i, j), a.field());
  e["text"] = a.algebra(k).to_string(a.sigma(i, j));
  return e;
}

// Oracle results as three check records.
std::vector<CheckResult> oracle_checks(const TwistedAlgebra& a, Json* detail) {
  const auto& w = a.potential();
  CheckResult conj{"oracle_conjugation", true, 0, {}};
  CheckResult cup{"oracle_chain_cup", true, 0, {}};
  CheckResult dims{"oracle_dimensions", true, 0, {}};
  const bool qh = quasi_homogeneous_weights(w).has_value();
  Json sectors = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& g = a.group()[i];
    Json s;
    s["g"] = group_json(g);
    auto c = verify_conjugation(w, g);
    ++conj.cases;
    s["conjugation"] = c.equal;
    if (!c.equal && conj.passed) conj.passed = false, conj.witness = g.to_string() + ": " + c.witness;
    if (qh) {
      auto d = sector_dimension_oracle(w, g);
      ++dims.cases;
      const bool match = d.certified && d.total() == a.algebra(i).dim();
      s["koszul_dims"] = Json{{"even", d.even}, {"odd", d.odd}, {"certified", d.certified}};
      s["milnor_dim"] = a.algebra(i).dim();
      if (!match && dims.passed)
        dims.passed = false, dims.witness = g.to_string() + ": Koszul cohomology " + std::to_string(d.total()) +
                                            " vs dim M(W^g) " + std::to_string(a.algebra(i).dim());
    }
    sectors.push_back(std::move(s));
  }
  if (!qh) dims.witness = "skipped: W is not quasi-homogeneous";
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      ++cup.cases;
      const auto& alg = a.algebra(a.group().mul(i, j));
      std::string bad;
      try {
        const auto r = chain_cup_oracle(w, a.group()[i], a.group()[j], alg);
        if (!(r == a.sigma(i, j))) bad = "chain route gives " + alg.to_string(r) + ", table has " + alg.to_string(a.sigma(i, j));
      } catch (const ComputationError& e) {
        bad = e.what();
      }
      if (!bad.empty() && cup.passed)
        cup.passed = false, cup.witness = "(" + a.group()[i].to_string() + ", " + a.group()[j].to_string() + "): " + bad;
    }
  if (detail) *detail = std::move(sectors);
  return {conj, cup, dims};
}

}  // namespace

Json scalar_json(const CycScalar& c, const CyclotomicField* f) {
  Json coeffs = Json::array();
  for (int k = 0; k < f->degree(); ++k) coeffs.push_back(mpq_text(c.coeff(k)));
  return Json{{"order", f->order()}, {"coeffs", coeffs}};
}

Json class_json(const MilnorClass& c, const CyclotomicField* f) {
  Json out = Json::array();
  for (const auto& x : c.coeffs) out.push_back(scalar_json(x, f));
  return out;
}

Json element_json(const TwistedElement& e) {
  const auto* a = e.algebra();
  Json out = Json::array();
  for (const auto& [key, cls] : e.terms()) {
    out.push_back(Json{{"sector", group_json(a->group()[key.first])},
                       {"t", key.second},
                       {"class", class_json(cls, a->field())},
                       {"text", a->algebra(key.first).to_string(cls)}});
  }
  return out;
}

Outcome cmd_sectors(const TwistedAlgebra& a) {
  Outcome o;
  o.doc["command"] = "sectors";
  o.doc["model"] = model_json(a);
  Json list = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& s = a.sector(i);
    Json basis = Json::array();
    for (const auto& m : a.algebra(i).basis()) basis.push_back(m.deg ? m.to_string(a.nvars()) : "1");
    list.push_back(Json{{"g", group_json(s.g)},
                        {"fixed", s.fixed_set},
                        {"d", s.d},
                        {"age", mpq_text(s.age)},
                        {"parity", parity_name(a.parity(i))},
                        {"dim", a.algebra(i).dim()},
                        {"local", a.algebra(i).is_local()},
                        {"basis", basis}});
  }
  o.doc["sectors"] = list;
  return o;
}

Outcome cmd_sigma(const TwistedAlgebra& a, const GroupElement& g, const GroupElement& h) {
  Outcome o;
  o.doc["command"] = "sigma";
  o.doc["model"] = model_json(a);
  o.doc["entry"] = sigma_entry(a, sector_index(a, g), sector_index(a, h));
  return o;
}

Outcome cmd_table(const TwistedAlgebra& a, bool invariants_only, bool with_cap) {
  Outcome o;
  o.doc["command"] = "table";
  o.doc["model"] = model_json(a);
  o.doc["mode"] = invariants_only ? "invariants_only" : "full";
  if (!invariants_only) {
    Json cup = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) cup.push_back(sigma_entry(a, i, j));
    o.doc["cup"] = cup;
    if (with_cap) {
      Json cap = Json::array();
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
          cap.push_back(Json{{"omega", group_json(a.group()[i])},
                             {"xi", group_json(a.group()[j])},
                             {"product", element_json(a.cap(a.generator(i, Side::Omega), a.generator(j)))}});
      o.doc["cap"] = cap;
    }
    return o;
  }
  const auto inv = a.invariants();
  Json basis = Json::array();
  for (std::size_t k = 0; k < inv.size(); ++k)
    basis.push_back(Json{{"index", k}, {"parity", parity_name(inv[k].parity())}, {"element", element_json(inv[k])}});
  o.doc["basis"] = basis;
  Json cup = Json::array();
  for (std::size_t p = 0; p < inv.size(); ++p)
    for (std::size_t q = 0; q < inv.size(); ++q)
      cup.push_back(Json{{"left", p}, {"right", q}, {"product", element_json(a.cup(inv[p], inv[q]))}});
  o.doc["cup"] = cup;
  if (with_cap) {
    const auto coinv = a.coinvariants();
    Json cap = Json::array();
    for (std::size_t p = 0; p < coinv.size(); ++p)
      for (std::size_t q = 0; q < inv.size(); ++q)
        cap.push_back(Json{{"left", p}, {"right", q}, {"product", element_json(a.cap(coinv[p], inv[q]))}});
    o.doc["cap"] = cap;
  }
  return o;
}

Outcome cmd_invariants(const TwistedAlgebra& a) {
  Outcome o;
  o.doc["command"] = "invariants";
  o.doc["model"] = model_json(a);
  const auto inv = a.invariants();
  std::size_t even = 0, odd = 0;
  Json basis = Json::array();
  for (std::size_t k = 0; k < inv.size(); ++k) {
    (inv[k].parity() ? odd : even)++;
    basis.push_back(Json{{"index", k}, {"parity", parity_name(inv[k].parity())}, {"element", element_json(inv[k])}});
  }
  o.doc["even"] = even;
  o.doc["odd"] = odd;
  o.doc["basis"] = basis;
  return o;
}

Outcome cmd_check(const TwistedAlgebra& a, const std::string& suite) {
  static const std::vector<std::string> known{"braided", "assoc", "unit", "equivariance", "oracle", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end())
    throw ValidationError("unknown check suite '" + suite + "'");
  const bool all = suite == "all";
  std::vector<CheckResult> results;
  if (all || suite == "unit") results.push_back(check_unit(a));
  if (all || suite == "braided") results.push_back(check_braided(a));
  if (all || suite == "assoc") results.push_back(check_associative(a));
  if (all || suite == "equivariance") results.push_back(check_equivariance(a));
  if (all) {
    results.push_back(check_transversal(a));
    results.push_back(check_omega(a));
    results.push_back(check_invariant_subalgebra(a));
  }
  if (all || suite == "oracle")
    for (auto& r : oracle_checks(a, nullptr)) results.push_back(std::move(r));

  Outcome o;
  o.doc["command"] = "check";
  o.doc["model"] = model_json(a);
  o.doc["suite"] = suite;
  Json list = Json::array();
  for (const auto& r : results) {
    list.push_back(check_json(r));
    o.ok = o.ok && r.passed;
  }
  o.doc["results"] = list;
  o.doc["passed"] = o.ok;
  return o;
}

Outcome cmd_oracle(const TwistedAlgebra& a) {
  Outcome o;
  o.doc["command"] = "oracle";
  o.doc["model"] = model_json(a);
  Json detail;
  const auto results = oracle_checks(a, &detail);
  o.doc["sectors"] = detail;
  Json list = Json::array();
  for (const auto& r : results) {
    list.push_back(check_json(r));
    o.ok = o.ok && r.passed;
  }
  o.doc["results"] = list;
  o.doc["passed"] = o.ok;
  return o;
}

Outcome cmd_compare_jac(const ModelConfig& cfg, TwistedOptions opt) {
  ModelConfig doubled = cfg;
  doubled.double_field = true;  // e^{-pi i age} needs zeta_{2n}
  const Model m = build_model(doubled);
  atomic_decompose(m.w);
  TwistedAlgebra a(m.w, m.group, opt);
  JacPrimeAlgebra j(m.w, m.group, opt);
  const Comparison c = compare(a, j);

  Outcome o;
  o.doc["command"] = "compare-jac";
  o.doc["model"] = model_json(a);
  Json blocks = Json::array();
  for (const auto& b : j.blocks()) blocks.push_back(b.to_string());
  o.doc["blocks"] = blocks;
  o.doc["verdict"] = to_string(c.verdict);
  Json alpha = Json::array();
  for (const auto& [i, r] : c.alpha)
    alpha.push_back(Json{{"g", group_json(a.group()[i])}, {"alpha", scalar_json(r, a.field())}, {"text", r.to_string()}});
  o.doc["alpha"] = alpha;
  o.doc["witness"] = c.witness;
  return o;
}

Outcome cmd_surface(int genus, TwistedOptions opt) {
  const ModelConfig cfg = surface_config(genus);
  const Model m = build_model(cfg);
  opt.local = LocalMode::Auto;
  TwistedAlgebra a(m.w, m.group, opt);
  const auto* f = a.field();
  const int n = cfg.order;
  const auto& me = a.algebra(0);

  Outcome o;
  o.doc["command"] = "surface";
  o.doc["genus"] = genus;
  o.doc["model"] = model_json(a);
  o.doc["milnor_dim"] = me.dim();

  const auto inv = a.invariants();
  std::size_t even = 0, odd = 0;
  for (const auto& v : inv) (v.parity() ? odd : even)++;
  o.doc["invariants"] = Json{{"even", even}, {"odd", odd}};

  Monomial xyz;
  for (int i = 0; i < 3; ++i) xyz.set(Block::X, i, 1);
  const MilnorClass phi = me.class_of(MultiPoly::monomial(3, f, xyz, CycScalar(1)));
  TwistedElement phi_e = a.zero();
  phi_e.add_term(0, 0, phi);

  auto gen = [&](int k) { return a.generator(sector_index(a, GroupElement{{1, 1, n - 2}, n}.pow(k))); };
  auto prod = [&](const TwistedElement& u, const TwistedElement& v) { return a.cup(u, v).collapse_t(); };

  Json relations = Json::array();
  bool hold = true;
  auto relation = [&](const std::string& name, bool ok) {
    relations.push_back(Json{{"relation", name}, {"holds", ok}});
    hold = hold && ok;
  };
  relation("gamma*gamma=0", prod(phi_e, phi_e).is_zero());
  Json constants = Json::array();
  for (int k = 1; k <= genus; ++k) {
    const auto xp = gen(k), xm = gen(-k);
    relation("gamma*alpha_" + std::to_string(k) + "=0", prod(phi_e, xp).is_zero());
    relation("gamma*beta_" + std::to_string(k) + "=0", prod(phi_e, xm).is_zero());
    for (int l = 1; l <= genus; ++l) {
      const std::string kl = std::to_string(k) + "," + std::to_string(l);
      relation("alpha*alpha(" + kl + ")=0", prod(xp, gen(l)).is_zero());
      relation("beta*beta(" + kl + ")=0", prod(xm, gen(-l)).is_zero());
      if (k != l) relation("alpha*beta(" + kl + ")=0", prod(xp, gen(-l)).is_zero());
    }
    // xi+_k xi-_k = c_k phi xi_e
    const auto p = prod(xp, xm);
    std::optional<CycScalar> ck;
    if (p.terms().size() == 1 && p.terms().begin()->first.first == 0) {
      const auto& cls = p.terms().begin()->second;
      for (std::size_t b = 0; b < cls.coeffs.size(); ++b)
        if (!phi.coeffs[b].is_zero()) {
          CycScalar r = cls.coeffs[b] / phi.coeffs[b];
          MilnorClass scaled = phi;
          for (auto& x : scaled.coeffs) x *= r;
          if (scaled == cls) ck = r;
          break;
        }
    }
    relation("alpha_" + std::to_string(k) + "*beta_" + std::to_string(k) + "=gamma", ck && !ck->is_zero());
    const CycScalar z = zeta_power_in(f, k, n);
    const CycScalar lemma = ((CycScalar(1) - z).pow(2) * (CycScalar(1) - z.pow(-2))).inverse();
    Json c{{"k", k}};
    c["c_k"] = ck ? scalar_json(*ck, f) : Json(nullptr);
    c["c_k_text"] = ck ? ck->to_string() : "";
    c["closed_form"] = scalar_json(lemma, f);
    c["ratio_to_closed_form"] = ck ? (*ck / lemma).to_string() : "";
    constants.push_back(c);
  }
  o.doc["c_k"] = constants;
  o.doc["relations"] = relations;
  Json iso;
  iso["xi_e"] = "1";
  iso["phi*xi_e"] = "gamma";
  for (int k = 1; k <= genus; ++k) {
    iso["xi+_" + std::to_string(k)] = "alpha_" + std::to_string(k);
    iso["xi-_" + std::to_string(k)] = "c_" + std::to_string(k) + "*beta_" + std::to_string(k);
  }
  o.doc["isomorphism"] = iso;
  o.doc["isomorphism_verified"] =
      hold && even == 2 && odd == static_cast<std::size_t>(2 * genus) && me.dim() == static_cast<std::size_t>(6 * genus + 2);
  return o;
}

// ---------------------------------------------------------------------------

namespace {

std::string scalar_text(const Json& s) {
  // Rebuild a readable form from the coefficient list.
  std::ostringstream os;
  bool first = true;
  const auto& c = s["coeffs"];
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::string v = c[k].get<std::string>();
    if (v.size() > 2 && v.substr(v.size() - 2) == "/1") v.resize(v.size() - 2);
    if (v == "0") continue;
    const bool neg = v.front() == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    os << (neg ? v.substr(1) : v);
    if (k) os << "*zeta^" << k;
  }
  return first ? "0" : os.str();
}

std::string group_text(const Json& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i].get<int>());
  return s + ")";
}

std::string element_text(const Json& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& t : e) {
    if (!s.empty()) s += " + ";
    s += "[" + t["text"].get<std::string>() + "] t^" + std::to_string(t["t"].get<int>()) + " xi" + group_text(t["sector"]);
  }
  return s;
}

void plain_checks(std::ostream& os, const Json& doc) {
  for (const auto& r : doc["results"]) {
    os << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>() << " (" << r["cases"] << " cases)";
    const auto w = r["witness"].get<std::string>();
    if (!w.empty()) os << ": " << w;
    os << "\n";
  }
}

std::string latex_escape(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '#' || ch == '%' || ch == '&') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render_plain(const Json& doc) {
  std::ostringstream os;
  const std::string cmd = doc["command"];
  if (doc.contains("model"))
    os << "W = " << doc["model"]["W"].get<std::string>() << ", |G| = " << doc["model"]["group_size"] << ", field Q(zeta_"
       << doc["model"]["field_order"] << ")\n";
  if (cmd == "sectors") {
    for (const auto& s : doc["sectors"]) {
      os << group_text(s["g"]) << "  d=" << s["d"] << " age=" << s["age"].get<std::string>() << " "
         << s["parity"].get<std::string>() << " dim=" << s["dim"] << "  basis:";
      for (const auto& b : s["basis"]) os << " " << b.get<std::string>();
      os << "\n";
    }
  } else if (cmd == "sigma") {
    const auto& e = doc["entry"];
    os << "sigma" << group_text(e["g"]) << group_text(e["h"]) << " = " << e["text"].get<std::string>() << "  in M(W^"
       << group_text(e["gh"]) << ")";
    if (!e["t"].is_null()) os << "  t^" << e["t"];
    os << "\n";
  } else if (cmd == "table") {
    if (doc["mode"] == "full") {
      for (const auto& e : doc["cup"]) {
        if (e["text"] == "0") continue;
        os << "xi" << group_text(e["g"]) << " * xi" << group_text(e["h"]) << " = [" << e["text"].get<std::string>()
           << "] t^" << e["t"] << " xi" << group_text(e["gh"]) << "\n";
      }
      if (doc.contains("cap"))
        for (const auto& e : doc["cap"])
          if (!e["product"].empty())
            os << "omega" << group_text(e["omega"]) << " cap xi" << group_text(e["xi"]) << " = "
               << element_text(e["product"]) << "\n";
    } else {
      for (const auto& b : doc["basis"])
        os << "v" << b["index"] << " (" << b["parity"].get<std::string>() << ") = " << element_text(b["element"]) << "\n";
      for (const auto& e : doc["cup"])
        if (!e["product"].empty())
          os << "v" << e["left"] << " * v" << e["right"] << " = " << element_text(e["product"]) << "\n";
    }
  } else if (cmd == "invariants") {
    os << "even " << doc["even"] << ", odd " << doc["odd"] << "\n";
    for (const auto& b : doc["basis"])
      os << "v" << b["index"] << " (" << b["parity"].get<std::string>() << ") = " << element_text(b["element"]) << "\n";
  } else if (cmd == "check" || cmd == "oracle") {
    plain_checks(os, doc);
  } else if (cmd == "compare-jac") {
    os << "blocks:";
    for (const auto& b : doc["blocks"]) os << " " << b.get<std::string>();
    os << "\nverdict: " << doc["verdict"].get<std::string>() << "\n";
    for (const auto& a : doc["alpha"]) os << "alpha" << group_text(a["g"]) << " = " << a["text"].get<std::string>() << "\n";
    if (!doc["witness"].get<std::string>().empty()) os << "witness: " << doc["witness"].get<std::string>() << "\n";
  } else if (cmd == "surface") {
    os << "genus " << doc["genus"] << ": dim M(W) = " << doc["milnor_dim"] << ", invariants even "
       << doc["invariants"]["even"] << ", odd " << doc["invariants"]["odd"] << "\n";
    for (const auto& c : doc["c_k"])
      os << "c_" << c["k"] << " = " << c["c_k_text"].get<std::string>() << "  (closed form " << scalar_text(c["closed_form"])
         << ", ratio " << c["ratio_to_closed_form"].get<std::string>() << ")\n";
    for (const auto& [k, v] : doc["isomorphism"].items()) os << k << " -> " << v.get<std::string>() << "\n";
    os << "isomorphism verified: " << (doc["isomorphism_verified"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (doc.contains("elapsed_ms")) os << "elapsed " << doc["elapsed_ms"] << " ms\n";
  return os.str();
}

std::string render_latex(const Json& doc) {
  std::ostringstream os;
  const std::string cmd = doc["command"];
  if (cmd == "sectors") {
    os << "\\begin{tabular}{lrrlr}\n$g$ & $d_g$ & age & parity & $\\mu(W^g)$ \\\\\n\\hline\n";
    for (const auto& s : doc["sectors"])
      os << "$" << group_text(s["g"]) << "$ & " << s["d"] << " & $" << s["age"].get<std::string>() << "$ & "
         << s["parity"].get<std::string>() << " & " << s["dim"] << " \\\\\n";
    os << "\\end{tabular}\n";
  } else if (cmd == "table" && doc["mode"] == "full") {
    os << "\\begin{tabular}{llll}\n$g$ & $h$ & $t$ & $\\sigma_{g,h}$ \\\\\n\\hline\n";
    for (const auto& e : doc["cup"]) {
      if (e["text"] == "0") continue;
      os << "$" << group_text(e["g"]) << "$ & $" << group_text(e["h"]) << "$ & " << e["t"] << " & $"
         << latex_escape(e["text"].get<std::string>()) << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else {
    os << "\\begin{verbatim}\n" << render_plain(doc) << "\\end{verbatim}\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cup products on Hochschild cohomology of LG orbifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format = "plain", local;
  int jobs = 0;
  app.add_option("--config", config_path, "Model file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
  app.add_option("--jobs", jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--local", local, "Localize at the origin")->check(CLI::IsMember({"auto", "on", "off"}));

  auto* sectors = app.add_subcommand("sectors", "Sector dimensions, parities and bases");
  std::string g_text, h_text;
  auto* sigma = app.add_subcommand("sigma", "One structure constant");
  sigma->add_option("first", g_text, "Exponent vector of g, e.g. 1,1,3")->required();
  sigma->add_option("second", h_text, "Exponent vector of h")->required();
  bool invariants_only = false, with_cap = false;
  auto* table = app.add_subcommand("table", "Cup (and cap) tables");
  table->add_flag("--invariants-only", invariants_only, "Restrict to the G-invariant part");
  table->add_flag("--cap", with_cap, "Include the cap action");
  auto* invariants = app.add_subcommand("invariants", "Basis of the invariant subalgebra");
  std::string suite = "all", corrupt;
  auto* check = app.add_subcommand("check", "Property checks");
  check->add_option("--suite", suite, "braided|assoc|unit|equivariance|oracle|all");
  check->add_option("--corrupt", corrupt, "Perturb sigma(g,h) first, as g:h (negative control)");
  auto* compare_jac = app.add_subcommand("compare-jac", "Compare with the twisted Jacobian algebra");
  auto* oracle = app.add_subcommand("oracle", "Koszul-complex oracles");
  int genus = 2;
  auto* surface = app.add_subcommand("surface", "Genus-g surface mirror model");
  surface->add_option("--genus", genus, "Genus, at least 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    TwistedOptions opt;
    opt.jobs = jobs;
    Outcome o;
    if (surface->parsed()) {
      o = cmd_surface(genus, opt);
    } else {
      if (config_path.empty()) throw ValidationError("--config is required for this command");
      ModelConfig cfg = load_config(config_path);
      opt.local = local.empty() ? cfg.local : parse_local_mode(local);
      if (compare_jac->parsed()) {
        o = cmd_compare_jac(cfg, opt);
      } else {
        const Model m = build_model(cfg);
        TwistedAlgebra a(m.w, m.group, opt);
        auto element = [&](const std::string& text) {
          auto v = parse_vector(text);
          for (auto& x : v) x = ((x % cfg.order) + cfg.order) % cfg.order;
          return GroupElement{v, cfg.order};
        };
        if (sectors->parsed()) o = cmd_sectors(a);
        else if (sigma->parsed()) o = cmd_sigma(a, element(g_text), element(h_text));
        else if (table->parsed()) o = cmd_table(a, invariants_only, with_cap);
        else if (invariants->parsed()) o = cmd_invariants(a);
        else if (oracle->parsed()) o = cmd_oracle(a);
        else if (check->parsed()) {
          if (!corrupt.empty()) {
            const auto colon = corrupt.find(':');
            if (colon == std::string::npos) throw ValidationError("--corrupt expects g:h");
            const auto i = sector_index(a, element(corrupt.substr(0, colon)));
            const auto j = sector_index(a, element(corrupt.substr(colon + 1)));
            const auto& alg = a.algebra(a.group().mul(i, j));
            MilnorClass c = a.sigma(i, j);
            const MilnorClass u = alg.unit();
            for (std::size_t k = 0; k < c.coeffs.size(); ++k) c.coeffs[k] += u.coeffs[k];
            a.set_sigma(i, j, c);
          }
          o = cmd_check(a, suite);
        }
      }
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    o.doc["elapsed_ms"] = static_cast<long>(ms);
    if (format == "json") out << o.doc.dump(2) << "\n";
    else if (format == "latex") out << render_latex(o.doc);
    else out << render_plain(o.doc);
    return o.ok ? 0 : 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lgorb::cli
