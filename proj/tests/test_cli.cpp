#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "lgorb/errors.hpp"

using namespace lgorb;
using namespace lgorb::cli;

namespace {

const char* kCube = R"([model]
nvars = 1
order = 3
W = x1^3

[group]
generators = 1

[options]
local = auto
double_field = false
)";

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lgorb_test_" + name + ".ini");
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lgorb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) {
  auto doc = Json::parse(r.out);
  doc.erase("elapsed_ms");
  return doc;
}

std::unique_ptr<TwistedAlgebra> algebra_of(const ModelConfig& c) {
  auto m = build_model(c);
  return std::make_unique<TwistedAlgebra>(m.w, m.group);
}

}  // namespace

TEST(Cli, ParsesConfig) {
  auto c = parse_config(kCube);
  EXPECT_EQ(c.nvars, 1);
  EXPECT_EQ(c.order, 3);
  EXPECT_EQ(c.w_text, "x1^3");
  EXPECT_EQ(c.generators, (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(c.local, LocalMode::Auto);
  EXPECT_FALSE(c.double_field);

  auto two = parse_config("[model]\nnvars = 2\norder = 3\nW = x1^3 + x2^3\n[group]\ngenerators = 1,0; 0,1\n"
                          "[options]\ndouble_field = true\nlocal = off\n");
  EXPECT_EQ(two.generators.size(), 2u);
  EXPECT_EQ(two.field_order(), 6);
  EXPECT_EQ(two.local, LocalMode::Off);

  auto s = parse_config("[model]\ngenus = 3\n");
  EXPECT_EQ(s.order, 7);
  EXPECT_EQ(s.generators, (std::vector<std::vector<int>>{{1, 1, 5}}));
}

TEST(Cli, ConfigErrorsCarryPosition) {
  auto message = [](const std::string& text) {
    try {
      parse_config(text, "m.ini");
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("[model]\nnvars = 1\norder = 3\nW = x1^3 + \n[group]\ngenerators = 1\n").rfind("m.ini:4: ", 0), 0u);
  EXPECT_NE(message("[model]\nnvars = 1\norder = 3\nW = x1^3 + \n").find("column 7"), std::string::npos);
  EXPECT_EQ(message("[model]\nnvars = 1\norder = 3\nW = x1^3 + x1^2\n[group]\ngenerators = 1\n").rfind("m.ini:6: ", 0),
            0u);
  EXPECT_EQ(message("[model]\nnvars = 2\norder = 3\nW = x1^3\n[group]\ngenerators = 1,5\n").rfind("m.ini:6: ", 0), 0u);
  EXPECT_EQ(message("[model]\nnvars = 2\norder = 3\nW = x1^3\n[group]\ngenerators = 1\n").rfind("m.ini:6: ", 0), 0u);
  EXPECT_EQ(message("[model]\nnvars = two\n").rfind("m.ini:2: ", 0), 0u);
  EXPECT_EQ(message("[model\n").rfind("m.ini:1: ", 0), 0u);
  EXPECT_NE(message("[model]\nnvars = 1\n").find("missing key 'order'"), std::string::npos);
  EXPECT_NE(message(std::string(kCube) + "").find("no error"), std::string::npos);
}

TEST(Cli, CubeSectors) {
  auto a = algebra_of(parse_config(kCube));
  auto doc = cmd_sectors(*a).doc;
  ASSERT_EQ(doc["sectors"].size(), 3u);
  const std::vector<std::pair<int, std::string>> want{{2, "even"}, {1, "odd"}, {1, "odd"}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(doc["sectors"][i]["dim"], want[i].first);
    EXPECT_EQ(doc["sectors"][i]["parity"], want[i].second);
  }
}

TEST(Cli, TrivialGroupSector) {
  auto a = algebra_of(parse_config("[model]\nnvars = 2\norder = 1\nW = x1^3 + x2^4\n"));
  auto doc = cmd_sectors(*a).doc;
  ASSERT_EQ(doc["sectors"].size(), 1u);
  EXPECT_EQ(doc["sectors"][0]["dim"], 6);
}

TEST(Cli, SurfaceSectors) {
  auto a = algebra_of(parse_config("[model]\ngenus = 2\n"));
  auto doc = cmd_sectors(*a).doc;
  std::vector<int> dims;
  for (const auto& s : doc["sectors"]) dims.push_back(s["dim"]);
  EXPECT_EQ(dims, (std::vector<int>{14, 1, 1, 1, 1}));
}

TEST(Cli, CubeTable) {
  auto a = algebra_of(parse_config(kCube));
  auto doc = cmd_table(*a, false, true).doc;
  ASSERT_EQ(doc["cup"].size(), 9u);
  const auto& e = doc["cup"][5];  // (1) * (2)
  EXPECT_EQ(e["g"], Json::array({1}));
  EXPECT_EQ(e["h"], Json::array({2}));
  EXPECT_EQ(e["t"], 1);
  // basis of M(x^3) is {1, x}; the class is a multiple of x
  ASSERT_EQ(e["sigma"].size(), 2u);
  EXPECT_EQ(e["sigma"][0]["coeffs"], Json::array({"0/1", "0/1"}));
  EXPECT_EQ(e["sigma"][1]["order"], 3);
  EXPECT_EQ(e["sigma"][1]["coeffs"], Json::array({"-2/1", "-1/1"}));
  EXPECT_TRUE(doc["cup"][4]["t"].is_null());  // d_{g,g} = 1/2
  EXPECT_EQ(doc["cup"][4]["text"], "0");
  EXPECT_EQ(doc["cap"].size(), 9u);

  auto inv = cmd_table(*a, true, false).doc;
  EXPECT_EQ(inv["basis"].size(), 1u);
}

TEST(Cli, SurfaceInvariantTable) {
  auto a = algebra_of(parse_config("[model]\ngenus = 2\n"));
  auto doc = cmd_table(*a, true, false).doc;
  ASSERT_EQ(doc["basis"].size(), 6u);
  std::size_t nonzero = 0;
  for (const auto& e : doc["cup"])
    if (!e["product"].empty()) ++nonzero;
  // 1 * anything (11 entries), and xi+_k xi-_k both ways (4 entries)
  EXPECT_EQ(nonzero, 15u);
}

TEST(Cli, ChecksAndNegativeControl) {
  auto a = algebra_of(parse_config(kCube));
  auto ok = cmd_check(*a, "all");
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.doc["results"].size(), 10u);
  EXPECT_THROW(cmd_check(*a, "everything"), ValidationError);

  MilnorClass c = a->sigma(1, 2);
  c.coeffs[0] += CycScalar(1);
  a->set_sigma(1, 2, c);
  auto bad = cmd_check(*a, "oracle");
  EXPECT_FALSE(bad.ok);
  bool witnessed = false;
  for (const auto& r : bad.doc["results"])
    if (!r["passed"].get<bool>()) witnessed = !r["witness"].get<std::string>().empty();
  EXPECT_TRUE(witnessed);
}

TEST(Cli, SurfaceOracleAgreesOnAllPairs) {
  auto a = algebra_of(parse_config("[model]\ngenus = 2\n"));
  auto o = cmd_oracle(*a);
  EXPECT_TRUE(o.ok);
  for (const auto& r : o.doc["results"])
    if (r["name"] == "oracle_chain_cup") EXPECT_EQ(r["cases"], 25);
}

TEST(Cli, CompareJac) {
  auto verdict = [](const std::string& text) {
    return cmd_compare_jac(parse_config(text), {}).doc["verdict"].get<std::string>();
  };
  EXPECT_EQ(verdict("[model]\nnvars = 2\norder = 9\nW = x1^3*x2 + x2^3\n[group]\ngenerators = 1,6\n"),
            "isomorphic_via_rescaling");
  EXPECT_EQ(verdict(kCube), "isomorphic_via_rescaling");
  EXPECT_EQ(verdict("[model]\nnvars = 2\norder = 3\nW = x1^2*x2 + x2^2*x1\n[group]\ngenerators = 1,1\n"),
            "isomorphic_via_rescaling");
  EXPECT_THROW(cmd_compare_jac(parse_config("[model]\nnvars = 2\norder = 1\nW = x1^3 + x2^3 + x1*x2^2\n"), {}),
               ValidationError);
}

TEST(Cli, Surface) {
  for (int genus : {2, 3}) {
    auto doc = cmd_surface(genus, {}).doc;
    EXPECT_EQ(doc["milnor_dim"], 6 * genus + 2);
    EXPECT_EQ(doc["invariants"]["even"], 2);
    EXPECT_EQ(doc["invariants"]["odd"], 2 * genus);
    EXPECT_TRUE(doc["isomorphism_verified"].get<bool>());
    for (const auto& c : doc["c_k"]) EXPECT_EQ(c["ratio_to_closed_form"], "-1");
  }
  EXPECT_THROW(cmd_surface(1, {}), ValidationError);
}

TEST(Cli, ExitCodes) {
  const auto cube = write_temp("cube", kCube);
  EXPECT_EQ(invoke({"--config", cube, "sectors"}).code, 0);
  EXPECT_EQ(invoke({"--config", cube, "check", "--suite", "braided"}).code, 0);
  EXPECT_EQ(invoke({"--config", cube, "check", "--corrupt", "1:2"}).code, 3);
  EXPECT_EQ(invoke({"sectors"}).code, 1);
  EXPECT_EQ(invoke({"--config", "/nonexistent/model.ini", "sectors"}).code, 1);
  EXPECT_EQ(invoke({"--config", cube, "sigma", "1", "7"}).code, 0);  // entries are reduced mod n
  EXPECT_EQ(invoke({"--config", cube, "sigma", "1,1", "2"}).code, 1);
  EXPECT_EQ(invoke({"--config", cube, "--format", "yaml", "sectors"}).code, 1);
  auto bad = invoke({"--config", write_temp("bad", "[model]\nnvars = 1\norder = 3\nW = x1^3 + x1^2\n[group]\ngenerators = 1\n"),
                     "sectors"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find(":6:"), std::string::npos);
  // a non-isolated singularity is a computation error
  auto flat = invoke({"--config", write_temp("flat", "[model]\nnvars = 2\norder = 1\nW = x1^2\n[options]\nlocal = off\n"),
                      "sectors"});
  EXPECT_EQ(flat.code, 2) << flat.err;
}

TEST(Cli, JsonIsDeterministic) {
  const auto chain = write_temp("chain", "[model]\nnvars = 2\norder = 9\nW = x1^3*x2 + x2^3\n[group]\ngenerators = 1,6\n");
  auto a = invoke({"--config", chain, "--format", "json", "table", "--cap"});
  auto b = invoke({"--config", chain, "--format", "json", "--jobs", "1", "table", "--cap"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(json_of(a), json_of(b));
  EXPECT_EQ(json_of(a).dump(), Json::parse(json_of(a).dump()).dump());
  for (const auto& e : json_of(a)["cup"]) {
    ASSERT_TRUE(e.contains("t"));
    for (const auto& s : e["sigma"]) {
      EXPECT_EQ(s["order"], 9);
      EXPECT_EQ(s["coeffs"].size(), 6u);  // phi(9)
    }
  }
}

TEST(Cli, OtherFormats) {
  const auto cube = write_temp("cube_fmt", kCube);
  auto latex = invoke({"--config", cube, "--format", "latex", "table"});
  EXPECT_NE(latex.out.find("\\begin{tabular}"), std::string::npos);
  auto plain = invoke({"--config", cube, "sectors"});
  EXPECT_NE(plain.out.find("dim=2"), std::string::npos);
  auto surface = invoke({"surface", "--genus", "2"});
  EXPECT_NE(surface.out.find("isomorphism verified: yes"), std::string::npos);
}
