#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <fstream>
#include <sstream>

#include "lgorb/errors.hpp"

namespace lgorb::cli {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// 1-based line of `key` inside `[section]`, 0 if absent.
int line_of(const std::string& text, const std::string& section, const std::string& key) {
  std::istringstream in(text);
  std::string line, current;
  for (int no = 1; std::getline(in, line); ++no) {
    const std::string t = trim(line);
    if (t.size() > 1 && t.front() == '[' && t.back() == ']') {
      current = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (current == section && eq != std::string::npos && trim(t.substr(0, eq)) == key) return no;
  }
  return 0;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& why) {
  throw ValidationError(origin + (line ? ":" + std::to_string(line) : "") + ": " + why);
}

int to_int(const std::string& origin, int line, const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int r = std::stoi(v, &used);
    if (used == v.size()) return r;
  } catch (const std::exception&) {
  }
  fail(origin, line, key + " must be an integer, got '" + v + "'");
}

bool to_bool(const std::string& origin, int line, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(origin, line, "double_field must be true or false, got '" + v + "'");
}

}  // namespace

std::vector<int> parse_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw ValidationError("bad integer '" + item + "' in vector '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty vector");
  return out;
}

ModelConfig surface_config(int genus) {
  if (genus < 2) throw ValidationError("genus must be at least 2");
  const int n = 2 * genus + 1;
  const std::string e = std::to_string(n);
  ModelConfig c;
  c.nvars = 3;
  c.order = n;
  c.w_text = "x1^" + e + " + x2^" + e + " + x3^" + e + " - x1*x2*x3";
  c.generators = {{1, 1, n - 2}};
  c.genus = genus;
  return c;
}

ModelConfig parse_config(const std::string& text, const std::string& origin) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(origin, static_cast<int>(e.line()), e.message());
  }

  ModelConfig c;
  auto get = [&](const std::string& section, const std::string& key) -> std::optional<std::string> {
    auto v = tree.get_optional<std::string>(pt::ptree::path_type(section + "/" + key, '/'));
    if (!v) return std::nullopt;
    return trim(*v);
  };
  auto required = [&](const std::string& section, const std::string& key) {
    auto v = get(section, key);
    if (!v) fail(origin, 0, "missing key '" + key + "' in [" + section + "]");
    return *v;
  };

  if (auto g = get("model", "genus")) {
    c = surface_config(to_int(origin, line_of(text, "model", "genus"), "genus", *g));
  } else {
    c.nvars = to_int(origin, line_of(text, "model", "nvars"), "nvars", required("model", "nvars"));
    c.order = to_int(origin, line_of(text, "model", "order"), "order", required("model", "order"));
    c.w_text = required("model", "W");
    const int gl = line_of(text, "group", "generators");
    if (auto gens = get("group", "generators")) {
      std::stringstream ss(*gens);
      std::string item;
      while (std::getline(ss, item, ';')) {
        if (trim(item).empty()) continue;
        try {
          c.generators.push_back(parse_vector(item));
        } catch (const ValidationError& e) {
          fail(origin, gl, e.what());
        }
      }
    }
    if (c.order < 1) fail(origin, line_of(text, "model", "order"), "order must be positive");
    for (const auto& v : c.generators) {
      if (static_cast<int>(v.size()) != c.nvars)
        fail(origin, gl, "generator has " + std::to_string(v.size()) + " entries, expected " + std::to_string(c.nvars));
      for (int a : v)
        if (a < 0 || a >= c.order)
          fail(origin, gl, "generator entry " + std::to_string(a) + " is outside 0.." + std::to_string(c.order - 1));
    }
  }
  if (auto l = get("options", "local")) {
    try {
      c.local = parse_local_mode(*l);
    } catch (const std::exception& e) {
      fail(origin, line_of(text, "options", "local"), e.what());
    }
  }
  if (auto d = get("options", "double_field")) c.double_field = to_bool(origin, line_of(text, "options", "double_field"), *d);

  // Parse W now so that syntax errors carry the config position.
  try {
    parse_poly(c.w_text, c.nvars, CyclotomicField::get(c.field_order()));
  } catch (const ValidationError& e) {
    fail(origin, line_of(text, "model", "W"), e.what());
  } catch (const ConfigError& e) {
    fail(origin, line_of(text, "model", "nvars"), e.what());
  }
  try {
    build_model(c);
  } catch (const ValidationError& e) {
    fail(origin, line_of(text, "group", "generators"), e.what());
  }
  return c;
}

ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

Model build_model(const ModelConfig& cfg) {
  const auto* f = CyclotomicField::get(cfg.field_order());
  MultiPoly w = parse_poly(cfg.w_text, cfg.nvars, f);
  SymmetryGroup g = generate_group(cfg.generators, cfg.order, w);
  return {std::move(w), std::move(g)};
}

}  // namespace lgorb::cli
