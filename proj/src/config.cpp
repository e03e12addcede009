#include "hop/config.hpp"

#include "hop/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace hop {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError(what + " must be a rational string such as \"1/2\"");
}

double real_component(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  return rational_field(j, what).get_d();
}

Complex complex_component(const json& j) {
  if (j.is_object()) {
    double re = j.contains("re") ? real_component(j["re"], "z.re") : 0.0;
    double im = j.contains("im") ? real_component(j["im"], "z.im") : 0.0;
    return {re, im};
  }
  return {real_component(j, "z component"), 0.0};
}

RatVec rational_vector(const json& j, int rank, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw ConfigError(what + " must be an array of " + std::to_string(rank) + " rationals");
  RatVec v;
  for (const auto& c : j) v.push_back(rational_field(c, what));
  return v;
}

template <class T>
T integer_field(const json& j, const std::string& what, long lo) {
  if (!j.is_number_integer()) throw ConfigError(what + " must be an integer");
  long v = j.get<long>();
  if (v < lo) throw ConfigError(what + " must be >= " + std::to_string(lo));
  return static_cast<T>(v);
}

void check_k(const json& k) {
  auto one = [](const json& v, const char* what) {
    Rational q = rational_field(v, what);
    if (sgn(q) < 0) throw ConfigError(std::string(what) + " must be nonnegative, got " + q.get_str());
  };
  if (k.is_array()) {
    if (k.empty()) throw ConfigError("k must not be empty");
    for (const auto& v : k) one(v, "k");
  } else if (k.is_object()) {
    for (const auto& [name, v] : k.items()) {
      if (name != "short" && name != "long") throw ConfigError("k object keys are \"short\" and \"long\"");
      one(v, "k");
    }
    if (k.empty()) throw ConfigError("k must not be empty");
  } else {
    one(k, "k");
  }
}

}  // namespace

Multiplicity multiplicity(const RootSystem& R, const json& k) {
  if (k.is_array()) {
    std::vector<Rational> per;
    for (const auto& v : k) per.push_back(rational_field(v, "k"));
    return Multiplicity(R, per);
  }
  if (k.is_object()) {
    const int orbits = R.num_root_orbits();
    std::optional<Rational> s, l;
    if (k.contains("short")) s = rational_field(k["short"], "k.short");
    if (k.contains("long")) l = rational_field(k["long"], "k.long");
    if (orbits == 1) {
      if (s && l && *s != *l) throw ConfigError(R.code() + " has one root length; k.short and k.long differ");
      return Multiplicity::uniform(R, s ? *s : *l);
    }
    if (!s || !l) throw ConfigError(R.code() + " needs both k.short and k.long");
    return Multiplicity(R, {*s, *l});  // orbit 0 holds the short roots
  }
  return Multiplicity::uniform(R, rational_field(k, "k"));
}

std::vector<ComplexPoint> default_z_grid(const RootSystem& R) {
  Point r = rho(R, Multiplicity::uniform(R, Rational(1)));
  const double norm = std::sqrt(R.inner(r, r).get_d());
  std::vector<ComplexPoint> grid;
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    std::vector<double> c;
    for (const auto& x : r) c.push_back(t * x.get_d() / norm);
    grid.push_back(ComplexPoint::real(c));
  }
  return grid;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{
      "root_system", "k",      "lambda",        "truncation",  "n_list",     "z_grid",
      "x",           "degree", "moment_order",  "moment_direction", "format", "out",
      "seed",        "downset_limit", "cache",  "workers",     "systems",    "k_values",
      "sweep_limit", "hull_pairs", "intertwiner_degree", "rankone_n_max", "rankone_samples"};
  for (const auto& [key, v] : j.items())
    if (!known.count(key)) throw ConfigError("unknown config key \"" + key + "\"");

  RunConfig c;
  try {
    if (j.contains("root_system")) c.root_system = j["root_system"].get<std::string>();
    const RootSystem R = RootSystem::from_code(c.root_system);
    const int rank = R.rank();

    if (j.contains("k")) c.k = j["k"];
    check_k(c.k);
    multiplicity(R, c.k);

    if (j.contains("lambda")) {
      const json& l = j["lambda"];
      if (!l.is_array() || static_cast<int>(l.size()) != rank)
        throw ConfigError("lambda must be an array of " + std::to_string(rank) + " integers");
      IntVec v;
      for (const auto& x : l) v.push_back(integer_field<int>(x, "lambda", std::numeric_limits<int>::min()));
      c.lambda = v;
    }
    if (j.contains("truncation")) c.truncation = integer_field<int>(j["truncation"], "truncation", 0);
    if (j.contains("n_list")) {
      c.n_list.clear();
      for (const auto& n : j["n_list"]) c.n_list.push_back(integer_field<int>(n, "n_list entry", 1));
      if (c.n_list.empty()) throw ConfigError("n_list must not be empty");
      for (std::size_t i = 1; i < c.n_list.size(); ++i)
        if (c.n_list[i] <= c.n_list[i - 1]) throw ConfigError("n_list must be strictly increasing");
    }
    if (j.contains("z_grid")) {
      std::vector<ComplexPoint> grid;
      for (const auto& z : j["z_grid"]) {
        if (!z.is_array() || static_cast<int>(z.size()) != rank)
          throw ConfigError("each z_grid point needs " + std::to_string(rank) + " components");
        ComplexPoint p;
        for (const auto& comp : z) p.coords.push_back(complex_component(comp));
        grid.push_back(std::move(p));
      }
      c.z_grid = std::move(grid);
    }
    if (j.contains("x")) c.x = rational_vector(j["x"], rank, "x");
    if (j.contains("degree")) c.degree = integer_field<int>(j["degree"], "degree", 0);
    if (j.contains("moment_order")) c.moment_order = integer_field<int>(j["moment_order"], "moment_order", 0);
    if (j.contains("moment_direction"))
      c.moment_direction = rational_vector(j["moment_direction"], rank, "moment_direction");
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("seed")) c.seed = integer_field<std::uint64_t>(j["seed"], "seed", 0);
    if (j.contains("downset_limit")) c.downset_limit = integer_field<std::size_t>(j["downset_limit"], "downset_limit", 1);
    if (j.contains("cache")) c.cache = j["cache"].get<std::string>();
    if (j.contains("workers")) c.workers = integer_field<int>(j["workers"], "workers", 0);

    if (j.contains("systems")) {
      c.systems.clear();
      for (const auto& s : j["systems"]) {
        c.systems.push_back(s.get<std::string>());
        RootSystem::from_code(c.systems.back());
      }
    }
    if (j.contains("k_values")) {
      c.k_values.clear();
      for (const auto& v : j["k_values"]) {
        Rational q = rational_field(v, "k_values entry");
        if (sgn(q) < 0) throw ConfigError("k_values must be nonnegative, got " + q.get_str());
        c.k_values.push_back(q);
      }
    }
    if (j.contains("sweep_limit")) c.sweep_limit = integer_field<std::size_t>(j["sweep_limit"], "sweep_limit", 1);
    if (j.contains("hull_pairs")) c.hull_pairs = integer_field<std::size_t>(j["hull_pairs"], "hull_pairs", 0);
    if (j.contains("intertwiner_degree"))
      c.intertwiner_degree = integer_field<int>(j["intertwiner_degree"], "intertwiner_degree", 0);
    if (j.contains("rankone_n_max")) c.rankone_n_max = integer_field<int>(j["rankone_n_max"], "rankone_n_max", 0);
    if (j.contains("rankone_samples"))
      c.rankone_samples = integer_field<int>(j["rankone_samples"], "rankone_samples", 0);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

}  // namespace hop
