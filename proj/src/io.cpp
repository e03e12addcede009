#include "hop/io.hpp"

#include "hop/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hop::io {

namespace {

constexpr const char* kCacheFormat = "hop-epoly-cache/1";

json weight_json(const Weight& w) { return json(w.coords); }

Weight weight_from_json(const json& j) { return Weight{j.get<IntVec>()}; }

json term(const char* name, json coords, const Rational& q) {
  json t;
  t[name] = std::move(coords);
  t["numerator"] = q.get_num().get_str();
  t["denominator"] = q.get_den().get_str();
  return t;
}

}  // namespace

json to_json(const Rational& q) {
  return json{{"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  mpz_class num(j.at("numerator").get<std::string>()), den(j.at("denominator").get<std::string>());
  if (den == 0) throw ConfigError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const Complex& c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json to_json(const MultiPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(term("exponents", json(e), c));
  return a;
}

json to_json(const TrigPoly& f) {
  json a = json::array();
  for (const auto& [nu, c] : f.terms()) a.push_back(term("coords", weight_json(nu), c));
  return a;
}

TrigPoly trig_from_json(const json& j) {
  TrigPoly f;
  for (const auto& t : j) f.add_term(weight_from_json(t.at("coords")), rational_from_json(t));
  return f;
}

json to_json(const EPoly& e) {
  json j;
  j["lambda"] = weight_json(e.lambda);
  j["spectrum"] = to_json(e.spectrum);
  j["c"] = to_json(e.c);
  j["a"] = to_json(e.a);
  j["b"] = to_json(e.b);
  json sup = json::array();
  for (const auto& w : e.support) sup.push_back(weight_json(w));
  j["support"] = std::move(sup);
  return j;
}

EPoly epoly_from_json(const json& j) {
  EPoly e;
  e.lambda = weight_from_json(j.at("lambda"));
  for (const auto& s : j.at("spectrum")) e.spectrum.push_back(rational_from_json(s));
  e.c = rational_from_json(j.at("c"));
  e.a = trig_from_json(j.at("a"));
  e.b = trig_from_json(j.at("b"));
  for (const auto& w : j.at("support")) e.support.push_back(weight_from_json(w));
  return e;
}

json to_json(const IntertwinerStage& s) {
  json j;
  j["degree"] = s.degree;
  json basis = json::array();
  for (const auto& e : s.basis) basis.push_back(json(e));
  j["basis"] = std::move(basis);
  json rows = json::array();
  for (const auto& row : s.matrix) rows.push_back(to_json(row));
  j["matrix"] = std::move(rows);
  return j;
}

json to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const auto& [x, w] : mu.atoms) atoms.push_back(json{{"point", to_json(x)}, {"weight", to_string(w)}});
  return json{{"mass", to_string(mu.mass())}, {"atoms", std::move(atoms)}};
}

json to_json(const ConvergenceTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json z = json::array();
    for (const auto& c : r.z.coords) z.push_back(to_json(c));
    json row;
    row["n"] = r.n;
    row["z"] = std::move(z);
    if (r.failure.empty()) {
      row["approx"] = to_json(r.approx);
      row["reference"] = to_json(r.reference);
      row["error"] = r.error;
    } else {
      row["failure"] = r.failure;
    }
    rows.push_back(std::move(row));
  }
  return json{{"table", t.name}, {"rows", std::move(rows)}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv_header(std::ostream& os, int rank) {
  os << "table,n";
  for (int i = 1; i <= rank; ++i) os << ",z" << i << "_re,z" << i << "_im";
  os << ",approx_re,approx_im,reference_re,reference_im,error,failure\n";
}

void write_csv_rows(std::ostream& os, const ConvergenceTable& t) {
  for (const auto& r : t.rows) {
    os << t.name << ',' << r.n;
    for (const auto& c : r.z.coords) os << ',' << format_double(c.real()) << ',' << format_double(c.imag());
    os << ',' << format_double(r.approx.real()) << ',' << format_double(r.approx.imag()) << ','
       << format_double(r.reference.real()) << ',' << format_double(r.reference.imag()) << ','
       << format_double(r.error) << ',';
    // Failure text is quoted; embedded quotes doubled.
    if (!r.failure.empty()) {
      os << '"';
      for (char ch : r.failure) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    }
    os << '\n';
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void load_cache(const std::string& path, EPolyCache& cache) {
  std::ifstream in(path);
  if (!in) return;  // a missing cache file is an empty cache
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IntegrityError("cache " + path + " is not valid JSON: " + e.what());
  }
  try {
    if (doc.at("format") != kCacheFormat) throw IntegrityError("cache " + path + " has an unknown format");
    for (const auto& entry : doc.at("entries")) {
      const std::string key = entry.at("key").get<std::string>();
      const json& ej = entry.at("epoly");
      if (fnv1a_hex(ej.dump()) != entry.at("digest").get<std::string>())
        throw IntegrityError("cache entry " + key + " fails its digest check");
      cache.insert(key, epoly_from_json(ej));
    }
  } catch (const json::exception& e) {
    throw IntegrityError("cache " + path + " is malformed: " + e.what());
  } catch (const ConfigError& e) {
    throw IntegrityError("cache " + path + " holds an unreadable value: " + e.what());
  }
}

void save_cache(const std::string& path, const EPolyCache& cache) {
  json entries = json::array();
  for (const auto& [key, e] : cache.entries()) {
    json ej = to_json(*e);
    std::string digest = fnv1a_hex(ej.dump());
    entries.push_back(json{{"key", key}, {"digest", digest}, {"epoly", std::move(ej)}});
  }
  json doc{{"format", kCacheFormat}, {"entries", std::move(entries)}};
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write cache " + path);
  out << doc.dump() << '\n';
}

}  // namespace hop::io
