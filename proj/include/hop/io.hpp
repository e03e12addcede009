#pragma once

// Canonical JSON/CSV forms. Exact values are written as decimal strings
// (numerator, denominator) so big integers survive any JSON reader.
// Maps are emitted in key order, so equal inputs give byte-identical output.

#include "hop/cherednik.hpp"
#include "hop/dunkl.hpp"
#include "hop/limits.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace hop::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);  // {"numerator": "p", "denominator": "q"}
Rational rational_from_json(const json& j);
json to_json(const RatVec& v);    // ["p/q", ...]
json to_json(const Complex& c);   // {"re": x, "im": y}

json to_json(const MultiPoly& p);  // [{"exponents": [...], "numerator", "denominator"}, ...]
json to_json(const TrigPoly& f);   // [{"coords": [...], "numerator", "denominator"}, ...]
TrigPoly trig_from_json(const json& j);

json to_json(const EPoly& e);
EPoly epoly_from_json(const json& j);

json to_json(const IntertwinerStage& s);
json to_json(const DiscreteMeasure& mu);
json to_json(const ConvergenceTable& t);

/// printf %.12g; "nan" for NaN.
std::string format_double(double x);

/// Columns: table,n,z1_re,z1_im,...,zr_re,zr_im,approx_re,approx_im,reference_re,reference_im,error,failure
void write_csv_header(std::ostream& os, int rank);
void write_csv_rows(std::ostream& os, const ConvergenceTable& t);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Persistent EPoly cache:
///   {"format": "hop-epoly-cache/1",
///    "entries": [{"key": ..., "digest": fnv1a(dump(epoly)), "epoly": {...}}, ...]}
/// Loading verifies every digest and throws IntegrityError on mismatch or
/// malformed content. Entries already present in `cache` are kept.
void load_cache(const std::string& path, EPolyCache& cache);
void save_cache(const std::string& path, const EPolyCache& cache);

}  // namespace hop::io
