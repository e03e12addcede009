#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace hop {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<int>;
using Complex = std::complex<double>;

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws ConfigError on junk.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Lexicographic comparison; mpq_class has no operator<=> of its own.
struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

RatVec to_ratvec(const IntVec& v);
std::vector<double> to_doubles(const RatVec& v);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

}  // namespace hop
