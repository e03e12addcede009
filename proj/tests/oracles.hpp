#pragma once

// Reference implementations used only by tests. They recompute things the
// library does through different routes: textbook Cartan data, brute-force
// group closure, direct floating evaluation of operators at sample points.

#include "hop/algebra.hpp"
#include "hop/rootsys.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using hop::Complex;
using hop::Rational;
using hop::RatVec;
using IntMat = std::vector<std::vector<int>>;

// A[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering.
inline IntMat cartan(const std::string& code) {
  if (code == "A1") return {{2}};
  if (code == "A2") return {{2, -1}, {-1, 2}};
  if (code == "B2") return {{2, -2}, {-1, 2}};  // alpha_2 short
  if (code == "C2") return {{2, -1}, {-2, 2}};  // alpha_2 long
  if (code == "G2") return {{2, -1}, {-3, 2}};  // alpha_1 short
  if (code == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  if (code == "B3") return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  if (code == "C3") return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  if (code == "D4") return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  return {};
}

inline IntMat cartan_from_gram(const hop::RootSystem& R) {
  const int r = R.rank();
  IntMat a(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational q = 2 * R.gram()[i][j] / R.gram()[j][j];
      a[i][j] = static_cast<int>(q.get_num().get_si());
    }
  return a;
}

/// |W| by closing the simple reflections (as integer matrices on root coordinates) under products.
inline std::size_t weyl_order(const IntMat& A) {
  const int r = static_cast<int>(A.size());
  using M = std::vector<int>;
  std::vector<M> gens;
  for (int i = 0; i < r; ++i) {
    // s_i(alpha_j) = alpha_j - A[j][i] alpha_i; column j is the image of alpha_j.
    M g(r * r, 0);
    for (int j = 0; j < r; ++j) {
      g[j * r + j] += 1;
      g[i * r + j] -= A[j][i];
    }
    gens.push_back(g);
  }
  M id(r * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;
  std::set<M> seen{id};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        M p(r * r, 0);
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) p[a * r + b] += g[a * r + c] * m[c * r + b];
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Reflection of a point in the root with simple-root coordinates `alpha`.
inline RatVec reflect(const hop::RootSystem& R, const RatVec& x, const RatVec& alpha) {
  Rational f = 2 * R.inner(x, alpha) / R.inner(alpha, alpha);
  RatVec y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= f * alpha[i];
  return y;
}

inline RatVec root(const hop::RootSystem& R, std::size_t j) { return hop::to_ratvec(R.positive_roots()[j]); }

/// Orbit of a point by breadth-first search over all positive-root reflections.
inline std::set<RatVec, hop::RatVecLess> orbit(const hop::RootSystem& R, const RatVec& x) {
  std::set<RatVec, hop::RatVecLess> seen{x};
  std::vector<RatVec> frontier{x};
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& p : frontier)
      for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
        RatVec q = reflect(R, p, root(R, j));
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// <x, z> for a rational point x and complex z, both in simple-root coordinates.
inline Complex pair(const hop::RootSystem& R, const RatVec& x, const std::vector<Complex>& z) {
  Complex s = 0;
  for (int i = 0; i < R.rank(); ++i)
    for (int j = 0; j < R.rank(); ++j) s += x[i].get_d() * R.gram()[i][j].get_d() * z[j];
  return s;
}

inline std::vector<Complex> reflect(const hop::RootSystem& R, const std::vector<Complex>& z, const RatVec& alpha) {
  Complex f = 2.0 * pair(R, alpha, z) / R.inner(alpha, alpha).get_d();
  auto y = z;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= f * alpha[i].get_d();
  return y;
}

/// sum c_nu e^{<nu, z>} by direct summation.
inline Complex eval(const hop::RootSystem& R, const hop::TrigPoly& f, const std::vector<Complex>& z) {
  Complex s = 0;
  for (const auto& [nu, c] : f.terms()) s += c.get_d() * std::exp(pair(R, R.to_point(nu), z));
  return s;
}

inline Rational k_on(const hop::Multiplicity& k, std::size_t j) { return k.on_root(j); }

/// (D_xi f)(z) = d_xi f(z) + sum k_a <a, xi> (f(z) - f(s_a z)) / (1 - e^{-<a, z>}) - <rho(k), xi> f(z).
inline Complex cherednik_at(const hop::RootSystem& R, const hop::Multiplicity& k, const RatVec& xi,
                            const hop::TrigPoly& f, const std::vector<Complex>& z) {
  Complex d = 0;
  for (const auto& [nu, c] : f.terms()) {
    RatVec p = R.to_point(nu);
    d += c.get_d() * R.inner(p, xi).get_d() * std::exp(pair(R, p, z));
  }
  const Complex fz = eval(R, f, z);
  RatVec rho(R.rank(), Rational(0));
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
    RatVec a = root(R, j);
    for (int i = 0; i < R.rank(); ++i) rho[i] += k_on(k, j) * a[i] / 2;
    const double w = Rational(k_on(k, j) * R.inner(a, xi)).get_d();
    if (w == 0) continue;
    d += w * (fz - eval(R, f, reflect(R, z, a))) / (1.0 - std::exp(-pair(R, a, z)));
  }
  return d - R.inner(rho, xi).get_d() * fz;
}

/// (T_xi p)(x) at a rational point, exactly.
inline Rational dunkl_at(const hop::RootSystem& R, const hop::Multiplicity& k, const RatVec& xi,
                         const hop::MultiPoly& p, const RatVec& x) {
  Rational out = p.directional_derivative(xi).evaluate(x);
  const Rational px = p.evaluate(x);
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
    RatVec a = root(R, j);
    Rational w = k_on(k, j) * R.inner(a, xi);
    if (sgn(w) == 0) continue;
    out += w * (px - p.evaluate(reflect(R, x, a))) / R.inner(a, x);
  }
  return out;
}

/// Weyl character chi_lambda(z) by the Weyl character formula, z generic.
inline Complex weyl_character(const hop::RootSystem& R, const hop::Weight& lambda, const std::vector<Complex>& z) {
  RatVec rho(R.rank(), Rational(0));
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j)
    for (int i = 0; i < R.rank(); ++i) rho[i] += Rational(R.positive_roots()[j][i]) / 2;
  RatVec lr = R.to_point(lambda);
  for (int i = 0; i < R.rank(); ++i) lr[i] += rho[i];
  Complex num = 0, den = 0;
  for (const auto& w : R.weyl()) {
    // det of the root-coordinate matrix is the sign of w.
    int sign = w.word.size() % 2 ? -1 : 1;
    num += double(sign) * std::exp(pair(R, R.apply(w, lr), z));
    den += double(sign) * std::exp(pair(R, R.apply(w, rho), z));
  }
  return num / den;
}

/// Weyl dimension formula.
inline Rational weyl_dimension(const hop::RootSystem& R, const hop::Weight& lambda) {
  RatVec rho(R.rank(), Rational(0));
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j)
    for (int i = 0; i < R.rank(); ++i) rho[i] += Rational(R.positive_roots()[j][i]) / 2;
  RatVec lr = R.to_point(lambda);
  for (int i = 0; i < R.rank(); ++i) lr[i] += rho[i];
  Rational d(1);
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j) d *= R.inner(lr, root(R, j)) / R.inner(rho, root(R, j));
  return d;
}

/// Pochhammer (a)_n.
inline Rational poch(const Rational& a, int n) {
  Rational p(1);
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

}  // namespace oracle
