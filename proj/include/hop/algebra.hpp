#pragma once

// Sparse exact polynomials.
//
// MultiPoly lives on the ambient space: exponents of the simple-root
// coordinate functions x_1..x_r. TrigPoly lives on the weight lattice: a
// finite combination of exponentials e^nu. Coefficients are GMP rationals and
// zero coefficients are never stored, so structural equality is mathematical
// equality.

#include "hop/rational.hpp"
#include "hop/rootsys.hpp"

#include <map>
#include <vector>

namespace hop {

class MultiPoly {
 public:
  using Exponent = IntVec;
  using Terms = std::map<Exponent, Rational>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly monomial(Exponent e, const Rational& c = Rational(1));
  /// sum_i coeffs[i] * x_i
  static MultiPoly linear(const RatVec& coeffs);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int deg) const;
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  MultiPoly derivative(int var) const;
  /// d/dxi with xi in simple-root coordinates.
  MultiPoly directional_derivative(const RatVec& xi) const;
  /// x -> p(M x) for an integer r x r row-major matrix.
  MultiPoly compose_linear(const IntVec& matrix) const;

  Rational evaluate(const RatVec& x) const;
  Complex evaluate(const std::vector<Complex>& x) const;

 private:
  int nvars_;
  Terms terms_;
};

/// All exponents of total degree n in r variables, in a fixed canonical order.
std::vector<MultiPoly::Exponent> monomial_basis(int nvars, int degree);

class TrigPoly {
 public:
  using Terms = std::map<Weight, Rational>;

  TrigPoly() = default;
  static TrigPoly exponential(const Weight& nu, const Rational& c = Rational(1));
  static TrigPoly constant(int rank, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Weight& nu) const;
  /// Sum of coefficients, i.e. the value at z = 0.
  Rational value_at_zero() const;

  void add_term(const Weight& nu, const Rational& c);

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(const Rational& c);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const Rational& c) { return a *= c; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  bool operator==(const TrigPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// z in the complexified ambient space, simple-root coordinates.
struct ComplexPoint {
  std::vector<Complex> coords;

  static ComplexPoint real(const RatVec& x);
  static ComplexPoint real(const std::vector<double>& x);
  ComplexPoint scaled(double s) const;
  bool is_zero() const;
};

/// <point, z> through the Gram matrix.
Complex pairing(const RootSystem& R, const Point& x, const ComplexPoint& z);

/// sum_nu f(nu) exp(<nu, z>). Throws ResourceLimit if an exponent would overflow a double.
Complex eval_trig(const RootSystem& R, const TrigPoly& f, const ComplexPoint& z);

/// p o sigma_alpha for positive root index j.
MultiPoly reflect_poly(const RootSystem& R, std::size_t j, const MultiPoly& p);

/// (p - p o sigma_alpha) / <alpha, .>; the division is exact or this throws InvariantViolation.
MultiPoly divided_difference(const RootSystem& R, std::size_t j, const MultiPoly& p);

/// Exact quotient p / l for a linear form l = sum form[i] x_i; throws if the remainder is nonzero.
MultiPoly divide_by_linear_form(const MultiPoly& p, const RatVec& form);

}  // namespace hop
