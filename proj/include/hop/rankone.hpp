#pragma once

// Closed-form A1 formulas: Gauss 2F1, renormalized Gegenbauer polynomials
// Q_n^k(x) = 2F1(n + 2k, -n; k + 1/2; (1 - x)/2), the explicit G(n~, z), and
// the normalized Bessel function j_alpha with j_alpha(0) = 1.
// TrigPoly output is over the A1 weight lattice Z, where e^1 stands for e^z.

#include "hop/algebra.hpp"
#include "hop/rational.hpp"

#include <optional>
#include <vector>

namespace hop::rankone {

/// Exact value of a terminating series (a or b a nonpositive integer).
/// Throws ConfigError if the series does not terminate or hits c in -Z_+ first.
Rational hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c, const Rational& u);

/// Floating 2F1; terminating series are summed in full, otherwise |u| < 1 is required.
Complex hyp2f1(double a, double b, double c, Complex u);

/// Coefficients of Q_n^k as a polynomial in x (index = power).
std::vector<Rational> gegenbauer_coeffs(int n, const Rational& k);
Rational gegenbauer_Q(int n, const Rational& k, const Rational& x);
Complex gegenbauer_Q(int n, double k, Complex x);
/// Q_n^k evaluated through u = (1 - x)/2 directly (better conditioned near x = 1).
Complex gegenbauer_Q_at_u(int n, double k, Complex u);

/// Shifted spectral parameter n~ = n + k (n > 0) or n - k (n <= 0).
Rational shifted_n(int n, const Rational& k);

/// G(n~, z) = Q_|n|^k(cosh z) + (n~ + k)/(2k + 1) sinh z Q_{|n|-1}^{k+1}(cosh z).
Complex closed_E(int n, double k, Complex z);
/// The same as an exact TrigPoly over A1 weights (cosh, sinh expanded in e^{+-z}).
TrigPoly closed_E_trig(int n, const Rational& k);
/// Q_n^k(cosh z) as an exact TrigPoly.
TrigPoly gegenbauer_trig(int n, const Rational& k);

/// j_alpha(z) = Gamma(alpha+1) sum (-1)^m (z/2)^{2m} / (m! Gamma(m+alpha+1)).
/// Requires alpha > -1 and |z| <= 50.
Complex bessel_j(double alpha, Complex z);

struct LimitSample {
  double approx;
  double reference;
  double error;
};

/// (Q_n^k(cos(z/n)), j_{k-1/2}(z), |difference|).
LimitSample gegenbauer_bessel_limit(double k, double z, int n);

}  // namespace hop::rankone
