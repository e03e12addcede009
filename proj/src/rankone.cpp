#include "hop/rankone.hpp"

#include "hop/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace hop::rankone {

namespace {

std::optional<long> nonpositive_integer(const Rational& q) {
  if (q.get_den() == 1 && sgn(q) <= 0 && q.get_num().fits_slong_p()) return -q.get_num().get_si();
  return std::nullopt;
}

std::optional<long> nonpositive_integer(double v) {
  double r = std::round(v);
  if (r <= 0.0 && std::abs(v - r) < 1e-12) return static_cast<long>(-r);
  return std::nullopt;
}

const Weight kPlus{{1}}, kMinus{{-1}};

TrigPoly cosh_trig() {
  TrigPoly f;
  f.add_term(kPlus, make_rational(1, 2));
  f.add_term(kMinus, make_rational(1, 2));
  return f;
}

TrigPoly sinh_trig() {
  TrigPoly f;
  f.add_term(kPlus, make_rational(1, 2));
  f.add_term(kMinus, make_rational(-1, 2));
  return f;
}

}  // namespace

Rational hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c, const Rational& u) {
  auto na = nonpositive_integer(a), nb = nonpositive_integer(b);
  if (!na && !nb) throw ConfigError("hyp2f1_terminating: neither a nor b is a nonpositive integer");
  long terms = std::min(na.value_or(nb.value_or(0)), nb.value_or(na.value_or(0)));
  Rational sum(1), term(1);
  for (long j = 0; j < terms; ++j) {
    Rational cj = c + j;
    if (sgn(cj) == 0) throw ConfigError("hyp2f1_terminating: c hits a nonpositive integer first");
    term *= (a + j) * (b + j) / (cj * (j + 1));
    term *= u;
    sum += term;
  }
  return sum;
}

Complex hyp2f1(double a, double b, double c, Complex u) {
  auto na = nonpositive_integer(a), nb = nonpositive_integer(b);
  bool terminating = na || nb;
  if (!terminating && std::abs(u) >= 1.0)
    throw ConfigError("hyp2f1: non-terminating series needs |u| < 1");
  long limit = terminating ? std::min(na.value_or(*nb), nb.value_or(*na)) : 200000;
  Complex sum(1.0), term(1.0);
  for (long j = 0; j < limit; ++j) {
    double cj = c + static_cast<double>(j);
    if (cj == 0.0) throw ConfigError("hyp2f1: c hits a nonpositive integer");
    term *= (a + j) * (b + j) / (cj * (j + 1.0)) * u;
    sum += term;
    if (!terminating && std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

std::vector<Rational> gegenbauer_coeffs(int n, const Rational& k) {
  if (n < 0) return {};
  const Rational a = Rational(n) + 2 * k, b = Rational(-n), c = k + make_rational(1, 2);
  std::vector<Rational> poly(n + 1, Rational(0));
  std::vector<Rational> upow{Rational(1)};  // ((1 - x)/2)^j
  Rational t(1);
  for (int j = 0; j <= n; ++j) {
    for (std::size_t p = 0; p < upow.size(); ++p) poly[p] += t * upow[p];
    if (j == n) break;
    t *= (a + j) * (b + j) / ((c + j) * (j + 1));
    std::vector<Rational> next(upow.size() + 1, Rational(0));
    for (std::size_t p = 0; p < upow.size(); ++p) {
      next[p] += upow[p] / 2;
      next[p + 1] -= upow[p] / 2;
    }
    upow = std::move(next);
  }
  return poly;
}

Rational gegenbauer_Q(int n, const Rational& k, const Rational& x) {
  if (n < 0) return Rational(0);
  return hyp2f1_terminating(Rational(n) + 2 * k, Rational(-n), k + make_rational(1, 2), (1 - x) / 2);
}

Complex gegenbauer_Q_at_u(int n, double k, Complex u) {
  if (n < 0) return Complex(0.0);
  return hyp2f1(n + 2.0 * k, -static_cast<double>(n), k + 0.5, u);
}

Complex gegenbauer_Q(int n, double k, Complex x) { return gegenbauer_Q_at_u(n, k, (1.0 - x) / 2.0); }

Rational shifted_n(int n, const Rational& k) { return n > 0 ? Rational(n + k) : Rational(n - k); }

Complex closed_E(int n, double k, Complex z) {
  const int m = std::abs(n);
  double nt = n > 0 ? n + k : n - k;
  Complex ch = std::cosh(z);
  Complex out = gegenbauer_Q(m, k, ch);
  if (m > 0) out += (nt + k) / (2.0 * k + 1.0) * std::sinh(z) * gegenbauer_Q(m - 1, k + 1.0, ch);
  return out;
}

TrigPoly gegenbauer_trig(int n, const Rational& k) {
  if (n < 0) return {};
  auto coeffs = gegenbauer_coeffs(n, k);
  TrigPoly ch = cosh_trig();
  TrigPoly acc = TrigPoly::constant(1, coeffs.back());
  for (int p = n - 1; p >= 0; --p) {
    acc = acc * ch;
    acc += TrigPoly::constant(1, coeffs[p]);
  }
  return acc;
}

TrigPoly closed_E_trig(int n, const Rational& k) {
  const int m = std::abs(n);
  TrigPoly out = gegenbauer_trig(m, k);
  if (m > 0) {
    Rational f = (shifted_n(n, k) + k) / (2 * k + 1);
    TrigPoly tail = sinh_trig() * gegenbauer_trig(m - 1, k + 1);
    tail *= f;
    out += tail;
  }
  return out;
}

Complex bessel_j(double alpha, Complex z) {
  if (!(alpha > -1.0)) throw ConfigError("bessel_j needs alpha > -1");
  if (std::abs(z) > 50.0) throw ResourceLimit("bessel_j: |z| > 50 loses all precision to cancellation");
  const Complex q = -(z / 2.0) * (z / 2.0);
  Complex sum(1.0), term(1.0);
  for (int m = 0; m < 1000; ++m) {
    term *= q / ((m + 1.0) * (m + 1.0 + alpha));
    sum += term;
    if (m > std::abs(z) && std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

LimitSample gegenbauer_bessel_limit(double k, double z, int n) {
  double s = std::sin(z / (2.0 * n));
  double approx = gegenbauer_Q_at_u(n, k, Complex(s * s)).real();
  double ref = bessel_j(k - 0.5, Complex(z)).real();
  return {approx, ref, std::abs(approx - ref)};
}

}  // namespace hop::rankone
