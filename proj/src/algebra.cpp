#include "hop/algebra.hpp"

#include "hop/errors.hpp"

#include <cmath>
#include <functional>

namespace hop {

namespace {

constexpr double kMaxExponent = 700.0;

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms.erase(it);
}

}  // namespace

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponent e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(const RatVec& coeffs) {
  const int r = static_cast<int>(coeffs.size());
  MultiPoly p(r);
  for (int i = 0; i < r; ++i) {
    Exponent e(r, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous(int deg) const {
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (s != deg) return false;
  }
  return true;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) { accumulate(terms_, e, c); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.nvars_, b.nvars_));
  MultiPoly::Exponent e(out.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < out.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    out.add_term(f, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::directional_derivative(const RatVec& xi) const {
  MultiPoly out(nvars_);
  for (int i = 0; i < nvars_; ++i)
    if (sgn(xi[i]) != 0) out += derivative(i) * xi[i];
  return out;
}

MultiPoly MultiPoly::compose_linear(const IntVec& matrix) const {
  const int r = nvars_;
  // powers[i][m] = (sum_j M_ij x_j)^m, built on demand
  std::vector<std::vector<MultiPoly>> powers(r);
  auto power = [&](int i, int m) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) {
      pw.push_back(constant(r, Rational(1)));
    }
    if (static_cast<int>(pw.size()) <= m) {
      RatVec row(r);
      for (int j = 0; j < r; ++j) row[j] = matrix[i * r + j];
      MultiPoly lin = linear(row);
      while (static_cast<int>(pw.size()) <= m) pw.push_back(pw.back() * lin);
    }
    return pw[m];
  };
  MultiPoly out(r);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(r, c);
    for (int i = 0; i < r; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

Rational MultiPoly::evaluate(const RatVec& x) const {
  Rational s(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Complex MultiPoly::evaluate(const std::vector<Complex>& x) const {
  Complex s(0.0);
  for (const auto& [e, c] : terms_) {
    Complex t(c.get_d());
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= std::pow(x[i], e[i]);
    s += t;
  }
  return s;
}

std::vector<MultiPoly::Exponent> monomial_basis(int nvars, int degree) {
  std::vector<MultiPoly::Exponent> out;
  MultiPoly::Exponent e(nvars, 0);
  // Lexicographically descending in the leading variables.
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[var] = v;
      rec(var + 1, left - v);
    }
  };
  if (nvars == 0) return out;
  rec(0, degree);
  return out;
}

// ---------------------------------------------------------------- TrigPoly

TrigPoly TrigPoly::exponential(const Weight& nu, const Rational& c) {
  TrigPoly f;
  f.add_term(nu, c);
  return f;
}

TrigPoly TrigPoly::constant(int rank, const Rational& c) {
  return exponential(Weight{IntVec(rank, 0)}, c);
}

Rational TrigPoly::coeff(const Weight& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TrigPoly::value_at_zero() const {
  Rational s(0);
  for (const auto& [nu, c] : terms_) s += c;
  return s;
}

void TrigPoly::add_term(const Weight& nu, const Rational& c) { accumulate(terms_, nu, c); }

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  for (const auto& [nu, c] : o.terms_) accumulate(terms_, nu, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  for (const auto& [nu, c] : o.terms_) accumulate(terms_, nu, Rational(-c));
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, v] : terms_) v *= c;
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out;
  for (const auto& [na, ca] : a.terms_)
    for (const auto& [nb, cb] : b.terms_) {
      Weight s = na;
      for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += nb.coords[i];
      out.add_term(s, ca * cb);
    }
  return out;
}

// ---------------------------------------------------------------- evaluation

ComplexPoint ComplexPoint::real(const RatVec& x) {
  ComplexPoint z;
  for (const auto& q : x) z.coords.emplace_back(q.get_d(), 0.0);
  return z;
}

ComplexPoint ComplexPoint::real(const std::vector<double>& x) {
  ComplexPoint z;
  for (double v : x) z.coords.emplace_back(v, 0.0);
  return z;
}

ComplexPoint ComplexPoint::scaled(double s) const {
  ComplexPoint z = *this;
  for (auto& c : z.coords) c *= s;
  return z;
}

bool ComplexPoint::is_zero() const {
  for (const auto& c : coords)
    if (c != Complex(0.0)) return false;
  return true;
}

Complex pairing(const RootSystem& R, const Point& x, const ComplexPoint& z) {
  Complex s(0.0);
  for (int i = 0; i < R.rank(); ++i)
    for (int j = 0; j < R.rank(); ++j) s += Rational(x[i] * R.gram()[i][j]).get_d() * z.coords[j];
  return s;
}

Complex eval_trig(const RootSystem& R, const TrigPoly& f, const ComplexPoint& z) {
  const int r = R.rank();
  // <nu, z> = sum_i nu_i <omega_i, z>
  std::vector<Complex> omega_z(r);
  for (int i = 0; i < r; ++i) {
    Weight w{IntVec(r, 0)};
    w.coords[i] = 1;
    omega_z[i] = pairing(R, R.to_point(w), z);
  }
  Complex sum(0.0);
  for (const auto& [nu, c] : f.terms()) {
    Complex e(0.0);
    for (int i = 0; i < r; ++i) e += static_cast<double>(nu.coords[i]) * omega_z[i];
    if (e.real() > kMaxExponent)
      throw ResourceLimit("exp overflow in eval_trig at weight " + to_string(nu));
    sum += c.get_d() * std::exp(e);
  }
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
    throw ResourceLimit("eval_trig produced a non-finite value");
  return sum;
}

// ---------------------------------------------------------------- reflections

MultiPoly reflect_poly(const RootSystem& R, std::size_t j, const MultiPoly& p) {
  return p.compose_linear(R.reflection_matrix(j));
}

MultiPoly divide_by_linear_form(const MultiPoly& p, const RatVec& form) {
  const int r = p.nvars();
  int pivot = -1;
  for (int i = r - 1; i >= 0; --i)
    if (sgn(form[i]) != 0) pivot = i;
  if (pivot < 0) throw InvariantViolation("divided_difference_exact", "division by the zero form");
  MultiPoly rem = p, quot(r);
  while (true) {
    // Peel the term with the highest power of the pivot variable.
    const MultiPoly::Exponent* top = nullptr;
    for (const auto& [e, c] : rem.terms())
      if (e[pivot] > 0 && (!top || e[pivot] > (*top)[pivot])) top = &e;
    if (!top) break;
    MultiPoly::Exponent q = *top;
    --q[pivot];
    Rational c = rem.coeff(*top) / form[pivot];
    quot.add_term(q, c);
    for (int i = 0; i < r; ++i) {
      if (sgn(form[i]) == 0) continue;
      MultiPoly::Exponent t = q;
      ++t[i];
      rem.add_term(t, -c * form[i]);
    }
  }
  if (!rem.is_zero())
    throw InvariantViolation("divided_difference_exact", "nonzero remainder in linear division");
  return quot;
}

MultiPoly divided_difference(const RootSystem& R, std::size_t j, const MultiPoly& p) {
  MultiPoly diff = p - reflect_poly(R, j, p);
  if (diff.is_zero()) return MultiPoly(p.nvars());
  // <alpha, x> = sum_l (B alpha)_l x_l
  const auto& alpha = R.positive_roots()[j];
  RatVec form(R.rank(), Rational(0));
  for (int l = 0; l < R.rank(); ++l)
    for (int m = 0; m < R.rank(); ++m) form[l] += R.gram()[l][m] * alpha[m];
  return divide_by_linear_form(diff, form);
}

}  // namespace hop
