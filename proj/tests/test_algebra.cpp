#include "hop/algebra.hpp"
#include "hop/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hop;

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars, int degree) {
  std::uniform_int_distribution<int> c(-5, 5);
  MultiPoly p(nvars);
  for (int d = 0; d <= degree; ++d)
    for (const auto& e : monomial_basis(nvars, d)) p.add_term(e, make_rational(c(rng), 1 + (c(rng) + 5) % 3));
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("0.5"), ConfigError);
  CHECK_THROWS_AS(parse_rational(""), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ConfigError);
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("monomial basis sizes") {
  CHECK(monomial_basis(1, 7).size() == 1);
  CHECK(monomial_basis(2, 8).size() == 9);
  CHECK(monomial_basis(3, 30).size() == 496);
}

TEST_CASE("multivariate arithmetic by hand") {
  // (x + y)^2 = x^2 + 2xy + y^2
  MultiPoly s = MultiPoly::linear({Rational(1), Rational(1)});
  MultiPoly sq = s * s;
  CHECK(sq.coeff({2, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK(sq.coeff({0, 2}) == 1);
  CHECK(sq.degree() == 2);
  CHECK(sq.is_homogeneous(2));
  CHECK((sq - sq).is_zero());
  CHECK(sq.derivative(0) == MultiPoly::linear({Rational(2), Rational(2)}));
  CHECK(sq.evaluate(RatVec{Rational(1, 2), Rational(1, 3)}) == Rational(25, 36));
  CHECK(sq.directional_derivative({Rational(1), Rational(-1)}).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    MultiPoly p = random_poly(rng, 2, 3), q = random_poly(rng, 2, 2);
    RatVec x{make_rational(t + 1, 3), make_rational(-2, t + 2)};
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
  }
}

TEST_CASE("reflecting twice is the identity and agrees with pointwise reflection") {
  std::mt19937 rng(5);
  for (const char* code : {"A2", "B2", "G2"}) {
    auto R = RootSystem::from_code(code);
    MultiPoly p = random_poly(rng, 2, 4);
    RatVec x{Rational(2, 3), Rational(-7, 5)};
    for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
      CHECK(reflect_poly(R, j, reflect_poly(R, j, p)) == p);
      CHECK(reflect_poly(R, j, p).evaluate(x) == p.evaluate(oracle::reflect(R, x, oracle::root(R, j))));
    }
  }
}

TEST_CASE("divided difference lowers degree by one and is exact") {
  std::mt19937 rng(7);
  for (const char* code : {"A2", "B2", "G2"}) {
    auto R = RootSystem::from_code(code);
    for (int d = 1; d <= 5; ++d) {
      MultiPoly p(2);
      for (const auto& e : monomial_basis(2, d)) p.add_term(e, Rational(static_cast<long>(rng() % 7) - 3));
      RatVec x{Rational(3, 11), Rational(5, 13)};
      for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
        MultiPoly q = divided_difference(R, j, p);
        CHECK((q.is_zero() || q.is_homogeneous(d - 1)));
        RatVec a = oracle::root(R, j);
        Rational expect = (p.evaluate(x) - p.evaluate(oracle::reflect(R, x, a))) / R.inner(a, x);
        CHECK(q.evaluate(x) == expect);
      }
    }
  }
}

TEST_CASE("division by a non-divisor is an invariant violation") {
  MultiPoly p = MultiPoly::monomial({1, 0}) + MultiPoly::constant(2, Rational(1));
  CHECK_THROWS_AS(divide_by_linear_form(p, {Rational(1), Rational(1)}), InvariantViolation);
  MultiPoly xy = MultiPoly::monomial({1, 1});
  CHECK(divide_by_linear_form(xy, {Rational(0), Rational(2)}) == MultiPoly::monomial({1, 0}, Rational(1, 2)));
}

TEST_CASE("trigonometric polynomial products and evaluation") {
  auto R = RootSystem::from_code("A1");
  TrigPoly ch = TrigPoly::exponential(Weight{{1}}, Rational(1, 2)) + TrigPoly::exponential(Weight{{-1}}, Rational(1, 2));
  TrigPoly sq = ch * ch;  // cosh^2 = (cosh 2z + 1)/2
  CHECK(sq.coeff(Weight{{2}}) == Rational(1, 4));
  CHECK(sq.coeff(Weight{{0}}) == Rational(1, 2));
  CHECK(sq.value_at_zero() == 1);
  // e^{1} evaluates to e^{<omega, z>}; omega = alpha/2, and <omega, alpha/2> = 1
  ComplexPoint z = ComplexPoint::real(std::vector<double>{0.5});
  CHECK(std::abs(eval_trig(R, ch, z) - std::cosh(1.0)) < 1e-14);
  CHECK(std::abs(eval_trig(R, ch, z) - Complex(1.5430806348, 0)) < 1e-10);
  auto A2 = RootSystem::from_code("A2");
  TrigPoly f = TrigPoly::exponential(Weight{{1, 0}}, Rational(2)) + TrigPoly::exponential(Weight{{-1, 2}}, Rational(-1, 3));
  std::vector<Complex> zz{Complex(0.3, -0.2), Complex(-0.7, 0.4)};
  CHECK(std::abs(eval_trig(A2, f, ComplexPoint{zz}) - oracle::eval(A2, f, zz)) < 1e-13);
}

TEST_CASE("evaluation overflow is a resource limit") {
  auto R = RootSystem::from_code("A1");
  TrigPoly f = TrigPoly::exponential(Weight{{1000}});
  CHECK_THROWS_AS(eval_trig(R, f, ComplexPoint::real(std::vector<double>{1.0})), ResourceLimit);
}
