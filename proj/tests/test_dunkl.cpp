#include "hop/dunkl.hpp"
#include "hop/errors.hpp"
#include "hop/rankone.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hop;

namespace {

MultiPoly x1(int r, int i, int p = 1) {
  IntVec e(r, 0);
  e[i] = p;
  return MultiPoly::monomial(e);
}

RatVec unit(int r, int i) {
  RatVec v(r, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("A1 Dunkl and intertwiner by hand") {
  auto R = RootSystem::from_code("A1");
  for (auto k : {Rational(0), Rational(1, 2), Rational(3)}) {
    auto mk = Multiplicity::uniform(R, k);
    // The variable is the alpha-coordinate; T along alpha of x is 1 + 2k.
    CHECK(apply_dunkl(R, mk, {Rational(1)}, x1(1, 0)) == MultiPoly::constant(1, 1 + 2 * k));
    Intertwiner V(R, mk);
    CHECK(V.apply(x1(1, 0)) == x1(1, 0) * Rational(1 / (1 + 2 * k)));
    CHECK(V.apply(x1(1, 0, 2)) == x1(1, 0, 2) * Rational(1 / (1 + 2 * k)));
  }
}

TEST_CASE("A1 intertwiner coefficients against the Pochhammer formula") {
  auto R = RootSystem::from_code("A1");
  for (auto k : {Rational(1, 2), Rational(1), Rational(5, 2)}) {
    Intertwiner V(R, Multiplicity::uniform(R, k));
    for (int n = 0; n <= 10; ++n) {
      const int m = n / 2;
      const int top = n % 2 ? m + 1 : m;
      Rational cn = oracle::poch(Rational(1, 2), top) / oracle::poch(k + Rational(1, 2), top);
      CHECK(V.apply(x1(1, 0, n)) == x1(1, 0, n) * cn);
    }
  }
}

TEST_CASE("Dunkl operators against the pointwise formula") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const char* code : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(code);
    auto R = RootSystem::from_code(code);
    const int r = R.rank();
    std::vector<Rational> per(R.num_root_orbits());
    for (std::size_t i = 0; i < per.size(); ++i) per[i] = make_rational(i + 1, 2);
    Multiplicity k(R, per);
    MultiPoly p(r);
    for (int d = 0; d <= 3; ++d)
      for (const auto& e : monomial_basis(r, d)) p.add_term(e, Rational(c(rng)));
    RatVec x(r);
    for (int i = 0; i < r; ++i) x[i] = make_rational(2 * i + 3, 7 + i);
    for (int i = 0; i < r; ++i) {
      RatVec xi = unit(r, i);
      CHECK(apply_dunkl(R, k, xi, p).evaluate(x) == oracle::dunkl_at(R, k, xi, p, x));
    }
  }
}

TEST_CASE("Dunkl operators commute") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const char* code : {"A2", "B2", "G2"}) {
    auto R = RootSystem::from_code(code);
    Multiplicity k = Multiplicity::uniform(R, Rational(2, 3));
    if (R.num_root_orbits() == 2) k = Multiplicity(R, {Rational(1, 3), Rational(5, 4)});
    MultiPoly p(2);
    for (int d = 0; d <= 5; ++d)
      for (const auto& e : monomial_basis(2, d)) p.add_term(e, Rational(c(rng)));
    auto t0 = [&](const MultiPoly& q) { return apply_dunkl(R, k, unit(2, 0), q); };
    auto t1 = [&](const MultiPoly& q) { return apply_dunkl(R, k, unit(2, 1), q); };
    CHECK(t0(t1(p)) == t1(t0(p)));
  }
}

TEST_CASE("k = 0: Dunkl operators are derivatives and V is the identity") {
  auto R = RootSystem::from_code("B2");
  auto k = Multiplicity::uniform(R, Rational(0));
  Intertwiner V(R, k);
  for (int d = 0; d <= 4; ++d)
    for (const auto& e : monomial_basis(2, d)) {
      MultiPoly p = MultiPoly::monomial(e);
      CHECK(V.apply(p) == p);
      CHECK(apply_dunkl(R, k, unit(2, 1), p) == p.derivative(1));
    }
}

TEST_CASE("intertwining identity and degree preservation") {
  for (const char* code : {"A2", "G2"}) {
    auto R = RootSystem::from_code(code);
    auto k = Multiplicity::uniform(R, Rational(1, 2));
    Intertwiner V(R, k);
    for (int d = 0; d <= 5; ++d)
      for (const auto& e : monomial_basis(2, d)) {
        MultiPoly p = MultiPoly::monomial(e);
        MultiPoly vp = V.apply(p);
        CHECK(vp.is_homogeneous(d));
        for (int j = 0; j < 2; ++j) CHECK(apply_dunkl(R, k, unit(2, j), vp) == V.apply(p.derivative(j)));
      }
    CHECK(V.built_degree() >= 5);
    CHECK(V.stage(3).basis.size() == 4);
  }
}

TEST_CASE("A1 kernel against the Bessel closed form") {
  // Exp(x, z) = j_{k-1/2}(i xz) + xz/(2k+1) j_{k+1/2}(i xz), xz = <x, z>
  auto R = RootSystem::from_code("A1");
  for (double kd : {0.5, 1.0, 2.5}) {
    auto k = Multiplicity::uniform(R, make_rational(static_cast<long>(kd * 2), 2));
    Intertwiner V(R, k);
    Point x{Rational(1, 2)};
    for (double t : {-1.0, -0.3, 0.4, 1.0}) {
      ComplexPoint z = ComplexPoint::real(std::vector<double>{t / 2});
      Complex s = pairing(R, x, z);
      Complex ref = rankone::bessel_j(kd - 0.5, Complex(0, 1) * s) +
                    s / (2 * kd + 1) * rankone::bessel_j(kd + 0.5, Complex(0, 1) * s);
      auto v = expw_truncated(V, x, z, 30);
      CHECK(std::abs(v.value - ref) < 1e-12);
      CHECK(v.tail < 1e-20);
    }
  }
}

TEST_CASE("kernel symmetries") {
  for (const char* code : {"A2", "B2"}) {
    auto R = RootSystem::from_code(code);
    auto k = Multiplicity::uniform(R, Rational(1, 2));
    Intertwiner V(R, k);
    Point x{Rational(1, 3), Rational(-1, 2)}, y{Rational(2, 5), Rational(1, 4)};
    auto exy = expw_truncated(V, x, ComplexPoint::real(y), 25).value;
    auto eyx = expw_truncated(V, y, ComplexPoint::real(x), 25).value;
    CHECK(std::abs(exy - eyx) < 1e-12);
    for (const auto& g : R.weyl()) {
      auto egg = expw_truncated(V, R.apply(g, x), ComplexPoint::real(R.apply(g, y)), 25).value;
      CHECK(std::abs(egg - exy) < 1e-12);
    }
    CHECK(std::abs(expw_truncated(V, x, ComplexPoint::real(Point(2, Rational(0))), 25).value - 1.0) < 1e-15);
  }
}

TEST_CASE("Bessel function at k = 0 is the orbit average") {
  auto R = RootSystem::from_code("A1");
  Intertwiner V(R, Multiplicity::uniform(R, Rational(0)));
  Point x{Rational(1, 2)};
  ComplexPoint z = ComplexPoint::real(std::vector<double>{0.5});  // <x, z> = 1
  auto jw = bessel_JW(V, x, z, 30);
  CHECK(std::abs(jw.value - 1.5430806348) < 1e-10);
  CHECK(std::abs(2.0 * jw.value - 3.0861612696) < 1e-10);
}

TEST_CASE("exact moments agree with the kernel pieces") {
  auto R = RootSystem::from_code("A1");
  auto k = Multiplicity::uniform(R, Rational(1, 2));
  Intertwiner V(R, k);
  Point x{Rational(1, 2)};
  RatVec z{Rational(1, 2)};  // <x, z> = 1
  // V(<., z>^m)(x) = c_m <x, z>^m
  CHECK(v_moment(V, x, z, 1) == Rational(1, 2));
  CHECK(v_moment(V, x, z, 2) == Rational(1, 2));
  CHECK(v_moment(V, x, z, 4) == Rational(3, 8));
  KernelSeries ks(V, x, 6);
  CHECK(ks.moment(z, 3) == v_moment(V, x, z, 3));
}
