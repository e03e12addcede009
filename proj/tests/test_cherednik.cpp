#include "hop/cherednik.hpp"
#include "hop/errors.hpp"
#include "hop/rankone.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace hop;

namespace {

Weight w(IntVec c) { return Weight{std::move(c)}; }

std::vector<Complex> sample_z(std::mt19937& rng, int rank) {
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  std::vector<Complex> z;
  for (int i = 0; i < rank; ++i) z.emplace_back(u(rng), u(rng));
  return z;
}

}  // namespace

TEST_CASE("Cherednik operator on A1 exponentials, k = 1/2") {
  auto R = RootSystem::from_code("A1");
  auto k = Multiplicity::uniform(R, Rational(1, 2));
  RatVec xi{Rational(1, 2)};  // xi = omega; <omega, omega> = 1, <alpha, omega> = 2, <rho, omega> = 1/2
  // D e^1 = (1 + 1 - 1/2) e^1
  TrigPoly d1 = apply_cherednik(R, k, xi, TrigPoly::exponential(w({1})));
  CHECK(d1 == TrigPoly::exponential(w({1}), Rational(3, 2)));
  // D e^{-1} = (-1 - 1/2) e^{-1} - e^{1}
  TrigPoly dm = apply_cherednik(R, k, xi, TrigPoly::exponential(w({-1})));
  CHECK(dm == TrigPoly::exponential(w({-1}), Rational(-3, 2)) + TrigPoly::exponential(w({1}), Rational(-1)));
  // D 1 = -1/2
  CHECK(apply_cherednik(R, k, xi, TrigPoly::constant(1, Rational(1))) == TrigPoly::constant(1, Rational(-1, 2)));
}

TEST_CASE("Cherednik operator against direct evaluation at sample points") {
  std::mt19937 rng(17);
  for (const char* code : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(code);
    auto R = RootSystem::from_code(code);
    std::vector<Rational> per(R.num_root_orbits());
    for (std::size_t i = 0; i < per.size(); ++i) per[i] = make_rational(2 * i + 1, 3);
    Multiplicity k(R, per);
    TrigPoly f;
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 6; ++t) {
      Weight nu = w(IntVec(R.rank()));
      for (auto& x : nu.coords) x = c(rng);
      f.add_term(nu, make_rational(c(rng), 2));
    }
    for (int i = 0; i < R.rank(); ++i) {
      RatVec xi(R.rank(), Rational(0));
      xi[i] = 1;
      TrigPoly g = apply_cherednik(R, k, xi, f);
      for (int s = 0; s < 3; ++s) {
        auto z = sample_z(rng, R.rank());
        const Complex want = oracle::cherednik_at(R, k, xi, f, z);
        CHECK(std::abs(oracle::eval(R, g, z) - want) < 1e-9 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("E_{-1} on A1 at k = 1/2 by hand") {
  auto R = RootSystem::from_code("A1");
  auto e = compute_E(R, Multiplicity::uniform(R, Rational(1, 2)), w({-1}));
  CHECK(e.a == TrigPoly::exponential(w({-1})) + TrigPoly::exponential(w({1}), Rational(1, 3)));
  CHECK(e.c == Rational(4, 3));
  CHECK(e.b.coeff(w({-1})) == Rational(3, 4));
  CHECK(e.b.coeff(w({1})) == Rational(1, 4));
}

TEST_CASE("E_0 is constant") {
  for (const char* code : {"A1", "A2", "G2"}) {
    auto R = RootSystem::from_code(code);
    auto e = compute_E(R, Multiplicity::uniform(R, Rational(1)), w(IntVec(R.rank(), 0)));
    CHECK(e.a == TrigPoly::constant(R.rank(), Rational(1)));
    CHECK(e.c == 1);
  }
}

TEST_CASE("k = 0 gives plain exponentials") {
  for (const char* code : {"A2", "B2", "G2"}) {
    auto R = RootSystem::from_code(code);
    for (auto lam : {w({1, -2}), w({-1, 1}), w({2, 1})}) {
      auto e = compute_E(R, Multiplicity::uniform(R, Rational(0)), lam);
      CHECK(e.a == TrigPoly::exponential(lam));
      CHECK(e.c == 1);
    }
  }
}

TEST_CASE("rank one against the closed form, exactly") {
  auto R = RootSystem::from_code("A1");
  for (auto k : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
    for (int n = -8; n <= 8; ++n) {
      CAPTURE(n);
      auto e = compute_E(R, Multiplicity::uniform(R, k), w({n}));
      CHECK(e.b == rankone::closed_E_trig(n, k));
    }
  }
}

TEST_CASE("eigenfunction equation by direct evaluation") {
  std::mt19937 rng(23);
  for (const char* code : {"A2", "B2", "G2"}) {
    CAPTURE(code);
    auto R = RootSystem::from_code(code);
    Multiplicity k(R, std::vector<Rational>(R.num_root_orbits(), Rational(1, 2)));
    if (R.num_root_orbits() == 2) k = Multiplicity(R, {Rational(1, 2), Rational(3, 2)});
    for (auto lam : {w({1, 0}), w({-1, 1}), w({0, -2}), w({2, -1})}) {
      auto e = compute_E(R, k, lam);
      for (int i = 0; i < R.rank(); ++i) {
        RatVec xi(R.rank(), Rational(0));
        xi[i] = 1;
        const double ev = R.inner(e.spectrum, xi).get_d();
        auto z = sample_z(rng, R.rank());
        Complex lhs = oracle::cherednik_at(R, k, xi, e.a, z);
        Complex rhs = ev * oracle::eval(R, e.a, z);
        CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
      }
      for (int d = 0; d < R.rank(); ++d) CHECK(eigen_residual(R, k, e, d).is_zero());
    }
  }
}

TEST_CASE("positivity, normalization and leading coefficient") {
  auto R = RootSystem::from_code("B2");
  Multiplicity k(R, {Rational(1, 2), Rational(5, 2)});
  for (auto lam : {w({2, -3}), w({-2, 1}), w({3, 3})}) {
    auto e = compute_E(R, k, lam);
    auto rep = check_positivity(e);
    CHECK(rep.ok());
    CHECK(e.a.coeff(lam) == 1);
    CHECK(e.b.value_at_zero() == 1);
    CHECK(e.a.size() <= e.support.size());
  }
}

TEST_CASE("group case: F at k = 1 is the normalized Weyl character") {
  std::mt19937 rng(29);
  for (const char* code : {"A2", "B2", "G2"}) {
    CAPTURE(code);
    auto R = RootSystem::from_code(code);
    auto k = Multiplicity::uniform(R, Rational(1));
    for (auto lam : {w({1, 0}), w({0, 1}), w({2, 1}), w({1, 3})}) {
      auto e = compute_E(R, k, lam);
      const double dim = oracle::weyl_dimension(R, lam).get_d();
      for (int s = 0; s < 3; ++s) {
        auto z = sample_z(rng, R.rank());
        Complex f = eval_F(R, e, ComplexPoint{z});
        Complex chi = oracle::weyl_character(R, lam, z) / dim;
        CHECK(std::abs(f - chi) < 1e-9 * std::max(1.0, std::abs(chi)));
      }
    }
  }
}

TEST_CASE("F at k = 0 is the orbit average of exponentials") {
  auto R = RootSystem::from_code("G2");
  Weight lam = w({1, 1});
  auto e = compute_E(R, Multiplicity::uniform(R, Rational(0)), lam);
  std::vector<Complex> z{Complex(0.2, 0.1), Complex(-0.3, 0.05)};
  Complex avg = 0;
  for (const auto& g : R.weyl()) avg += std::exp(oracle::pair(R, R.to_point(R.apply(g, lam)), z));
  avg /= double(R.weyl_order());
  CHECK(std::abs(eval_F(R, e, ComplexPoint{z}) - avg) < 1e-12);
  CHECK(std::abs(eval_F(R, e, ComplexPoint{std::vector<Complex>(2)}) - 1.0) < 1e-14);
}

TEST_CASE("symmetrization needs a dominant weight") {
  auto R = RootSystem::from_code("A2");
  auto e = compute_E(R, Multiplicity::uniform(R, Rational(1)), w({-1, 0}));
  CHECK_THROWS_AS(symmetrize_P(R, e), ConfigError);
}

TEST_CASE("spectral orbit condition on dominant weights, including singular ones") {
  for (const char* code : {"A2", "B2", "G2"}) {
    auto R = RootSystem::from_code(code);
    auto k = Multiplicity::uniform(R, Rational(3, 2));
    for (auto lam : {w({0, 0}), w({1, 0}), w({0, 2}), w({3, 1})}) {
      CHECK(spectral_orbit_check(R, k, lam));
      RatVec shifted = R.to_point(lam);
      RatVec rh = rho(R, k);
      for (int i = 0; i < R.rank(); ++i) shifted[i] += rh[i];
      CHECK(oracle::orbit(R, shifted).count(tilde(R, k, lam)) == 1);
    }
  }
}

TEST_CASE("downset limit surfaces as a resource limit") {
  auto R = RootSystem::from_code("A2");
  SolveOptions opts;
  opts.downset_limit = 10;
  CHECK_THROWS_AS(compute_E(R, Multiplicity::uniform(R, Rational(1)), w({4, 4}), opts), ResourceLimit);
}

TEST_CASE("cache is write-once under concurrent access") {
  auto R = RootSystem::from_code("A2");
  auto k = Multiplicity::uniform(R, Rational(1, 2));
  EPolyCache cache;
  std::vector<EPolyCache::Ptr> got(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { got[t] = cache.get_or_compute(R, k, w({2, 1})); });
  for (auto& th : threads) th.join();
  CHECK(cache.size() == 1);
  for (auto& p : got) CHECK(p == got[0]);
  CHECK(cache.find(EPolyCache::key(R, k, w({2, 1}))) == got[0]);
  CHECK(cache.find(EPolyCache::key(R, k, w({1, 2}))) == nullptr);
}
