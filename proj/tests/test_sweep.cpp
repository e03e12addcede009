#include "hop/sweep.hpp"
#include "hop/errors.hpp"

#include <doctest.h>

#include <set>

using namespace hop;

TEST_CASE("sweep weights are exactly the weights with small downsets") {
  for (const char* code : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(code);
    auto R = RootSystem::from_code(code);
    const std::size_t limit = 25;
    auto ws = sweep_weights(R, limit);
    std::set<Weight> got(ws.begin(), ws.end());
    CHECK(got.size() == ws.size());
    // Brute force over a generous box.
    std::set<Weight> brute;
    const int B = R.rank() == 1 ? 40 : 12;
    IntVec cur(R.rank(), -B);
    while (true) {
      Weight nu{cur};
      try {
        if (downset(R, nu, DownsetOptions{limit}).size() <= limit) brute.insert(nu);
      } catch (const ResourceLimit&) {
      }
      int i = 0;
      while (i < R.rank() && ++cur[i] > B) cur[i] = -B, ++i;
      if (i == R.rank()) break;
    }
    CHECK(got == brute);
  }
}

TEST_CASE("positivity sweep: serial and parallel agree") {
  auto R = RootSystem::from_code("B2");
  Multiplicity k(R, {Rational(1, 2), Rational(1)});
  auto ws = sweep_weights(R, 20);
  EPolyCache cache;
  auto a = positivity_sweep(R, k, ws, Exec::Serial);
  auto b = positivity_sweep(R, k, ws, Exec::Parallel, &cache);
  REQUIRE(a.rows.size() == b.rows.size());
  CHECK(a.failures() == 0);
  CHECK(b.failures() == 0);
  CHECK(a.orbit_checks() == b.orbit_checks());
  CHECK(a.orbit_checks() > 0);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].lambda == b.rows[i].lambda);
    CHECK(a.rows[i].downset_size == b.rows[i].downset_size);
  }
  CHECK(cache.size() == ws.size());
}

TEST_CASE("hull lemma sweep and random agreement") {
  auto R = RootSystem::from_code("G2");
  auto ws = sweep_weights(R, 30);
  auto h = hull_lemma_sweep(R, ws, Exec::Parallel);
  CHECK(h.failures == 0);
  CHECK(h.points_checked > ws.size());
  auto s = hull_agreement(R, 200, 99, Exec::Serial);
  auto p = hull_agreement(R, 200, 99, Exec::Parallel);
  CHECK(s.agreements == 200);
  CHECK(p.agreements == 200);
  CHECK(s.inside == p.inside);
  // the sampler lands on both sides of the boundary
  CHECK(s.inside > 20);
  CHECK(s.inside < 180);
}

TEST_CASE("intertwiner identity check") {
  for (const char* code : {"A1", "B2"}) {
    auto R = RootSystem::from_code(code);
    Intertwiner V(R, Multiplicity::uniform(R, Rational(1)));
    auto r = intertwiner_identity_check(V, 5, Exec::Parallel);
    CHECK(r.failures == 0);
    CHECK(r.v_one_is_one);
    CHECK_FALSE(r.identity_stages);
    Intertwiner V0(R, Multiplicity::uniform(R, Rational(0)));
    CHECK(intertwiner_identity_check(V0, 5, Exec::Serial).identity_stages);
  }
}

TEST_CASE("rank-one oracle check") {
  auto r = rankone_oracle_check(Rational(1, 2), 4, 5, 1, Exec::Parallel);
  CHECK(r.polys_checked == 9);
  CHECK(r.coefficient_mismatches == 0);
  CHECK(r.f_samples == 25);
  CHECK(r.max_f_error < 1e-10);
}
