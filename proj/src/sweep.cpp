#include "hop/sweep.hpp"

#include "hop/errors.hpp"
#include "hop/rankone.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace hop {

namespace {

std::vector<Weight> dominant_level(int rank, int sum) {
  std::vector<Weight> out;
  IntVec c(rank, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank - 1) {
      c[i] = left;
      out.push_back(Weight{c});
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, sum);
  return out;
}

std::size_t downset_size_or_overflow(const RootSystem& R, const Weight& w, std::size_t limit) {
  try {
    return downset(R, w, DownsetOptions{limit}).size();
  } catch (const ResourceLimit&) {
    return limit + 1;
  }
}

}  // namespace

std::vector<Weight> sweep_weights(const RootSystem& R, std::size_t limit) {
  std::vector<Weight> out;
  for (int level = 0;; ++level) {
    bool any = false;
    for (const auto& mu : dominant_level(R.rank(), level)) {
      if (downset_size_or_overflow(R, mu, limit) > limit) continue;
      any = true;
      for (const auto& nu : weyl_orbit(R, mu))
        if (downset_size_or_overflow(R, nu, limit) <= limit) out.push_back(nu);
    }
    if (!any) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SweepResult::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok(); }));
}

std::size_t SweepResult::orbit_checks() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.orbit_applicable; }));
}

SweepResult positivity_sweep(const RootSystem& R, const Multiplicity& k, const std::vector<Weight>& lambdas,
                             Exec exec, EPolyCache* cache, const SolveOptions& opts) {
  SweepResult res;
  res.rows.resize(lambdas.size());
  for_each_index(lambdas.size(), exec, [&](std::size_t i) {
    LambdaCheck& row = res.rows[i];
    row.lambda = lambdas[i];
    try {
      EPolyCache::Ptr e = cache ? cache->get_or_compute(R, k, lambdas[i], opts)
                                : std::make_shared<const EPoly>(compute_E(R, k, lambdas[i], opts));
      row.downset_size = e->support.size();
      row.positivity = check_positivity(*e);
      row.eigen_residual_zero = true;
      for (int d = 0; d < R.rank(); ++d)
        if (!eigen_residual(R, k, *e, d).is_zero()) row.eigen_residual_zero = false;
      row.orbit_applicable = is_dominant(R, lambdas[i]);
      if (row.orbit_applicable) row.orbit_ok = spectral_orbit_check(R, k, lambdas[i]);
    } catch (const Error& e) {
      row.failure = e.what();
    }
  });
  return res;
}

HullSweepResult hull_lemma_sweep(const RootSystem& R, const std::vector<Weight>& lambdas, Exec exec,
                                 std::size_t downset_limit) {
  struct Partial {
    std::size_t checked = 0;
    std::vector<std::string> bad;
  };
  std::vector<Partial> parts(lambdas.size());
  for_each_index(lambdas.size(), exec, [&](std::size_t i) {
    Partial& p = parts[i];
    try {
      for (const auto& nu : downset(R, lambdas[i], DownsetOptions{downset_limit})) {
        ++p.checked;
        if (!hull_contains(R, lambdas[i], R.to_point(nu)))
          p.bad.push_back(to_string(nu) + " not in C" + to_string(lambdas[i]));
      }
    } catch (const Error& e) {
      p.bad.push_back(e.what());
    }
  });
  HullSweepResult out;
  for (auto& p : parts) {
    out.points_checked += p.checked;
    out.failures += p.bad.size();
    out.details.insert(out.details.end(), p.bad.begin(), p.bad.end());
  }
  return out;
}

HullAgreementResult hull_agreement(const RootSystem& R, std::size_t pairs, std::uint64_t seed, Exec exec) {
  // Sample serially so both execution paths see the same pairs.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3), weight(0, 9), scale_num(1, 15);
  std::vector<std::pair<Weight, Point>> samples;
  samples.reserve(pairs);
  for (std::size_t s = 0; s < pairs; ++s) {
    Weight lambda{IntVec(R.rank())};
    for (auto& c : lambda.coords) c = coord(rng);
    auto orbit = weyl_orbit(R, lambda);
    // A random point on the segment between two orbit points sits near the boundary.
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    const std::size_t j1 = pick(rng), j2 = pick(rng);
    const int w1 = weight(rng) + 1, w2 = weight(rng);
    Point x(R.rank(), Rational(0));
    Point p1 = R.to_point(orbit[j1]), p2 = R.to_point(orbit[j2]);
    for (int i = 0; i < R.rank(); ++i) x[i] = (p1[i] * w1 + p2[i] * w2) / (w1 + w2);
    // Scale by r/10 in (0, 1.5]: r <= 10 stays inside, larger usually leaves.
    Rational f = make_rational(scale_num(rng), 10);
    for (auto& c : x) c *= f;
    samples.emplace_back(std::move(lambda), std::move(x));
  }
  std::vector<char> agree(pairs, 0), inside(pairs, 0);
  for_each_index(pairs, exec, [&](std::size_t i) {
    bool a = hull_contains_dual_cone(R, samples[i].first, samples[i].second);
    bool b = hull_contains_lp(R, samples[i].first, samples[i].second);
    agree[i] = a == b;
    inside[i] = a && b;
  });
  HullAgreementResult out;
  out.pairs = pairs;
  out.agreements = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 1));
  out.inside = static_cast<std::size_t>(std::count(inside.begin(), inside.end(), 1));
  return out;
}

IntertwinerCheckResult intertwiner_identity_check(Intertwiner& V, int max_degree, Exec exec) {
  const RootSystem& R = V.root_system();
  const int r = R.rank();
  IntertwinerCheckResult out;
  V.stage(max_degree);

  out.v_one_is_one = V.apply(MultiPoly::constant(r, Rational(1))) == MultiPoly::constant(r, Rational(1));

  std::vector<MultiPoly::Exponent> monos;
  for (int n = 0; n <= max_degree; ++n)
    for (auto& e : monomial_basis(r, n)) monos.push_back(std::move(e));

  std::vector<std::vector<std::string>> bad(monos.size());
  std::vector<char> identity(monos.size(), 1);
  for_each_index(monos.size(), exec, [&](std::size_t i) {
    MultiPoly p = MultiPoly::monomial(monos[i]);
    MultiPoly vp = V.apply(p);
    if (!(vp == p)) identity[i] = 0;
    int deg = 0;
    for (int v : monos[i]) deg += v;
    if (!vp.is_homogeneous(deg)) bad[i].push_back("V does not preserve degree on " + to_string(monos[i]));
    for (int j = 0; j < r; ++j) {
      RatVec xi(r, Rational(0));
      xi[j] = 1;
      MultiPoly lhs = apply_dunkl(R, V.multiplicity(), xi, vp);
      MultiPoly rhs = V.apply(p.derivative(j));
      if (!(lhs == rhs))
        bad[i].push_back("T_" + std::to_string(j + 1) + " V != V d_" + std::to_string(j + 1) + " on x^" +
                         to_string(monos[i]));
    }
  });
  out.identities_checked = monos.size() * static_cast<std::size_t>(r);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    out.failures += bad[i].size();
    out.details.insert(out.details.end(), bad[i].begin(), bad[i].end());
    if (!identity[i]) out.identity_stages = false;
  }
  return out;
}

RankOneCheckResult rankone_oracle_check(const Rational& k, int n_max, int samples, std::uint64_t seed, Exec exec) {
  const RootSystem R = RootSystem::from_code("A1");
  const Multiplicity mk = Multiplicity::uniform(R, k);
  const std::size_t count = static_cast<std::size_t>(2 * n_max + 1);

  // z drawn serially so the two execution paths agree.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-1.5, 1.5);
  std::vector<std::vector<Complex>> zs(count);
  for (auto& v : zs)
    for (int s = 0; s < samples; ++s) v.emplace_back(re(rng), im(rng));

  struct Partial {
    bool match = true;
    double err = 0.0, abs_err = 0.0;
    std::size_t samples = 0;
    std::string detail;
  };
  std::vector<Partial> parts(count);
  const Point omega = R.to_point(Weight{{1}});
  for_each_index(count, exec, [&](std::size_t i) {
    const int n = static_cast<int>(i) - n_max;
    Partial& p = parts[i];
    EPoly e = compute_E(R, mk, Weight{{n}});
    if (!(e.b == rankone::closed_E_trig(n, k))) {
      p.match = false;
      p.detail = "E_" + std::to_string(n) + " / c differs from the closed form";
    }
    if (n < 0) return;
    for (const Complex& z : zs[i]) {
      ComplexPoint pt;
      pt.coords = {z * omega[0].get_d()};
      Complex f = eval_F(R, e, pt);
      Complex q = rankone::gegenbauer_Q(n, k.get_d(), std::cosh(z));
      p.err = std::max(p.err, std::abs(f - q) / std::max(1.0, std::abs(q)));
      p.abs_err = std::max(p.abs_err, std::abs(f - q));
      ++p.samples;
    }
  });
  RankOneCheckResult out;
  for (auto& p : parts) {
    ++out.polys_checked;
    if (!p.match) {
      ++out.coefficient_mismatches;
      out.details.push_back(p.detail);
    }
    out.f_samples += p.samples;
    out.max_f_error = std::max(out.max_f_error, p.err);
    out.max_f_abs_error = std::max(out.max_f_abs_error, p.abs_err);
  }
  return out;
}

}  // namespace hop
