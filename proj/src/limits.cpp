#include "hop/limits.hpp"

#include "hop/errors.hpp"

#include <cmath>
#include <functional>

namespace hop {

Rational DiscreteMeasure::mass() const {
  Rational s(0);
  for (const auto& [x, w] : atoms) s += w;
  return s;
}

bool DiscreteMeasure::nonnegative() const {
  for (const auto& [x, w] : atoms)
    if (sgn(w) < 0) return false;
  return true;
}

DiscreteMeasure DiscreteMeasure::dilated(const Rational& r) const {
  DiscreteMeasure out;
  for (const auto& [x, w] : atoms) {
    Point y = x;
    for (auto& c : y) c *= r;
    out.atoms[y] += w;
  }
  return out;
}

DiscreteMeasure measure_approx(const RootSystem& R, const Multiplicity& k, const Weight& lambda, int n,
                               EPolyCache& cache, const SolveOptions& opts) {
  if (n <= 0) throw ConfigError("measure_approx needs n >= 1");
  Weight scaled = lambda;
  for (auto& c : scaled.coords) c *= n;
  auto e = cache.get_or_compute(R, k, scaled, opts);
  DiscreteMeasure mu;
  for (const auto& [nu, b] : e->b.terms()) {
    Point x = R.to_point(nu);
    for (auto& c : x) c /= n;
    mu.atoms.emplace(std::move(x), b);
  }
  return mu;
}

Rational measure_moment(const RootSystem& R, const DiscreteMeasure& mu, const RatVec& z, int m) {
  Rational s(0);
  for (const auto& [x, w] : mu.atoms) {
    Rational p = R.inner(x, z), t(1);
    for (int i = 0; i < m; ++i) t *= p;
    s += w * t;
  }
  return s;
}

bool support_check(const RootSystem& R, const DiscreteMeasure& mu, const Weight& lambda) {
  for (const auto& [x, w] : mu.atoms)
    if (!hull_contains(R, lambda, x)) return false;
  return true;
}

namespace {

Weight times(const Weight& w, int n) {
  Weight out = w;
  for (auto& c : out.coords) c *= n;
  return out;
}

ConvergenceTable run_table(std::string name, const std::vector<ComplexPoint>& z_grid,
                           const std::vector<int>& n_list, const std::vector<KernelSeries::Value>& refs,
                           Exec exec, const std::function<Complex(int, const ComplexPoint&)>& approx_at_n,
                           const std::function<void(int)>& prepare) {
  ConvergenceTable t;
  t.name = std::move(name);
  t.rows.resize(n_list.size() * z_grid.size());
  for_each_index(n_list.size(), exec, [&](std::size_t ni) {
    const int n = n_list[ni];
    std::string failure;
    try {
      prepare(n);
    } catch (const Error& e) {
      failure = e.what();
    }
    for (std::size_t zi = 0; zi < z_grid.size(); ++zi) {
      ConvergenceRow& row = t.rows[ni * z_grid.size() + zi];
      row.n = n;
      row.z = z_grid[zi];
      row.reference = refs[zi].value;
      if (!failure.empty()) {
        row.failure = failure;
        row.error = std::nan("");
        continue;
      }
      try {
        row.approx = approx_at_n(n, z_grid[zi].scaled(1.0 / n));
        row.error = std::abs(row.approx - row.reference);
      } catch (const Error& e) {
        row.failure = e.what();
        row.error = std::nan("");
      }
    }
  });
  return t;
}

}  // namespace

ConvergenceTable scaling_error_table(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                                     const std::vector<ComplexPoint>& z_grid, const std::vector<int>& n_list,
                                     int order, EPolyCache& cache, Intertwiner& V, Exec exec,
                                     const SolveOptions& opts) {
  KernelSeries series(V, R.to_point(lambda), order);
  std::vector<KernelSeries::Value> refs;
  for (const auto& z : z_grid) refs.push_back(series.evaluate(z));
  auto key = [&](int n) { return EPolyCache::key(R, k, times(lambda, n)); };
  return run_table(
      "scaling_error", z_grid, n_list, refs, exec,
      [&](int n, const ComplexPoint& zn) {
        auto e = cache.find(key(n));
        return eval_trig(R, e->b, zn);
      },
      [&](int n) { cache.get_or_compute(R, k, times(lambda, n), opts); });
}

ConvergenceTable symmetric_limit_table(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                                       const std::vector<ComplexPoint>& z_grid, const std::vector<int>& n_list,
                                       int order, EPolyCache& cache, Intertwiner& V, Exec exec,
                                       const SolveOptions& opts) {
  if (!is_dominant(R, lambda))
    throw ConfigError("symmetric limit needs a dominant weight, got " + to_string(lambda));
  std::vector<KernelSeries::Value> refs;
  for (const auto& z : z_grid) refs.push_back(bessel_JW(V, R.to_point(lambda), z, order));
  auto key = [&](int n) { return EPolyCache::key(R, k, times(lambda, n)); };
  return run_table(
      "symmetric_limit", z_grid, n_list, refs, exec,
      [&](int n, const ComplexPoint& zn) { return eval_F(R, *cache.find(key(n)), zn); },
      [&](int n) { cache.get_or_compute(R, k, times(lambda, n), opts); });
}

ConvergenceTable moment_convergence(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                                    const RatVec& z, int m, const std::vector<int>& n_list,
                                    EPolyCache& cache, Intertwiner& V, Exec exec, const SolveOptions& opts) {
  const Rational target = v_moment(V, R.to_point(lambda), z, m);
  ConvergenceTable t;
  t.name = "moment_convergence";
  t.rows.resize(n_list.size());
  for_each_index(n_list.size(), exec, [&](std::size_t i) {
    ConvergenceRow& row = t.rows[i];
    row.n = n_list[i];
    row.z = ComplexPoint::real(z);
    row.reference = target.get_d();
    try {
      Rational approx = measure_moment(R, measure_approx(R, k, lambda, row.n, cache, opts), z, m);
      row.approx = approx.get_d();
      row.error = Rational(abs(approx - target)).get_d();
    } catch (const Error& e) {
      row.failure = e.what();
      row.error = std::nan("");
    }
  });
  return t;
}

}  // namespace hop
