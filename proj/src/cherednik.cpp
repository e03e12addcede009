#include "hop/cherednik.hpp"

#include "hop/errors.hpp"

#include <algorithm>
#include <random>

namespace hop {

namespace {

/// Per-direction constants of D_xi.
struct Direction {
  RatVec omega_xi;      // <omega_i, xi>
  Rational rho_xi;      // <rho(k), xi>
  RatVec root_weight;   // k_alpha <alpha, xi> per positive root
};

Direction make_direction(const RootSystem& R, const Multiplicity& k, const RatVec& xi) {
  Direction d;
  const int r = R.rank();
  for (int i = 0; i < r; ++i) {
    Weight w{IntVec(r, 0)};
    w.coords[i] = 1;
    d.omega_xi.push_back(R.inner(R.to_point(w), xi));
  }
  d.rho_xi = R.inner(rho(R, k), xi);
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j)
    d.root_weight.push_back(k.on_root(j) * R.inner(to_ratvec(R.positive_roots()[j]), xi));
  return d;
}

/// Calls emit(weight, coefficient) for every term of D_xi e^nu (terms may repeat).
template <class Emit>
void cherednik_on_exponential(const RootSystem& R, const Direction& d, const Weight& nu, Emit&& emit) {
  const int r = R.rank();
  Rational diag = -d.rho_xi;
  for (int i = 0; i < r; ++i)
    if (nu.coords[i] != 0) diag += d.omega_xi[i] * nu.coords[i];
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
    const Rational& kw = d.root_weight[j];
    if (sgn(kw) == 0) continue;
    const int m = R.coroot_pairing(nu, j);
    const auto& alpha = R.positive_root_weight(j);
    if (m > 0) {
      diag += kw;
      Weight t = nu;
      for (int s = 1; s < m; ++s) {
        for (int i = 0; i < r; ++i) t.coords[i] -= alpha[i];
        emit(t, kw);
      }
    } else if (m < 0) {
      Weight t = nu;
      Rational neg = -kw;
      for (int s = 1; s <= -m; ++s) {
        for (int i = 0; i < r; ++i) t.coords[i] += alpha[i];
        emit(t, neg);
      }
    }
  }
  emit(nu, diag);
}

using Column = std::vector<std::pair<std::size_t, Rational>>;

RatVec unit(int r, int i) {
  RatVec v(r, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

TrigPoly apply_cherednik(const RootSystem& R, const Multiplicity& k, const RatVec& xi,
                         const TrigPoly& f) {
  Direction d = make_direction(R, k, xi);
  TrigPoly out;
  for (const auto& [nu, c] : f.terms())
    cherednik_on_exponential(R, d, nu, [&](const Weight& w, const Rational& v) { out.add_term(w, c * v); });
  return out;
}

EPoly compute_E(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                const SolveOptions& opts) {
  const int r = R.rank();
  EPoly e;
  e.lambda = lambda;
  e.support = downset(R, lambda, DownsetOptions{opts.downset_limit});
  e.spectrum = tilde(R, k, lambda);
  const auto& ds = e.support;
  const std::size_t n = ds.size();

  std::unordered_map<Weight, std::size_t, WeightHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(ds[i], i);

  // Columns of D_{alpha_i} restricted to the downset; merged per target.
  std::vector<std::vector<Column>> cols(r, std::vector<Column>(n));
  for (int i = 0; i < r; ++i) {
    Direction d = make_direction(R, k, unit(r, i));
    for (std::size_t mu = 0; mu < n; ++mu) {
      std::unordered_map<std::size_t, Rational> acc;
      cherednik_on_exponential(R, d, ds[mu], [&](const Weight& w, const Rational& v) {
        auto it = index.find(w);
        if (it == index.end() || it->second > mu)
          throw InvariantViolation("triangularity", "D e^" + to_string(ds[mu]) + " has a term at " +
                                                        to_string(w) + " outside the lower set");
        acc[it->second] += v;
      });
      Column& col = cols[i][mu];
      for (auto& [idx, v] : acc)
        if (sgn(v) != 0) col.emplace_back(idx, std::move(v));
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }

  std::vector<Point> spectra(n);
  for (std::size_t i = 0; i < n; ++i) spectra[i] = tilde(R, k, ds[i]);

  // Regular direction: distinct primes, then seeded rational perturbations.
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::mt19937_64 rng(opts.seed);
  RatVec xi(r);
  std::vector<Rational> s(n);
  bool regular = false;
  for (int attempt = 0; attempt <= opts.max_retries && !regular; ++attempt) {
    for (int i = 0; i < r; ++i) {
      xi[i] = kPrimes[i % 12] + (i / 12);
      if (attempt > 0) {
        std::uniform_int_distribution<int> num(1, 97), den(2, 101);
        xi[i] += make_rational(num(rng), den(rng));
      }
    }
    for (std::size_t i = 0; i < n; ++i) s[i] = R.inner(spectra[i], xi);
    regular = true;
    for (std::size_t i = 0; i + 1 < n && regular; ++i)
      if (s[i] == s[n - 1]) regular = false;
  }
  if (!regular)
    throw DegenerateSpectrum("no regular direction separates the shifted spectrum of " + to_string(lambda) +
                             " after " + std::to_string(opts.max_retries) + " retries");

  auto column_xi = [&](std::size_t mu) {
    std::unordered_map<std::size_t, Rational> m;
    for (int i = 0; i < r; ++i)
      for (const auto& [idx, v] : cols[i][mu]) m[idx] += xi[i] * v;
    return m;
  };

  std::vector<Rational> a(n, Rational(0)), acc(n, Rational(0));
  a[n - 1] = 1;
  for (auto& [idx, v] : column_xi(n - 1)) acc[idx] += v;
  const Rational& s_lambda = s[n - 1];
  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t mu = n - 1 - step;
    if (sgn(acc[mu]) == 0) continue;
    a[mu] = acc[mu] / (s_lambda - s[mu]);
    for (auto& [idx, v] : column_xi(mu)) acc[idx] += a[mu] * v;
  }
  for (std::size_t mu = 0; mu < n; ++mu)
    if (acc[mu] != s_lambda * a[mu])
      throw InvariantViolation("eigen_residual", "regular-direction residual nonzero for " + to_string(lambda));

  // Every simple direction, exactly.
  for (int i = 0; i < r; ++i) {
    Rational eig = R.inner(e.spectrum, unit(r, i));
    std::vector<Rational> res(n, Rational(0));
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (sgn(a[mu]) == 0) continue;
      for (const auto& [idx, v] : cols[i][mu]) res[idx] += a[mu] * v;
    }
    for (std::size_t mu = 0; mu < n; ++mu)
      if (res[mu] != eig * a[mu])
        throw InvariantViolation("eigen_residual", "direction alpha_" + std::to_string(i + 1) +
                                                       " residual nonzero for " + to_string(lambda));
  }

  for (std::size_t mu = 0; mu < n; ++mu) e.a.add_term(ds[mu], a[mu]);
  e.c = e.a.value_at_zero();
  if (sgn(e.c) == 0) throw InvariantViolation("c_lambda_positive", "E(0) = 0 for " + to_string(lambda));
  e.b = e.a;
  e.b *= Rational(1) / e.c;
  return e;
}

TrigPoly eigen_residual(const RootSystem& R, const Multiplicity& k, const EPoly& e, int simple_dir) {
  RatVec xi = unit(R.rank(), simple_dir);
  TrigPoly lhs = apply_cherednik(R, k, xi, e.a);
  TrigPoly rhs = e.a;
  rhs *= R.inner(e.spectrum, xi);
  return lhs - rhs;
}

PositivityReport check_positivity(const EPoly& e) {
  PositivityReport rep;
  rep.leading_is_one = e.a.coeff(e.lambda) == 1;
  rep.all_nonnegative = true;
  for (const auto& [nu, c] : e.a.terms())
    if (sgn(c) < 0) {
      rep.all_nonnegative = false;
      if (!rep.counterexample) rep.counterexample = nu;
    }
  rep.mass_is_one = e.b.value_at_zero() == 1;
  rep.normalized_in_unit_interval = true;
  for (const auto& [nu, c] : e.b.terms())
    if (sgn(c) < 0 || c > 1) rep.normalized_in_unit_interval = false;
  return rep;
}

TrigPoly symmetrize_P(const RootSystem& R, const EPoly& e) {
  if (!is_dominant(R, e.lambda))
    throw ConfigError("symmetrize_P needs a dominant weight, got " + to_string(e.lambda));
  TrigPoly p;
  for (const auto& w : R.weyl())
    for (const auto& [nu, c] : e.a.terms()) p.add_term(R.apply(w, nu), c);
  p *= Rational(static_cast<long>(weyl_orbit(R, e.lambda).size()), static_cast<long>(R.weyl_order()));
  return p;
}

Complex eval_F(const RootSystem& R, const EPoly& e, const ComplexPoint& z) {
  TrigPoly p = symmetrize_P(R, e);
  Rational c_star = e.c * static_cast<long>(weyl_orbit(R, e.lambda).size());
  return eval_trig(R, p, z) / c_star.get_d();
}

Complex eval_F(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
               const ComplexPoint& z, const SolveOptions& opts) {
  if (!is_dominant(R, lambda)) throw ConfigError("eval_F needs a dominant weight, got " + to_string(lambda));
  return eval_F(R, compute_E(R, k, lambda, opts), z);
}

bool spectral_orbit_check(const RootSystem& R, const Multiplicity& k, const Weight& lambda) {
  Point target = tilde(R, k, lambda);
  Point shifted = R.to_point(lambda);
  Point rh = rho(R, k);
  for (int i = 0; i < R.rank(); ++i) shifted[i] += rh[i];
  for (const auto& w : R.weyl())
    if (R.apply(w, shifted) == target) return true;
  return false;
}

std::string EPolyCache::key(const RootSystem& R, const Multiplicity& k, const Weight& lambda) {
  return R.code() + "|k=" + k.key() + "|lambda=" + to_string(lambda);
}

EPolyCache::Ptr EPolyCache::get_or_compute(const RootSystem& R, const Multiplicity& k,
                                           const Weight& lambda, const SolveOptions& opts) {
  std::string kk = key(R, k, lambda);
  if (auto hit = find(kk)) return hit;
  return insert(kk, compute_E(R, k, lambda, opts));
}

EPolyCache::Ptr EPolyCache::find(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = map_.find(key);
  return it == map_.end() ? nullptr : it->second;
}

EPolyCache::Ptr EPolyCache::insert(const std::string& key, EPoly e) {
  auto p = std::make_shared<const EPoly>(std::move(e));
  std::lock_guard lock(mu_);
  return map_.emplace(key, std::move(p)).first->second;
}

std::size_t EPolyCache::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

std::vector<std::pair<std::string, EPolyCache::Ptr>> EPolyCache::entries() const {
  std::lock_guard lock(mu_);
  std::vector<std::pair<std::string, Ptr>> out(map_.begin(), map_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace hop
