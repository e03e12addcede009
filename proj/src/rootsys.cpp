#include "hop/rootsys.hpp"

#include "hop/errors.hpp"
#include "hop/lp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hop {

namespace {

RatMatrix gram_for(Family family, int n) {
  RatMatrix B(n, RatVec(n, Rational(0)));
  auto set = [&](int i, int j, long v) {
    B[i][j] = v;
    B[j][i] = v;
  };
  switch (family) {
    case Family::A:
      if (n == 1) {
        B[0][0] = 4;
        break;
      }
      for (int i = 0; i < n; ++i) B[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
      break;
    case Family::B:
      // e_i - e_{i+1} and e_n, doubled so the short root has length^2 2.
      for (int i = 0; i + 1 < n; ++i) B[i][i] = 4;
      B[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) B[i][i] = 2;
      B[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
      set(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) B[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
      set(n - 3, n - 1, -1);
      break;
    case Family::G:
      B[0][0] = 2;
      B[1][1] = 6;
      set(0, 1, -3);
      break;
  }
  return B;
}

RatMatrix invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw InvariantViolation("gram", "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int to_int_exact(const Rational& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p())
    throw InvariantViolation("crystallographic", std::string(what) + " is not an integer");
  return static_cast<int>(q.get_num().get_si());
}

IntVec matmul(const IntVec& a, const IntVec& b, int r) {
  IntVec c(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int aik = a[i * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += aik * b[k * r + j];
    }
  return c;
}

IntVec identity(int r) {
  IntVec m(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

}  // namespace

RootSystem RootSystem::from_code(const std::string& code) {
  if (code.size() < 2) throw ConfigError("root system code too short: '" + code + "'");
  Family f;
  switch (code[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'G': f = Family::G; break;
    default: throw ConfigError("unsupported root system family in '" + code + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < code.size(); ++i) {
    if (code[i] < '0' || code[i] > '9' || rank > 1000)
      throw ConfigError("bad rank in root system code '" + code + "'");
    rank = rank * 10 + (code[i] - '0');
  }
  return build(f, rank);
}

RootSystem RootSystem::build(Family family, int rank) {
  bool ok = (family == Family::A && rank >= 1) || (family == Family::B && rank >= 2) ||
            (family == Family::C && rank >= 2) || (family == Family::D && rank >= 4) ||
            (family == Family::G && rank == 2);
  if (!ok)
    throw ConfigError(std::string("unsupported root system ") + family_char(family) +
                      std::to_string(rank));

  RootSystem R;
  R.family_ = family;
  R.rank_ = rank;
  R.gram_ = gram_for(family, rank);
  const int r = rank;

  R.cartan_.assign(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      R.cartan_[i][j] = to_int_exact(Rational(2) * R.gram_[i][j] / R.gram_[j][j], "Cartan entry");

  RatMatrix ct(r, RatVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) ct[j][i] = R.cartan_[i][j];
  R.weight_to_root_ = invert(ct);

  // All roots: orbit of the simple roots under simple reflections.
  std::set<IntVec> roots;
  std::deque<IntVec> queue;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    if (roots.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      int pair = 0;
      for (int l = 0; l < r; ++l) pair += b[l] * R.cartan_[l][i];
      IntVec c = b;
      c[i] -= pair;
      if (roots.insert(c).second) queue.push_back(c);
    }
  }
  for (const auto& b : roots)
    if (std::all_of(b.begin(), b.end(), [](int v) { return v >= 0; })) R.pos_roots_.push_back(b);
  std::sort(R.pos_roots_.begin(), R.pos_roots_.end(), [](const IntVec& a, const IntVec& b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    return ha != hb ? ha < hb : a < b;
  });

  std::set<Rational> lengths;
  for (const auto& b : R.pos_roots_) {
    Point p = to_ratvec(b);
    Rational len2 = R.inner(p, p);
    R.root_len2_.push_back(len2);
    lengths.insert(len2);

    IntVec d(r), wt(r, 0), refl = identity(r);
    for (int i = 0; i < r; ++i) d[i] = to_int_exact(b[i] * R.gram_[i][i] / len2, "coroot coordinate");
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) wt[j] += b[i] * R.cartan_[i][j];
    // sigma(x) = x - <x, beta^vee> beta,  <x, beta^vee> = sum_l x_l <alpha_l, beta^vee>
    for (int l = 0; l < r; ++l) {
      Rational g(0);
      for (int m = 0; m < r; ++m) g += R.gram_[l][m] * b[m];
      int gl = to_int_exact(Rational(2) * g / len2, "root pairing");
      for (int i = 0; i < r; ++i) refl[i * r + l] -= b[i] * gl;
    }
    R.pos_coroots_.push_back(std::move(d));
    R.pos_root_weights_.push_back(std::move(wt));
    R.reflections_.push_back(std::move(refl));
  }
  R.num_orbits_ = static_cast<int>(lengths.size());
  for (const auto& len2 : R.root_len2_)
    R.root_orbit_.push_back(static_cast<int>(std::distance(lengths.begin(), lengths.find(len2))));

  // Weyl group by BFS closure over simple reflections.
  std::vector<IntVec> gen_root(r), gen_weight(r);
  for (int i = 0; i < r; ++i) {
    IntVec s = identity(r), t = identity(r);
    for (int l = 0; l < r; ++l) s[i * r + l] -= R.cartan_[l][i];
    for (int j = 0; j < r; ++j) t[j * r + i] -= R.cartan_[i][j];
    gen_root[i] = s;
    gen_weight[i] = t;
    R.simple_refl_.push_back({std::move(s), std::move(t), {i}});
  }
  std::map<IntVec, std::size_t> seen;
  R.weyl_.push_back({identity(r), identity(r), {}});
  seen.emplace(identity(r), 0);
  for (std::size_t head = 0; head < R.weyl_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      IntVec m = matmul(gen_root[i], R.weyl_[head].root_matrix, r);
      if (seen.count(m)) continue;
      if (R.weyl_.size() >= kWeylCap)
        throw ResourceLimit("Weyl group of " + R.code() + " exceeds the cap of " +
                            std::to_string(kWeylCap) + " elements");
      WeylElement w;
      w.root_matrix = m;
      w.weight_matrix = matmul(gen_weight[i], R.weyl_[head].weight_matrix, r);
      w.word.push_back(i);
      w.word.insert(w.word.end(), R.weyl_[head].word.begin(), R.weyl_[head].word.end());
      seen.emplace(std::move(m), R.weyl_.size());
      R.weyl_.push_back(std::move(w));
    }
  }
  return R;
}

std::string RootSystem::code() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

Rational RootSystem::inner(const Point& x, const Point& y) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (sgn(y[j]) != 0 && sgn(gram_[i][j]) != 0) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::simple_coroot_pairing(const Point& x, int i) const {
  Rational s(0);
  for (int l = 0; l < rank_; ++l)
    if (cartan_[l][i] != 0) s += x[l] * cartan_[l][i];
  return s;
}

Point RootSystem::to_point(const Weight& w) const {
  Point p(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w.coords[j] != 0) p[i] += weight_to_root_[i][j] * w.coords[j];
  return p;
}

std::optional<Weight> RootSystem::to_weight(const Point& x) const {
  Weight w{IntVec(rank_, 0)};
  for (int j = 0; j < rank_; ++j) {
    Rational c = simple_coroot_pairing(x, j);
    if (c.get_den() != 1 || !c.get_num().fits_sint_p()) return std::nullopt;
    w.coords[j] = static_cast<int>(c.get_num().get_si());
  }
  return w;
}

int RootSystem::coroot_pairing(const Weight& w, std::size_t j) const {
  int s = 0;
  const auto& d = pos_coroots_[j];
  for (int i = 0; i < rank_; ++i) s += w.coords[i] * d[i];
  return s;
}

Weight RootSystem::reflect_simple(const Weight& w, int i) const {
  Weight out = w;
  int c = w.coords[i];
  for (int j = 0; j < rank_; ++j) out.coords[j] -= c * cartan_[i][j];
  return out;
}

Point RootSystem::reflect_simple(const Point& x, int i) const {
  Point out = x;
  out[i] -= simple_coroot_pairing(x, i);
  return out;
}

Weight RootSystem::apply(const WeylElement& w, const Weight& v) const {
  Weight out{IntVec(rank_, 0)};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out.coords[i] += w.weight_matrix[i * rank_ + j] * v.coords[j];
  return out;
}

Point RootSystem::apply(const WeylElement& w, const Point& x) const {
  Point out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      int m = w.root_matrix[i * rank_ + j];
      if (m != 0) out[i] += x[j] * m;
    }
  return out;
}

std::vector<Complex> RootSystem::apply(const WeylElement& w, const std::vector<Complex>& z) const {
  std::vector<Complex> out(rank_, Complex(0.0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += static_cast<double>(w.root_matrix[i * rank_ + j]) * z[j];
  return out;
}

bool RootSystem::in_positive_cone(const Weight& diff) const {
  for (const auto& c : to_point(diff))
    if (c.get_den() != 1 || sgn(c) < 0) return false;
  return true;
}

Rational RootSystem::height(const Point& x) const {
  Rational h(0);
  for (const auto& c : x) h += c;
  return h;
}

Multiplicity::Multiplicity(const RootSystem& R, std::vector<Rational> per_orbit)
    : per_orbit_(std::move(per_orbit)) {
  if (per_orbit_.size() != static_cast<std::size_t>(R.num_root_orbits()))
    throw ConfigError(R.code() + " has " + std::to_string(R.num_root_orbits()) +
                      " root orbit(s), got " + std::to_string(per_orbit_.size()) + " multiplicities");
  for (const auto& k : per_orbit_)
    if (sgn(k) < 0) throw ConfigError("multiplicity must be nonnegative, got " + k.get_str());
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j)
    per_root_.push_back(per_orbit_[R.root_orbit(j)]);
}

Multiplicity Multiplicity::uniform(const RootSystem& R, const Rational& k) {
  return Multiplicity(R, std::vector<Rational>(R.num_root_orbits(), k));
}

bool Multiplicity::is_zero() const {
  return std::all_of(per_orbit_.begin(), per_orbit_.end(), [](const Rational& k) { return sgn(k) == 0; });
}

std::string Multiplicity::key() const {
  std::string s;
  for (std::size_t i = 0; i < per_orbit_.size(); ++i) s += (i ? "," : "") + per_orbit_[i].get_str();
  return s;
}

std::pair<Weight, WeylElement> dominant_rep(const RootSystem& R, const Weight& w) {
  const int r = R.rank();
  Weight cur = w;
  WeylElement g{identity(r), identity(r), {}};
  while (true) {
    int i = 0;
    while (i < r && cur.coords[i] >= 0) ++i;
    if (i == r) break;
    cur = R.reflect_simple(cur, i);
    g.root_matrix = matmul(R.simple_reflection(i).root_matrix, g.root_matrix, r);
    g.weight_matrix = matmul(R.simple_reflection(i).weight_matrix, g.weight_matrix, r);
    g.word.insert(g.word.begin(), i);
  }
  return {cur, g};
}

Point dominant_rep(const RootSystem& R, const Point& x) {
  Point cur = x;
  while (true) {
    int i = 0;
    while (i < R.rank() && sgn(R.simple_coroot_pairing(cur, i)) >= 0) ++i;
    if (i == R.rank()) return cur;
    cur = R.reflect_simple(cur, i);
  }
}

bool is_dominant(const RootSystem& R, const Weight& w) {
  (void)R;
  return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& w) {
  std::set<Weight> out;
  for (const auto& g : R.weyl()) out.insert(R.apply(g, w));
  return {out.begin(), out.end()};
}

std::vector<Point> weyl_orbit(const RootSystem& R, const Point& x) {
  std::set<Point, RatVecLess> out;
  for (const auto& g : R.weyl()) out.insert(R.apply(g, x));
  return {out.begin(), out.end()};
}

bool dominance_leq(const RootSystem& R, const Weight& nu, const Weight& lambda) {
  Weight diff{lambda.coords};
  for (std::size_t i = 0; i < diff.coords.size(); ++i) diff.coords[i] -= nu.coords[i];
  return R.in_positive_cone(diff);
}

bool tri_leq(const RootSystem& R, const Weight& nu, const Weight& lambda) {
  if (nu == lambda) return true;
  Weight nu_plus = dominant_rep(R, nu).first;
  Weight lambda_plus = dominant_rep(R, lambda).first;
  if (nu_plus == lambda_plus) return dominance_leq(R, lambda, nu);
  return dominance_leq(R, nu_plus, lambda_plus);
}

std::vector<Weight> dominant_weights_below(const RootSystem& R, const Weight& lambda_plus,
                                           std::size_t limit) {
  // Any dominant mu below lambda_plus is reachable through dominant weights
  // differing by single positive roots (Stembridge's chain property).
  std::vector<Weight> out{lambda_plus};
  std::unordered_set<Weight, WeightHash> seen{lambda_plus};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
      Weight mu = out[head];
      const auto& a = R.positive_root_weight(j);
      for (int i = 0; i < R.rank(); ++i) mu.coords[i] -= a[i];
      if (!is_dominant(R, mu) || !seen.insert(mu).second) continue;
      out.push_back(std::move(mu));
      if (out.size() > limit)
        throw ResourceLimit("more than " + std::to_string(limit) + " dominant weights below " +
                            to_string(lambda_plus));
    }
  }
  return out;
}

std::vector<Weight> downset(const RootSystem& R, const Weight& lambda, DownsetOptions opts) {
  const Weight lambda_plus = dominant_rep(R, lambda).first;
  const Point lambda_plus_pt = R.to_point(lambda_plus);

  struct Entry {
    Weight nu;
    Rational gap;    // ht(lambda_+ - nu_+)
    Rational height;  // ht(nu)
  };
  std::vector<Entry> entries;
  for (const auto& mu : dominant_weights_below(R, lambda_plus, opts.limit)) {
    Point mu_pt = R.to_point(mu);
    Rational gap = R.height(lambda_plus_pt) - R.height(mu_pt);
    for (auto& nu : weyl_orbit(R, mu)) {
      if (mu == lambda_plus && !(nu == lambda || dominance_leq(R, lambda, nu))) continue;
      Rational h = R.height(R.to_point(nu));
      entries.push_back({std::move(nu), gap, std::move(h)});
      if (entries.size() > opts.limit)
        throw ResourceLimit("downset of " + to_string(lambda) + " exceeds limit " +
                            std::to_string(opts.limit));
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.gap != b.gap) return a.gap > b.gap;
    if (a.height != b.height) return a.height > b.height;
    return a.nu < b.nu;
  });
  std::vector<Weight> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.nu));
  return out;
}

Point rho(const RootSystem& R, const Multiplicity& k) {
  Point p(R.rank(), Rational(0));
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j)
    for (int i = 0; i < R.rank(); ++i) p[i] += k.on_root(j) * R.positive_roots()[j][i] / 2;
  return p;
}

Point tilde(const RootSystem& R, const Multiplicity& k, const Weight& lambda) {
  Point p = R.to_point(lambda);
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
    if (sgn(k.on_root(j)) == 0) continue;
    int eps = R.coroot_pairing(lambda, j) > 0 ? 1 : -1;
    for (int i = 0; i < R.rank(); ++i) p[i] += k.on_root(j) * eps * R.positive_roots()[j][i] / 2;
  }
  return p;
}

bool hull_contains_dual_cone(const RootSystem& R, const Weight& lambda, const Point& x) {
  Point lp = R.to_point(dominant_rep(R, lambda).first);
  Point xp = dominant_rep(R, x);
  Point diff(R.rank());
  for (int i = 0; i < R.rank(); ++i) diff[i] = lp[i] - xp[i];
  // C* is generated by the simple roots, dual to the fundamental weights spanning C.
  for (int i = 0; i < R.rank(); ++i) {
    Weight omega{IntVec(R.rank(), 0)};
    omega.coords[i] = 1;
    if (sgn(R.inner(diff, R.to_point(omega))) < 0) return false;
  }
  return true;
}

bool hull_contains_lp(const RootSystem& R, const Weight& lambda, const Point& x) {
  std::vector<Point> verts;
  for (const auto& v : weyl_orbit(R, lambda)) verts.push_back(R.to_point(v));
  return lp::convex_combination(verts, x).has_value();
}

bool hull_contains(const RootSystem& R, const Weight& lambda, const Point& x) {
  bool a = hull_contains_dual_cone(R, lambda, x);
  bool b = hull_contains_lp(R, lambda, x);
  if (a != b)
    throw InvariantViolation("hull_methods_agree", "dual-cone and LP tests disagree for lambda=" +
                                                       to_string(lambda) + " x=" + to_string(x));
  return a;
}

std::string to_string(const Weight& w) { return to_string(w.coords); }

}  // namespace hop
