#include "hop/dunkl.hpp"

#include "hop/errors.hpp"

#include <cmath>

namespace hop {

MultiPoly apply_dunkl(const RootSystem& R, const Multiplicity& k, const RatVec& xi, const MultiPoly& p) {
  MultiPoly out = p.directional_derivative(xi);
  for (std::size_t j = 0; j < R.positive_roots().size(); ++j) {
    Rational w = k.on_root(j) * R.inner(to_ratvec(R.positive_roots()[j]), xi);
    if (sgn(w) == 0) continue;
    out += divided_difference(R, j, p) * w;
  }
  return out;
}

MultiPoly IntertwinerStage::image(std::size_t col, int nvars) const {
  MultiPoly p(nvars);
  for (std::size_t row = 0; row < basis.size(); ++row) p.add_term(basis[row], matrix[row][col]);
  return p;
}

Intertwiner::Intertwiner(RootSystem R, Multiplicity k) : R_(std::move(R)), k_(std::move(k)) {
  IntertwinerStage s0;
  s0.basis = monomial_basis(R_.rank(), 0);
  s0.index.emplace(s0.basis[0], 0);
  s0.matrix = {{Rational(1)}};
  stages_.push_back(std::move(s0));
}

int Intertwiner::built_degree() const {
  std::lock_guard lock(mu_);
  return static_cast<int>(stages_.size()) - 1;
}

const IntertwinerStage& Intertwiner::stage(int n) {
  std::lock_guard lock(mu_);
  if (n < 0) throw ConfigError("negative intertwiner degree");
  while (static_cast<int>(stages_.size()) <= n) build_next();
  return stages_[n];
}

void Intertwiner::build_next() {
  const int r = R_.rank();
  const int n = static_cast<int>(stages_.size());
  const IntertwinerStage& prev = stages_.back();

  IntertwinerStage st;
  st.degree = n;
  st.basis = monomial_basis(r, n);
  for (std::size_t i = 0; i < st.basis.size(); ++i) st.index.emplace(st.basis[i], i);
  const std::size_t d = st.basis.size(), dp = prev.basis.size();
  const std::size_t rows = static_cast<std::size_t>(r) * dp, width = 2 * d;

  // Augmented system [T | V d]: row block j is the alpha_j component.
  RatMatrix aug(rows, RatVec(width, Rational(0)));
  std::vector<RatVec> simple(r, RatVec(r, Rational(0)));
  for (int j = 0; j < r; ++j) simple[j][j] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    MultiPoly mono = MultiPoly::monomial(st.basis[col]);
    for (int j = 0; j < r; ++j) {
      MultiPoly t = apply_dunkl(R_, k_, simple[j], mono);
      for (const auto& [e, c] : t.terms()) aug[j * dp + prev.index.at(e)][col] = c;
      // V(d_j x^e) = e_j V(x^{e - 1_j})
      const auto& e = st.basis[col];
      if (e[j] == 0) continue;
      auto lower = e;
      --lower[j];
      std::size_t src = prev.index.at(lower);
      for (std::size_t row = 0; row < dp; ++row)
        if (sgn(prev.matrix[row][src]) != 0) aug[j * dp + row][d + col] = prev.matrix[row][src] * e[j];
    }
  }

  std::vector<std::size_t> pivot_row(d);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = rank;
    while (piv < rows && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == rows)
      throw InvariantViolation("intertwiner_rank", "intertwiner degenerate at degree " + std::to_string(n));
    std::swap(aug[piv], aug[rank]);
    Rational p = aug[rank][col];
    for (auto& v : aug[rank]) v /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(aug[i][col]) == 0) continue;
      Rational f = aug[i][col];
      for (std::size_t c = col; c < width; ++c)
        if (sgn(aug[rank][c]) != 0) aug[i][c] -= f * aug[rank][c];
    }
    pivot_row[col] = rank++;
  }
  for (std::size_t i = rank; i < rows; ++i)
    for (std::size_t c = d; c < width; ++c)
      if (sgn(aug[i][c]) != 0)
        throw InvariantViolation("intertwiner_consistency",
                                 "overdetermined system inconsistent at degree " + std::to_string(n));

  st.matrix.assign(d, RatVec(d, Rational(0)));
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t col = 0; col < d; ++col) st.matrix[row][col] = aug[pivot_row[row]][d + col];
  stages_.push_back(std::move(st));
}

MultiPoly Intertwiner::apply(const MultiPoly& p) {
  MultiPoly out(R_.rank());
  int deg = p.degree();
  if (deg >= 0) stage(deg);
  for (const auto& [e, c] : p.terms()) {
    int m = 0;
    for (int v : e) m += v;
    const auto& st = stage(m);
    out += st.image(st.index.at(e), R_.rank()) * c;
  }
  return out;
}

KernelSeries::KernelSeries(Intertwiner& V, const Point& x, int order) : R_(&V.root_system()), x_(x) {
  if (order < 0) throw ConfigError("truncation order must be nonnegative");
  const int r = R_->rank();
  V.stage(order);
  for (int m = 0; m <= order; ++m) {
    const auto& st = V.stage(m);
    std::vector<Rational> xmono(st.basis.size());
    for (std::size_t row = 0; row < st.basis.size(); ++row)
      xmono[row] = MultiPoly::monomial(st.basis[row]).evaluate(x_);
    MultiPoly piece(r);
    for (std::size_t col = 0; col < st.basis.size(); ++col) {
      Rational u(0);
      for (std::size_t row = 0; row < st.basis.size(); ++row)
        if (sgn(st.matrix[row][col]) != 0 && sgn(xmono[row]) != 0) u += st.matrix[row][col] * xmono[row];
      if (sgn(u) == 0) continue;
      // <y, z>^m / m! = sum_e w^e y^e / prod(e_i!)
      mpz_class fact(1);
      for (int v : st.basis[col])
        for (int t = 2; t <= v; ++t) fact *= t;
      piece.add_term(st.basis[col], u / Rational(fact));
    }
    pieces_.push_back(std::move(piece));
  }
}

namespace {

std::vector<Complex> gram_times(const RootSystem& R, const ComplexPoint& z) {
  std::vector<Complex> w(R.rank(), Complex(0.0));
  for (int i = 0; i < R.rank(); ++i)
    for (int j = 0; j < R.rank(); ++j) w[i] += R.gram()[i][j].get_d() * z.coords[j];
  return w;
}

}  // namespace

KernelSeries::Value KernelSeries::evaluate(const ComplexPoint& z) const {
  auto w = gram_times(*R_, z);
  Value v{Complex(0.0), 0.0};
  for (const auto& piece : pieces_) {
    Complex t = piece.evaluate(w);
    v.value += t;
    v.tail = std::abs(t);
  }
  if (!std::isfinite(v.value.real()) || !std::isfinite(v.value.imag()))
    throw ResourceLimit("kernel series overflowed");
  return v;
}

Rational KernelSeries::moment(const RatVec& z, int m) const {
  const int r = R_->rank();
  RatVec w(r, Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) w[i] += R_->gram()[i][j] * z[j];
  mpz_class fact(1);
  for (int t = 2; t <= m; ++t) fact *= t;
  return pieces_.at(m).evaluate(w) * Rational(fact);
}

KernelSeries::Value expw_truncated(Intertwiner& V, const Point& x, const ComplexPoint& z, int order) {
  return KernelSeries(V, x, order).evaluate(z);
}

KernelSeries::Value bessel_JW(Intertwiner& V, const Point& x, const ComplexPoint& z, int order) {
  const RootSystem& R = V.root_system();
  KernelSeries series(V, x, order);
  KernelSeries::Value acc{Complex(0.0), 0.0};
  for (const auto& w : R.weyl()) {
    auto v = series.evaluate(ComplexPoint{R.apply(w, z.coords)});
    acc.value += v.value;
    acc.tail = std::max(acc.tail, v.tail);
  }
  acc.value /= static_cast<double>(R.weyl_order());
  return acc;
}

Complex v_moment(Intertwiner& V, const Point& x, const ComplexPoint& z, int m) {
  KernelSeries series(V, x, m);
  double fact = 1.0;
  for (int t = 2; t <= m; ++t) fact *= t;
  return series.piece(m).evaluate(gram_times(V.root_system(), z)) * fact;
}

Rational v_moment(Intertwiner& V, const Point& x, const RatVec& z, int m) {
  return KernelSeries(V, x, m).moment(z, m);
}

}  // namespace hop
