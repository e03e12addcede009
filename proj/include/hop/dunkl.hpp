#pragma once

#include "hop/algebra.hpp"
#include "hop/rootsys.hpp"

#include <deque>
#include <map>
#include <mutex>

namespace hop {

/// T_xi p = d_xi p + sum_alpha k_alpha <alpha, xi> (p - p o sigma_alpha) / <alpha, .>
MultiPoly apply_dunkl(const RootSystem& R, const Multiplicity& k, const RatVec& xi, const MultiPoly& p);

/// V restricted to homogeneous polynomials of one degree.
struct IntertwinerStage {
  int degree = 0;
  std::vector<MultiPoly::Exponent> basis;
  std::map<MultiPoly::Exponent, std::size_t> index;
  RatMatrix matrix;  // matrix[row][col] = coefficient of basis[row] in V(basis[col])

  MultiPoly image(std::size_t col, int nvars) const;
};

/// The intertwining operator, built one degree at a time from
/// T_{alpha_j} V p = V d_{alpha_j} p by exact elimination. Stages are cached;
/// references returned by stage() stay valid for the object's lifetime.
class Intertwiner {
 public:
  Intertwiner(RootSystem R, Multiplicity k);

  const RootSystem& root_system() const { return R_; }
  const Multiplicity& multiplicity() const { return k_; }

  /// Builds every missing stage up to n. Throws InvariantViolation on rank deficiency.
  const IntertwinerStage& stage(int n);
  int built_degree() const;

  MultiPoly apply(const MultiPoly& p);

 private:
  void build_next();

  RootSystem R_;
  Multiplicity k_;
  std::deque<IntertwinerStage> stages_;
  mutable std::mutex mu_;
};

/// Truncated Dunkl kernel Exp_W(x, .) as homogeneous pieces in w = B z:
/// pieces[m](w) = V(<., z>^m)(x) / m!.
class KernelSeries {
 public:
  KernelSeries(Intertwiner& V, const Point& x, int order);

  int order() const { return static_cast<int>(pieces_.size()) - 1; }
  const MultiPoly& piece(int m) const { return pieces_[m]; }

  struct Value {
    Complex value;
    double tail;  // |last term|
  };
  Value evaluate(const ComplexPoint& z) const;
  /// V(<., z>^m)(x) for real rational z, exact.
  Rational moment(const RatVec& z, int m) const;

 private:
  const RootSystem* R_;
  Point x_;
  std::vector<MultiPoly> pieces_;
};

KernelSeries::Value expw_truncated(Intertwiner& V, const Point& x, const ComplexPoint& z, int order);

/// W-average of the truncated kernel over z.
KernelSeries::Value bessel_JW(Intertwiner& V, const Point& x, const ComplexPoint& z, int order);

Complex v_moment(Intertwiner& V, const Point& x, const ComplexPoint& z, int m);
Rational v_moment(Intertwiner& V, const Point& x, const RatVec& z, int m);

}  // namespace hop
