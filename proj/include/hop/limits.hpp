#pragma once

// Finite-n witnesses for the positive integral representation of the Dunkl
// kernel: the discrete probability measures built from the normalized
// coefficients of E_{n lambda}, their moments, and convergence tables.
//
// The weak-limit step is not constructed. All measures here live on the fixed
// compact set C(lambda), where moments determine the limit, so convergence is
// observed through moments and kernel values only.

#include "hop/cherednik.hpp"
#include "hop/dunkl.hpp"
#include "hop/exec.hpp"

#include <map>
#include <string>

namespace hop {

struct DiscreteMeasure {
  std::map<Point, Rational, RatVecLess> atoms;

  Rational mass() const;
  bool nonnegative() const;
  /// Image under xi -> r xi.
  DiscreteMeasure dilated(const Rational& r) const;
};

/// Atoms nu/n with weights b_{n lambda, nu}.
DiscreteMeasure measure_approx(const RootSystem& R, const Multiplicity& k, const Weight& lambda, int n,
                               EPolyCache& cache, const SolveOptions& opts = {});

/// sum weight * <xi, z>^m, exact.
Rational measure_moment(const RootSystem& R, const DiscreteMeasure& mu, const RatVec& z, int m);

/// Every atom lies in C(lambda), by both hull tests.
bool support_check(const RootSystem& R, const DiscreteMeasure& mu, const Weight& lambda);

struct ConvergenceRow {
  int n = 0;
  ComplexPoint z;
  Complex approx;
  Complex reference;
  double error = 0.0;
  std::string failure;  // nonempty when the row could not be computed
};

struct ConvergenceTable {
  std::string name;
  std::vector<ConvergenceRow> rows;
};

/// approx = E_{n lambda}(z/n) / c_{n lambda}, reference = truncated Exp_W(lambda, z).
ConvergenceTable scaling_error_table(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                                     const std::vector<ComplexPoint>& z_grid, const std::vector<int>& n_list,
                                     int order, EPolyCache& cache, Intertwiner& V, Exec exec,
                                     const SolveOptions& opts = {});

/// approx = F(n lambda + rho, z/n), reference = J_W(lambda, z) truncated. lambda must be dominant.
ConvergenceTable symmetric_limit_table(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                                       const std::vector<ComplexPoint>& z_grid, const std::vector<int>& n_list,
                                       int order, EPolyCache& cache, Intertwiner& V, Exec exec,
                                       const SolveOptions& opts = {});

/// m-th moment of mu_lambda^n against V(<., z>^m)(lambda).
ConvergenceTable moment_convergence(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                                    const RatVec& z, int m, const std::vector<int>& n_list,
                                    EPolyCache& cache, Intertwiner& V, Exec exec,
                                    const SolveOptions& opts = {});

}  // namespace hop
