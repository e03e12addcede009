#pragma once

// Invariant sweeps over many weights. Each kernel takes an Exec flag: the
// parallel path distributes weights over OpenMP threads, the serial path is
// the reference the parallel one is tested against.

#include "hop/cherednik.hpp"
#include "hop/dunkl.hpp"
#include "hop/exec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hop {

/// Every weight whose downset has at most `limit` elements.
/// Dominant representatives are scanned by increasing coordinate sum; the scan
/// stops at the first level where no dominant weight fits, which is final
/// because adding a fundamental weight never shrinks a dominant downset.
std::vector<Weight> sweep_weights(const RootSystem& R, std::size_t limit);

struct LambdaCheck {
  Weight lambda;
  std::size_t downset_size = 0;
  PositivityReport positivity;
  bool eigen_residual_zero = false;
  bool orbit_applicable = false;  // lambda dominant
  bool orbit_ok = true;
  std::string failure;

  bool ok() const { return failure.empty() && positivity.ok() && eigen_residual_zero && orbit_ok; }
};

struct SweepResult {
  std::vector<LambdaCheck> rows;

  std::size_t failures() const;
  std::size_t orbit_checks() const;
};

/// compute_E for each lambda, then positivity, mass, leading coefficient, the
/// eigen-residual in every simple direction (via apply_cherednik), and for
/// dominant lambda the spectral orbit condition.
SweepResult positivity_sweep(const RootSystem& R, const Multiplicity& k, const std::vector<Weight>& lambdas,
                             Exec exec, EPolyCache* cache = nullptr, const SolveOptions& opts = {});

struct HullSweepResult {
  std::size_t points_checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;
};

/// Every nu in downset(lambda) must lie in C(lambda) by both hull tests.
HullSweepResult hull_lemma_sweep(const RootSystem& R, const std::vector<Weight>& lambdas, Exec exec,
                                 std::size_t downset_limit = 5000);

struct HullAgreementResult {
  std::size_t pairs = 0;
  std::size_t agreements = 0;
  std::size_t inside = 0;
};

/// Random (lambda, x) pairs; counts where the dual-cone and LP tests agree.
HullAgreementResult hull_agreement(const RootSystem& R, std::size_t pairs, std::uint64_t seed, Exec exec);

struct IntertwinerCheckResult {
  std::size_t identities_checked = 0;
  std::size_t failures = 0;
  bool v_one_is_one = false;
  bool identity_stages = true;  // only meaningful for k = 0
  std::vector<std::string> details;
};

/// T_{alpha_j} V p = V d_{alpha_j} p for all monomials of degree <= max_degree.
IntertwinerCheckResult intertwiner_identity_check(Intertwiner& V, int max_degree, Exec exec);

struct RankOneCheckResult {
  std::size_t polys_checked = 0;
  std::size_t coefficient_mismatches = 0;
  std::size_t f_samples = 0;
  double max_f_error = 0.0;      // |F - Q| / max(1, |Q|)
  double max_f_abs_error = 0.0;  // |F - Q|
  std::vector<std::string> details;
};

/// A1 only: E_n / c_n against the closed form for |n| <= n_max as exact
/// coefficient maps, and F(n + k, z) against Q_n^k(cosh z) at `samples`
/// random complex z per n >= 0. The A1 scalar z is the point z*omega.
RankOneCheckResult rankone_oracle_check(const Rational& k, int n_max, int samples, std::uint64_t seed, Exec exec);

}  // namespace hop
