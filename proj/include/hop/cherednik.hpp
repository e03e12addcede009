#pragma once

#include "hop/algebra.hpp"
#include "hop/rootsys.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace hop {

/// A non-symmetric Heckman-Opdam polynomial together with its normalization.
struct EPoly {
  Weight lambda;
  std::vector<Weight> support;  // downset(lambda), lambda last
  TrigPoly a;                   // monic in e^lambda
  Rational c;                   // E(0)
  TrigPoly b;                   // a / c
  Point spectrum;               // tilde(lambda)
};

/// D_xi f. `xi` is a direction in simple-root coordinates.
TrigPoly apply_cherednik(const RootSystem& R, const Multiplicity& k, const RatVec& xi,
                         const TrigPoly& f);

struct SolveOptions {
  std::size_t downset_limit = 5000;
  std::uint64_t seed = 0x5eedULL;
  int max_retries = 16;
};

/// Triangular solve for E_lambda against a regular direction, then an exact
/// check of the eigen-equation in every simple direction.
/// Throws DegenerateSpectrum, ResourceLimit, or InvariantViolation.
EPoly compute_E(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                const SolveOptions& opts = {});

/// D_{alpha_i} E - <tilde(lambda), alpha_i> E, through apply_cherednik.
TrigPoly eigen_residual(const RootSystem& R, const Multiplicity& k, const EPoly& e, int simple_dir);

struct PositivityReport {
  bool leading_is_one = false;
  bool mass_is_one = false;
  bool all_nonnegative = false;
  bool normalized_in_unit_interval = false;
  std::optional<Weight> counterexample;  // first nu with a_{lambda,nu} < 0

  bool ok() const {
    return leading_is_one && mass_is_one && all_nonnegative && normalized_in_unit_interval;
  }
};

PositivityReport check_positivity(const EPoly& e);

/// P_lambda = (|W lambda| / |W|) sum_w E_lambda(w^{-1} .). Requires dominant lambda.
TrigPoly symmetrize_P(const RootSystem& R, const EPoly& e);

/// F(lambda + rho, z) = P_lambda(z) / (|W lambda| c_lambda) for dominant lambda.
Complex eval_F(const RootSystem& R, const EPoly& e, const ComplexPoint& z);
Complex eval_F(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
               const ComplexPoint& z, const SolveOptions& opts = {});

/// tilde(lambda) lies in W(lambda + rho), checked exactly over the whole group.
bool spectral_orbit_check(const RootSystem& R, const Multiplicity& k, const Weight& lambda);

/// Write-once, thread-safe memo of compute_E keyed by (system, multiplicity, lambda).
class EPolyCache {
 public:
  using Ptr = std::shared_ptr<const EPoly>;

  static std::string key(const RootSystem& R, const Multiplicity& k, const Weight& lambda);

  Ptr get_or_compute(const RootSystem& R, const Multiplicity& k, const Weight& lambda,
                     const SolveOptions& opts = {});
  Ptr find(const std::string& key) const;
  /// First insert wins; returns whichever entry is stored.
  Ptr insert(const std::string& key, EPoly e);
  std::size_t size() const;
  std::vector<std::pair<std::string, Ptr>> entries() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, Ptr> map_;
};

}  // namespace hop
