#pragma once

// Crystallographic root systems in exact coordinates.
//
// Conventions used throughout the engine:
//   * points of the ambient space (roots, spectral vectors, atoms of measures)
//     are rational vectors in the simple-root basis;
//   * weights are integer vectors in the fundamental-weight basis, i.e. the
//     coordinate i of a weight is its pairing with the i-th simple coroot;
//   * inner products go through the rational Gram matrix of the simple roots.
// A1 uses the normalization where the positive root has squared length 4, so
// the weight lattice is Z with weight n sitting at the real number n.

#include "hop/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hop {

enum class Family { A, B, C, D, G };

using Point = RatVec;
using RatMatrix = std::vector<RatVec>;

struct Weight {
  IntVec coords;
  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int c : w.coords) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// A Weyl group element in both coordinate systems (row-major r x r).
struct WeylElement {
  IntVec root_matrix;
  IntVec weight_matrix;
  IntVec word;  // simple reflections, applied right to left
};

class RootSystem {
 public:
  static constexpr std::size_t kWeylCap = 1152;

  /// Throws ConfigError for unsupported (family, rank), ResourceLimit past kWeylCap.
  static RootSystem build(Family family, int rank);
  /// "A1", "B2", "G2", ...
  static RootSystem from_code(const std::string& code);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string code() const;

  const RatMatrix& gram() const { return gram_; }
  Rational inner(const Point& x, const Point& y) const;
  /// <x, alpha_i^vee> for a point in simple-root coordinates.
  Rational simple_coroot_pairing(const Point& x, int i) const;

  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  /// Coroot of positive root j in simple-coroot coordinates; <lambda, alpha^vee> = sum lambda_i d_i.
  const IntVec& positive_coroot(std::size_t j) const { return pos_coroots_[j]; }
  /// Positive root j written in the fundamental-weight basis.
  const IntVec& positive_root_weight(std::size_t j) const { return pos_root_weights_[j]; }
  int root_orbit(std::size_t j) const { return root_orbit_[j]; }
  int num_root_orbits() const { return num_orbits_; }
  const Rational& root_length2(std::size_t j) const { return root_len2_[j]; }

  const std::vector<WeylElement>& weyl() const { return weyl_; }
  std::size_t weyl_order() const { return weyl_.size(); }

  Point to_point(const Weight& w) const;
  /// Inverse of to_point; nullopt if the point is not a weight.
  std::optional<Weight> to_weight(const Point& x) const;
  int coroot_pairing(const Weight& w, std::size_t j) const;

  Weight reflect_simple(const Weight& w, int i) const;
  Point reflect_simple(const Point& x, int i) const;
  Weight apply(const WeylElement& w, const Weight& v) const;
  Point apply(const WeylElement& w, const Point& x) const;
  std::vector<Complex> apply(const WeylElement& w, const std::vector<Complex>& z) const;

  const WeylElement& simple_reflection(int i) const { return simple_refl_[i]; }

  /// Matrix of the reflection in positive root j on simple-root coordinates.
  const IntVec& reflection_matrix(std::size_t j) const { return reflections_[j]; }

  /// true iff the weight difference lies in Q_+ (nonnegative integer combination of simple roots).
  bool in_positive_cone(const Weight& diff) const;
  /// Height (sum of simple-root coordinates) of a point.
  Rational height(const Point& x) const;

 private:
  RootSystem() = default;

  Family family_{Family::A};
  int rank_{0};
  RatMatrix gram_;
  RatMatrix weight_to_root_;  // point = weight_to_root_ * weight
  std::vector<IntVec> cartan_;  // cartan_[i][j] = <alpha_i, alpha_j^vee>
  std::vector<IntVec> pos_roots_, pos_coroots_, pos_root_weights_;
  std::vector<IntVec> reflections_;
  std::vector<int> root_orbit_;
  std::vector<Rational> root_len2_;
  int num_orbits_{1};
  std::vector<WeylElement> weyl_;
  std::vector<WeylElement> simple_refl_;
};

/// Nonnegative multiplicity, constant on W-orbits of roots.
/// Orbits are indexed by root length: 0 = short, 1 = long (simply-laced systems have one orbit).
class Multiplicity {
 public:
  Multiplicity(const RootSystem& R, std::vector<Rational> per_orbit);
  static Multiplicity uniform(const RootSystem& R, const Rational& k);

  const Rational& on_root(std::size_t positive_root) const { return per_root_[positive_root]; }
  const std::vector<Rational>& per_orbit() const { return per_orbit_; }
  bool is_zero() const;
  std::string key() const;

 private:
  std::vector<Rational> per_orbit_;
  std::vector<Rational> per_root_;
};

std::pair<Weight, WeylElement> dominant_rep(const RootSystem& R, const Weight& w);
Point dominant_rep(const RootSystem& R, const Point& x);
bool is_dominant(const RootSystem& R, const Weight& w);

/// Distinct elements of the orbit W*w, sorted.
std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& w);
std::vector<Point> weyl_orbit(const RootSystem& R, const Point& x);

/// nu <= lambda in the dominance order (lambda - nu in Q_+).
bool dominance_leq(const RootSystem& R, const Weight& nu, const Weight& lambda);

/// nu ⊴ lambda: across orbits by dominance of dominant representatives,
/// inside one orbit by reversed dominance.
bool tri_leq(const RootSystem& R, const Weight& nu, const Weight& lambda);

struct DownsetOptions {
  std::size_t limit = 5000;
};

/// All nu ⊴ lambda, in a linear extension of ⊴ with lambda last.
/// Throws ResourceLimit when the set exceeds opts.limit.
std::vector<Weight> downset(const RootSystem& R, const Weight& lambda, DownsetOptions opts = {});

/// Dominant mu with lambda_plus - mu in Q_+ (lambda_plus itself included).
std::vector<Weight> dominant_weights_below(const RootSystem& R, const Weight& lambda_plus,
                                           std::size_t limit);

Point rho(const RootSystem& R, const Multiplicity& k);

/// Shifted spectral variable; sign convention sends zero pairings to -1.
Point tilde(const RootSystem& R, const Multiplicity& k, const Weight& lambda);

/// x in C(lambda) via the dual-cone characterization.
bool hull_contains_dual_cone(const RootSystem& R, const Weight& lambda, const Point& x);
/// x in C(lambda) via exact LP feasibility over the orbit vertices.
bool hull_contains_lp(const RootSystem& R, const Weight& lambda, const Point& x);
/// Both of the above; throws InvariantViolation if they disagree.
bool hull_contains(const RootSystem& R, const Weight& lambda, const Point& x);

std::string to_string(const Weight& w);

}  // namespace hop
