#pragma once

// RunConfig: one JSON document, all exact values as strings ("p/q").
//
//   root_system       "A1" | "A2" | "B2" | "G2" | "A3" | ...           (default "A1")
//   k                 "1/2" | ["1/2", "1"] per orbit | {"short": "1/2", "long": "1"}
//                                                                       (default "1/2")
//   lambda            [int, ...] in fundamental-weight coordinates
//   truncation        series order N >= 0                               (default 30)
//   n_list            strictly increasing positive ints                 (default [4,8,16,32,64])
//   z_grid            [[c, ...], ...] in simple-root coordinates; c is a number, a
//                     rational string, or {"re": c, "im": c}.
//                     Default: t * rho/|rho| for t in {-1, -1/2, 0, 1/2, 1}, rho at k = 1.
//   x                 point for dunkl-v / expw in simple-root coordinates (default: lambda)
//   degree            top intertwiner stage for dunkl-v                  (default 4)
//   moment_order      m for moment checks                                (default 1)
//   moment_direction  rational direction in simple-root coordinates      (default rho at k = 1)
//   format            "json" | "csv"                                     (default "json")
//   out               output path, empty for stdout
//   seed              RNG seed                                           (default 24301)
//   downset_limit     downset size cap                                   (default 5000)
//   cache             persistent EPoly cache path, empty for none
//   workers           OpenMP worker count, 0 for the runtime default
//   systems, k_values, sweep_limit, hull_pairs, intertwiner_degree,
//   rankone_n_max, rankone_samples                                      (verify / rankone)
//
// Unknown keys are rejected.

#include "hop/algebra.hpp"
#include "hop/rootsys.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hop {

struct RunConfig {
  std::string root_system = "A1";
  nlohmann::json k = "1/2";  // validated form, resolved per system by multiplicity()
  std::optional<IntVec> lambda;
  int truncation = 30;
  std::vector<int> n_list{4, 8, 16, 32, 64};
  std::optional<std::vector<ComplexPoint>> z_grid;
  std::optional<RatVec> x;
  int degree = 4;
  int moment_order = 1;
  std::optional<RatVec> moment_direction;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 24301;
  std::size_t downset_limit = 5000;
  std::string cache;
  int workers = 0;

  std::vector<std::string> systems{"A1", "A2", "B2"};
  std::vector<Rational> k_values{Rational(0), Rational(1, 2), Rational(1)};
  std::size_t sweep_limit = 30;
  std::size_t hull_pairs = 1000;
  int intertwiner_degree = 4;
  int rankone_n_max = 8;
  int rankone_samples = 20;
};

/// Throws ConfigError on any invalid field; nothing is computed here.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

Multiplicity multiplicity(const RootSystem& R, const nlohmann::json& k);

/// The default z grid for R.
std::vector<ComplexPoint> default_z_grid(const RootSystem& R);

}  // namespace hop
