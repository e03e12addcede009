#include "hop/commands.hpp"

#include "hop/errors.hpp"
#include "hop/exec.hpp"
#include "hop/io.hpp"
#include "hop/limits.hpp"
#include "hop/rankone.hpp"
#include "hop/sweep.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hop {

namespace {

using io::json;

// F against Q is a floating comparison; the coefficient maps are exact.
constexpr double kRankOneTolerance = 1e-10;

struct Output {
  int code = kExitOk;
  std::string text;
};

json failure_record(const std::string& kind, const std::string& invariant, const std::string& detail) {
  return json{{"status", kind}, {"invariant", invariant}, {"detail", detail}};
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions o;
  o.downset_limit = cfg.downset_limit;
  o.seed = cfg.seed;
  return o;
}

Weight require_lambda(const RunConfig& cfg) {
  if (!cfg.lambda) throw ConfigError("this command needs \"lambda\"");
  return Weight{*cfg.lambda};
}

json k_json(const Multiplicity& k) {
  json a = json::array();
  for (const auto& q : k.per_orbit()) a.push_back(to_string(q));
  return a;
}

json header(const std::string& command, const RootSystem& R, const Multiplicity& k) {
  return json{{"command", command}, {"status", "ok"}, {"root_system", R.code()}, {"k", k_json(k)}};
}

/// `failed` empty means every verified invariant held.
Output finish(const RunConfig& cfg, json doc, const std::string& csv, const std::string& failed) {
  if (!failed.empty()) {
    doc["status"] = "failure";
    doc["invariant"] = failed;
    return {kExitInvariant, doc.dump(2) + "\n"};
  }
  return {kExitOk, cfg.format == "csv" ? csv : doc.dump(2) + "\n"};
}

std::string exponent_label(const IntVec& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i]);
  return s;
}

struct CacheFile {
  const RunConfig& cfg;
  EPolyCache cache;
  explicit CacheFile(const RunConfig& c) : cfg(c) {
    if (!cfg.cache.empty()) io::load_cache(cfg.cache, cache);
  }
  void save() const {
    if (!cfg.cache.empty()) io::save_cache(cfg.cache, cache);
  }
};

Output cmd_epoly(const RunConfig& cfg) {
  const RootSystem R = RootSystem::from_code(cfg.root_system);
  const Multiplicity k = multiplicity(R, cfg.k);
  const Weight lambda = require_lambda(cfg);
  CacheFile file(cfg);
  auto e = file.cache.get_or_compute(R, k, lambda, solve_options(cfg));
  file.save();

  const PositivityReport pos = check_positivity(*e);
  bool residual = true;
  for (int d = 0; d < R.rank(); ++d)
    if (!eigen_residual(R, k, *e, d).is_zero()) residual = false;
  const bool dominant = is_dominant(R, lambda);
  const bool orbit = !dominant || spectral_orbit_check(R, k, lambda);

  json doc = header("epoly", R, k);
  json checks{{"leading_is_one", pos.leading_is_one},
              {"mass_is_one", pos.mass_is_one},
              {"all_nonnegative", pos.all_nonnegative},
              {"normalized_in_unit_interval", pos.normalized_in_unit_interval},
              {"eigen_residual_zero", residual},
              {"spectral_orbit", dominant ? json(orbit) : json(nullptr)}};
  if (pos.counterexample) checks["counterexample"] = json(pos.counterexample->coords);
  doc["checks"] = std::move(checks);
  doc["epoly"] = io::to_json(*e);

  std::string failed;
  if (!pos.leading_is_one) failed = "leading_coefficient";
  else if (!pos.all_nonnegative) failed = "positivity";
  else if (!pos.mass_is_one) failed = "mass";
  else if (!pos.normalized_in_unit_interval) failed = "unit_interval";
  else if (!residual) failed = "eigen_residual";
  else if (!orbit) failed = "spectral_orbit";

  std::ostringstream csv;
  for (int i = 1; i <= R.rank(); ++i) csv << "nu" << i << ',';
  csv << "a,b\n";
  for (const auto& [nu, a] : e->a.terms()) {
    for (int c : nu.coords) csv << c << ',';
    csv << to_string(a) << ',' << to_string(e->b.coeff(nu)) << '\n';
  }
  return finish(cfg, std::move(doc), csv.str(), failed);
}

Output cmd_dunkl_v(const RunConfig& cfg) {
  const RootSystem R = RootSystem::from_code(cfg.root_system);
  const Multiplicity k = multiplicity(R, cfg.k);
  Intertwiner V(R, k);
  const IntertwinerCheckResult check = intertwiner_identity_check(V, cfg.degree, Exec::Parallel);

  json doc = header("dunkl-v", R, k);
  doc["checks"] = json{{"v_one_is_one", check.v_one_is_one},
                       {"identities_checked", check.identities_checked},
                       {"identity_failures", check.failures}};
  json stages = json::array();
  std::ostringstream csv;
  csv << "degree,row,col,value\n";
  for (int n = 0; n <= cfg.degree; ++n) {
    const IntertwinerStage& s = V.stage(n);
    stages.push_back(io::to_json(s));
    for (std::size_t r = 0; r < s.basis.size(); ++r)
      for (std::size_t c = 0; c < s.basis.size(); ++c)
        if (sgn(s.matrix[r][c]) != 0)
          csv << n << ',' << exponent_label(s.basis[r]) << ',' << exponent_label(s.basis[c]) << ','
              << to_string(s.matrix[r][c]) << '\n';
  }
  doc["stages"] = std::move(stages);

  std::string failed;
  if (!check.v_one_is_one) failed = "v_one";
  else if (check.failures) failed = "intertwining_identity";
  else if (k.is_zero() && !check.identity_stages) failed = "zero_multiplicity_identity";
  return finish(cfg, std::move(doc), csv.str(), failed);
}

Output cmd_expw(const RunConfig& cfg) {
  const RootSystem R = RootSystem::from_code(cfg.root_system);
  const Multiplicity k = multiplicity(R, cfg.k);
  Point x;
  if (cfg.x) x = *cfg.x;
  else if (cfg.lambda) x = R.to_point(Weight{*cfg.lambda});
  else throw ConfigError("expw needs \"x\" or \"lambda\"");
  const auto grid = cfg.z_grid ? *cfg.z_grid : default_z_grid(R);

  Intertwiner V(R, k);
  KernelSeries series(V, x, cfg.truncation);
  json rows = json::array();
  std::ostringstream csv;
  for (int i = 1; i <= R.rank(); ++i) csv << 'z' << i << "_re,z" << i << "_im,";
  csv << "expw_re,expw_im,expw_tail,jw_re,jw_im,jw_tail\n";
  for (const auto& z : grid) {
    const auto e = series.evaluate(z);
    const auto jw = bessel_JW(V, x, z, cfg.truncation);
    json zj = json::array();
    for (const auto& c : z.coords) {
      zj.push_back(io::to_json(c));
      csv << io::format_double(c.real()) << ',' << io::format_double(c.imag()) << ',';
    }
    rows.push_back(json{{"z", std::move(zj)},
                        {"expw", io::to_json(e.value)},
                        {"expw_tail", e.tail},
                        {"jw", io::to_json(jw.value)},
                        {"jw_tail", jw.tail}});
    csv << io::format_double(e.value.real()) << ',' << io::format_double(e.value.imag()) << ','
        << io::format_double(e.tail) << ',' << io::format_double(jw.value.real()) << ','
        << io::format_double(jw.value.imag()) << ',' << io::format_double(jw.tail) << '\n';
  }
  json doc = header("expw", R, k);
  doc["x"] = io::to_json(x);
  doc["truncation"] = cfg.truncation;
  doc["rows"] = std::move(rows);
  return finish(cfg, std::move(doc), csv.str(), "");
}

Output cmd_limit(const RunConfig& cfg) {
  const RootSystem R = RootSystem::from_code(cfg.root_system);
  const Multiplicity k = multiplicity(R, cfg.k);
  const Weight lambda = require_lambda(cfg);
  const Weight lambda_plus = dominant_rep(R, lambda).first;
  const auto grid = cfg.z_grid ? *cfg.z_grid : default_z_grid(R);
  const RatVec dir = cfg.moment_direction ? *cfg.moment_direction : rho(R, Multiplicity::uniform(R, Rational(1)));
  const SolveOptions opts = solve_options(cfg);

  CacheFile file(cfg);
  Intertwiner V(R, k);
  std::vector<ConvergenceTable> tables;
  tables.push_back(scaling_error_table(R, k, lambda, grid, cfg.n_list, cfg.truncation, file.cache, V,
                                       Exec::Parallel, opts));
  tables.push_back(symmetric_limit_table(R, k, lambda_plus, grid, cfg.n_list, cfg.truncation, file.cache, V,
                                         Exec::Parallel, opts));
  tables.push_back(
      moment_convergence(R, k, lambda, dir, cfg.moment_order, cfg.n_list, file.cache, V, Exec::Parallel, opts));
  file.save();

  bool rows_failed = false;
  json tj = json::array();
  std::ostringstream csv;
  io::write_csv_header(csv, R.rank());
  for (const auto& t : tables) {
    for (const auto& r : t.rows) rows_failed |= !r.failure.empty();
    tj.push_back(io::to_json(t));
    io::write_csv_rows(csv, t);
  }
  json doc = header("limit", R, k);
  doc["lambda"] = json(lambda.coords);
  doc["lambda_plus"] = json(lambda_plus.coords);
  doc["truncation"] = cfg.truncation;
  doc["moment"] = json{{"order", cfg.moment_order}, {"direction", io::to_json(dir)}};
  doc["tables"] = std::move(tj);
  if (rows_failed) {
    // Failed rows stay in the tables; the run is reported as incomplete.
    doc["status"] = "incomplete";
    return {kExitResource, doc.dump(2) + "\n"};
  }
  return finish(cfg, std::move(doc), csv.str(), "");
}

Output cmd_measure(const RunConfig& cfg) {
  const RootSystem R = RootSystem::from_code(cfg.root_system);
  const Multiplicity k = multiplicity(R, cfg.k);
  const Weight lambda = require_lambda(cfg);
  const RatVec dir = cfg.moment_direction ? *cfg.moment_direction : rho(R, Multiplicity::uniform(R, Rational(1)));
  const SolveOptions opts = solve_options(cfg);
  CacheFile file(cfg);
  Intertwiner V(R, k);
  const Rational target = v_moment(V, R.to_point(lambda), dir, cfg.moment_order);

  std::vector<DiscreteMeasure> measures(cfg.n_list.size());
  for_each_index(cfg.n_list.size(), Exec::Parallel, [&](std::size_t i) {
    measures[i] = measure_approx(R, k, lambda, cfg.n_list[i], file.cache, opts);
  });
  file.save();

  std::string failed;
  json ms = json::array();
  std::ostringstream csv;
  csv << "n,";
  for (int i = 1; i <= R.rank(); ++i) csv << 'x' << i << ',';
  csv << "weight\n";
  for (std::size_t i = 0; i < measures.size(); ++i) {
    const DiscreteMeasure& mu = measures[i];
    const bool mass = mu.mass() == 1, nonneg = mu.nonnegative(), support = support_check(R, mu, lambda);
    if (failed.empty()) {
      if (!nonneg) failed = "measure_nonnegative";
      else if (!mass) failed = "measure_mass";
      else if (!support) failed = "measure_support";
    }
    const Rational m = measure_moment(R, mu, dir, cfg.moment_order);
    json mj = io::to_json(mu);
    mj["n"] = cfg.n_list[i];
    mj["checks"] = json{{"mass_is_one", mass}, {"nonnegative", nonneg}, {"support_in_hull", support}};
    mj["moment"] = to_string(m);
    mj["moment_error"] = Rational(abs(m - target)).get_d();
    ms.push_back(std::move(mj));
    for (const auto& [x, w] : mu.atoms) {
      csv << cfg.n_list[i] << ',';
      for (const auto& c : x) csv << to_string(c) << ',';
      csv << to_string(w) << '\n';
    }
  }
  json doc = header("measure", R, k);
  doc["lambda"] = json(lambda.coords);
  doc["moment"] = json{{"order", cfg.moment_order}, {"direction", io::to_json(dir)}, {"target", to_string(target)}};
  doc["measures"] = std::move(ms);
  return finish(cfg, std::move(doc), csv.str(), failed);
}

Output cmd_verify(const RunConfig& cfg) {
  CacheFile file(cfg);
  const SolveOptions opts = solve_options(cfg);
  json checks = json::array();
  std::string failed;
  std::ostringstream csv;
  csv << "check,system,k,count,failures,passed\n";
  auto record = [&](const std::string& name, const std::string& sys, const std::string& k, std::size_t count,
                    std::size_t failures, json extra = json::object()) {
    const bool passed = failures == 0;
    json c{{"check", name}, {"system", sys}, {"k", k}, {"count", count}, {"failures", failures}, {"passed", passed}};
    for (auto& [key, v] : extra.items()) c[key] = v;
    checks.push_back(std::move(c));
    csv << name << ',' << sys << ',' << k << ',' << count << ',' << failures << ',' << (passed ? 1 : 0) << '\n';
    if (!passed && failed.empty()) failed = name;
  };

  for (const auto& code : cfg.systems) {
    const RootSystem R = RootSystem::from_code(code);
    const auto weights = sweep_weights(R, cfg.sweep_limit);

    const auto hull = hull_lemma_sweep(R, weights, Exec::Parallel, cfg.downset_limit);
    record("hull_lemma", code, "", hull.points_checked, hull.failures);
    const auto agree = hull_agreement(R, cfg.hull_pairs, cfg.seed, Exec::Parallel);
    record("hull_agreement", code, "", agree.pairs, agree.pairs - agree.agreements, json{{"inside", agree.inside}});

    for (const auto& kv : cfg.k_values) {
      const Multiplicity k = Multiplicity::uniform(R, kv);
      const std::string ks = to_string(kv);
      const auto sweep = positivity_sweep(R, k, weights, Exec::Parallel, &file.cache, opts);
      std::size_t pos_fail = 0, res_fail = 0, orbit_fail = 0;
      for (const auto& row : sweep.rows) {
        if (!row.failure.empty() || !row.positivity.ok()) ++pos_fail;
        if (!row.failure.empty() || !row.eigen_residual_zero) ++res_fail;
        if (row.orbit_applicable && !row.orbit_ok) ++orbit_fail;
      }
      record("positivity", code, ks, sweep.rows.size(), pos_fail);
      record("eigen_residual", code, ks, sweep.rows.size(), res_fail);
      record("spectral_orbit", code, ks, sweep.orbit_checks(), orbit_fail);

      if (R.rank() <= 2) {
        Intertwiner V(R, k);
        const auto it = intertwiner_identity_check(V, cfg.intertwiner_degree, Exec::Parallel);
        record("intertwining_identity", code, ks, it.identities_checked, it.failures + (it.v_one_is_one ? 0 : 1));
        if (k.is_zero()) record("zero_multiplicity_identity", code, ks, 1, it.identity_stages ? 0 : 1);
      }
      if (code == "A1") {
        const auto r1 = rankone_oracle_check(kv, cfg.rankone_n_max, cfg.rankone_samples, cfg.seed, Exec::Parallel);
        record("rankone_oracle", code, ks, r1.polys_checked + r1.f_samples,
               r1.coefficient_mismatches + (r1.max_f_error <= kRankOneTolerance ? 0 : 1),
               json{{"max_f_error", r1.max_f_error}});
      }
    }
  }
  file.save();
  json doc{{"command", "verify"}, {"status", "ok"}, {"checks", std::move(checks)}};
  return finish(cfg, std::move(doc), csv.str(), failed);
}

Output cmd_rankone(const RunConfig& cfg) {
  std::string failed;
  json oracle = json::array(), limit = json::array();
  std::ostringstream csv;
  csv << "kind,k,n,z,approx,reference,error\n";
  for (const auto& kv : cfg.k_values) {
    const auto r = rankone_oracle_check(kv, cfg.rankone_n_max, cfg.rankone_samples, cfg.seed, Exec::Parallel);
    const bool ok = r.coefficient_mismatches == 0 && r.max_f_error <= kRankOneTolerance;
    if (!ok && failed.empty()) failed = "rankone_oracle";
    oracle.push_back(json{{"k", to_string(kv)},
                          {"n_max", cfg.rankone_n_max},
                          {"polys_checked", r.polys_checked},
                          {"coefficient_mismatches", r.coefficient_mismatches},
                          {"f_samples", r.f_samples},
                          {"max_f_error", r.max_f_error},
                          {"passed", ok}});
    csv << "oracle," << to_string(kv) << ',' << cfg.rankone_n_max << ",,,," << io::format_double(r.max_f_error)
        << '\n';
    for (int n : {10, 100, 1000})
      for (double z : {0.5, 1.0, 2.0}) {
        const auto s = rankone::gegenbauer_bessel_limit(kv.get_d(), z, n);
        limit.push_back(json{{"k", to_string(kv)}, {"n", n}, {"z", z}, {"approx", s.approx},
                             {"reference", s.reference}, {"error", s.error}});
        csv << "bessel_limit," << to_string(kv) << ',' << n << ',' << io::format_double(z) << ','
            << io::format_double(s.approx) << ',' << io::format_double(s.reference) << ','
            << io::format_double(s.error) << '\n';
      }
  }
  json doc{{"command", "rankone"}, {"status", "ok"}, {"oracle", std::move(oracle)}, {"bessel_limit", std::move(limit)}};
  return finish(cfg, std::move(doc), csv.str(), failed);
}

const std::map<std::string, std::function<Output(const RunConfig&)>>& table() {
  static const std::map<std::string, std::function<Output(const RunConfig&)>> t{
      {"epoly", cmd_epoly},   {"dunkl-v", cmd_dunkl_v}, {"expw", cmd_expw},     {"limit", cmd_limit},
      {"measure", cmd_measure}, {"verify", cmd_verify}, {"rankone", cmd_rankone}};
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"epoly", "dunkl-v", "expw", "limit", "measure", "verify", "rankone"};
  return names;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out) {
  Output o;
  try {
    auto it = table().find(name);
    if (it == table().end()) throw ConfigError("unknown command " + name);
    if (cfg.workers > 0) set_workers(cfg.workers);
    o = it->second(cfg);
  } catch (const ConfigError& e) {
    o = {kExitConfig, failure_record("config_error", "valid_config", e.what()).dump(2) + "\n"};
  } catch (const ResourceLimit& e) {
    o = {kExitResource, failure_record("resource_limit", "resource_limit", e.what()).dump(2) + "\n"};
  } catch (const InvariantViolation& e) {
    o = {kExitInvariant, failure_record("failure", e.invariant(), e.what()).dump(2) + "\n"};
  } catch (const IntegrityError& e) {
    o = {kExitInvariant, failure_record("failure", "cache_integrity", e.what()).dump(2) + "\n"};
  } catch (const DegenerateSpectrum& e) {
    o = {kExitInvariant, failure_record("failure", "regular_direction", e.what()).dump(2) + "\n"};
  } catch (const Error& e) {
    o = {kExitInvariant, failure_record("failure", "unclassified", e.what()).dump(2) + "\n"};
  }

  if (cfg.out.empty()) {
    out << o.text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      out << failure_record("config_error", "valid_config", "cannot write " + cfg.out).dump(2) << '\n';
      return kExitConfig;
    }
    f << o.text;
  }
  return o.code;
}

}  // namespace hop
