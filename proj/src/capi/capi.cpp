// Implementation of the C API: routes JSON requests to the verification and
// simulation workflows and renders their documents. All C++ exceptions are
// converted to status codes at the boundary; diagnostics go to a
// thread-local message retrievable with pg_last_error().
#include "percgames.h"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "regimes/region.hpp"
#include "reports/reports.hpp"

struct pg_run {
  std::string output;
  bool passed = true;
};

namespace {

using pg::Json;

thread_local std::string t_last_error;

struct RunResult {
  std::string output;
  bool passed = true;
};

const Json& field(const Json& req, const char* key) {
  const auto it = req.find(key);
  if (it == req.end())
    throw std::invalid_argument(std::string("missing request field: ") + key);
  return *it;
}

pg::Rat rat_field(const Json& req, const char* key) {
  const Json& v = field(req, key);
  if (v.is_string()) return pg::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return pg::Rat(v.get<long>());
  // Floats are rejected: a binary double silently misstates the requested
  // rational, and every downstream check is exact.
  throw std::invalid_argument(std::string("field must be a rational string: ") +
                              key);
}

std::uint64_t u64_field(const Json& req, const char* key) {
  const Json& v = field(req, key);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("field must be an integer: ") + key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto i = v.get<std::int64_t>();
  if (i < 0)
    throw std::invalid_argument(std::string("field must be nonnegative: ") + key);
  return static_cast<std::uint64_t>(i);
}

std::uint64_t u64_field_or(const Json& req, const char* key,
                           std::uint64_t fallback) {
  return req.contains(key) ? u64_field(req, key) : fallback;
}

std::string str_field(const Json& req, const char* key) {
  const Json& v = field(req, key);
  if (!v.is_string())
    throw std::invalid_argument(std::string("field must be a string: ") + key);
  return v.get<std::string>();
}

std::string str_field_or(const Json& req, const char* key,
                         const std::string& fallback) {
  return req.contains(key) ? str_field(req, key) : fallback;
}

bool is_generalized(const Json& req) {
  const std::string m = str_field(req, "model");
  if (m == "generalized") return true;
  if (m == "bond") return false;
  throw std::invalid_argument("model must be generalized or bond");
}

pg::GenParams gen_params_of(const Json& req) {
  return pg::make_gen_params(rat_field(req, "p"), rat_field(req, "q"),
                             rat_field(req, "r"));
}

pg::BondParams bond_params_of(const Json& req) {
  return pg::make_bond_params(rat_field(req, "rp"), rat_field(req, "sp"));
}

pg::GridAxis axis_field(const Json& req, const char* key) {
  const Json& a = field(req, key);
  if (!a.is_object())
    throw std::invalid_argument(std::string("axis must be an object: ") + key);
  return pg::GridAxis{rat_field(a, "lo"), rat_field(a, "hi"),
                      static_cast<unsigned>(u64_field(a, "count"))};
}

// The request minus "threads" is the run's configuration: parallelism never
// influences output bytes, so it is not part of the config identity.
Json config_echo(const Json& req) {
  Json config = req;
  config.erase("threads");
  return config;
}

RunResult run_kernel(const Json& req) {
  const auto kernel = is_generalized(req)
                          ? pg::generalized_envelope_kernel(gen_params_of(req))
                          : pg::bond_envelope_kernel(bond_params_of(req));
  const Json doc{{"config", config_echo(req)},
                 {"kernel", Json::parse(kernel.dump_json())}};
  return {pg::dump_document(doc), true};
}

RunResult run_regime(const Json& req) {
  Json verdict;
  if (is_generalized(req)) {
    const pg::GenParams gp = gen_params_of(req);
    verdict = pg::regime_json(gp, pg::check_generalized(gp),
                              pg::check_simplified(gp));
  } else {
    const pg::BondParams bp = bond_params_of(req);
    verdict = pg::regime_json(bp, pg::check_bond(bp));
  }
  const Json doc{{"config", config_echo(req)}, {"verdict", verdict}};
  return {pg::dump_document(doc), true};
}

RunResult run_region(const Json& req) {
  const std::string csv =
      is_generalized(req)
          ? pg::sample_region_generalized({axis_field(req, "p"),
                                           axis_field(req, "q"),
                                           axis_field(req, "r")})
          : pg::sample_region_bond(
                {axis_field(req, "rp"), axis_field(req, "sp")});
  return {pg::with_config_header(config_echo(req), csv), true};
}

RunResult run_draw_prob(const Json& req) {
  const auto horizon = u64_field(req, "horizon");
  const auto replicas = u64_field(req, "replicas");
  const auto seed = u64_field(req, "seed");
  const auto threads = static_cast<unsigned>(u64_field_or(req, "threads", 0));
  const std::string format = str_field_or(req, "format", "json");
  if (format != "json" && format != "csv")
    throw std::invalid_argument("format must be json or csv");
  const pg::DrawEstimate est =
      is_generalized(req)
          ? pg::estimate_draw_probability(gen_params_of(req), horizon,
                                          replicas, seed, threads)
          : pg::estimate_draw_probability(bond_params_of(req), horizon,
                                          replicas, seed, threads);
  const Json config = config_echo(req);
  if (format == "csv") return {pg::draw_estimate_csv(config, est), true};
  const Json doc{{"config", config}, {"estimate", pg::draw_estimate_json(est)}};
  return {pg::dump_document(doc), true};
}

RunResult run_simulate(const Json& req) {
  const std::string geometry = str_field_or(req, "geometry", "ring");
  if (geometry != "ring")
    throw std::invalid_argument("simulate supports ring geometry only");
  const pg::Geometry ring =
      pg::ring_geometry(u64_field(req, "size"), u64_field(req, "steps"));
  const pg::PcaInit init = pg::pca_init_from_name(str_field(req, "init"));
  const pg::SeedSpec seed{u64_field(req, "seed"), 0};
  const std::string driver = str_field_or(req, "driver", "kernel");
  pg::PcaTrajectory traj;
  if (driver == "kernel") {
    const auto kernel =
        is_generalized(req)
            ? pg::generalized_envelope_kernel(gen_params_of(req))
            : pg::bond_envelope_kernel(bond_params_of(req));
    traj = pg::run_envelope_pca(kernel, ring, init, seed);
  } else if (driver == "labels") {
    const pg::Board board =
        is_generalized(req)
            ? pg::generate_board(gen_params_of(req), ring, seed)
            : pg::generate_board(bond_params_of(req), ring, seed);
    traj = pg::run_envelope_pca_labels(board, init);
  } else {
    throw std::invalid_argument("driver must be kernel or labels");
  }
  return {pg::densities_csv(config_echo(req), traj), true};
}

RunResult run_verify_lemmas(const Json& req) {
  const auto points = u64_field(req, "point_samples");
  const auto measures = u64_field(req, "measure_samples");
  const auto seed = u64_field(req, "seed");
  const std::string family = str_field_or(req, "family", "all");
  if (family != "identities" && family != "bounds" && family != "all")
    throw std::invalid_argument("family must be identities, bounds or all");
  Json rows = Json::array();
  bool all_pass = true;
  std::size_t checks = 0;
  const auto absorb = [&](pg::LemmaSweepResult sweep) {
    for (auto& row : sweep.rows) rows.push_back(std::move(row));
    all_pass = all_pass && sweep.all_pass;
    checks += sweep.checks;
  };
  if (family != "bounds")
    absorb(pg::run_identity_lemma_sweep(points, measures, seed));
  if (family != "identities")
    absorb(pg::run_bound_lemma_sweep(points, measures, seed));
  const Json doc{{"config", config_echo(req)},
                 {"rows", std::move(rows)},
                 {"checks", checks},
                 {"all_pass", all_pass}};
  return {pg::dump_document(doc), all_pass};
}

RunResult run_verify_weights(const Json& req) {
  const auto variant = pg::weight_variant_from_name(str_field(req, "variant"));
  const pg::WeightVerificationRun run = pg::run_weight_verification(
      variant, u64_field(req, "param_samples"),
      u64_field(req, "measure_samples"), u64_field(req, "seed"));
  Json doc = pg::weight_report_json(run);
  doc["config"] = config_echo(req);
  return {pg::dump_document(doc), run.all_pass};
}

RunResult run_roots(const Json& req) {
  const std::string format = str_field_or(req, "format", "table");
  if (format != "table" && format != "json")
    throw std::invalid_argument("format must be table or json");
  const auto rows = pg::check_all_thresholds();
  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.pass;
  const Json config = config_echo(req);
  if (format == "table")
    return {pg::config_comment(config) + pg::root_table_text(rows), all_pass};
  const Json doc{{"config", config},
                 {"rows", pg::root_rows_json(rows)},
                 {"all_pass", all_pass}};
  return {pg::dump_document(doc), all_pass};
}

RunResult dispatch(const std::string& subcommand, const Json& req) {
  if (subcommand == "kernel") return run_kernel(req);
  if (subcommand == "regime") return run_regime(req);
  if (subcommand == "region") return run_region(req);
  if (subcommand == "draw-prob") return run_draw_prob(req);
  if (subcommand == "simulate") return run_simulate(req);
  if (subcommand == "verify-lemmas") return run_verify_lemmas(req);
  if (subcommand == "verify-weights") return run_verify_weights(req);
  if (subcommand == "roots") return run_roots(req);
  throw std::invalid_argument("unknown subcommand: " + subcommand);
}

}  // namespace

extern "C" {

const char* pg_version(void) { return "1.0.0"; }

const char* pg_last_error(void) { return t_last_error.c_str(); }

pg_status pg_run_create(const char* subcommand, const char* request_json,
                        pg_run** out_run) {
  if (out_run == nullptr) return PG_ERR_INVALID_ARGUMENT;
  *out_run = nullptr;
  if (subcommand == nullptr) {
    t_last_error = "subcommand is null";
    return PG_ERR_INVALID_ARGUMENT;
  }
  try {
    const Json req = (request_json == nullptr || *request_json == '\0')
                         ? Json::object()
                         : Json::parse(request_json);
    if (!req.is_object())
      throw std::invalid_argument("request must be a JSON object");
    RunResult result = dispatch(subcommand, req);
    *out_run = new pg_run{std::move(result.output), result.passed};
    if (result.passed) {
      t_last_error.clear();
      return PG_OK;
    }
    t_last_error = "verification failed: the run output names the failing rows";
    return PG_ERR_VERIFICATION_FAILED;
  } catch (const Json::exception& e) {
    t_last_error = e.what();
    return PG_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    t_last_error = e.what();
    return PG_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return PG_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PG_ERR_INTERNAL;
  }
}

const char* pg_run_output(const pg_run* run) {
  return run == nullptr ? "" : run->output.c_str();
}

int pg_run_passed(const pg_run* run) {
  return (run != nullptr && run->passed) ? 1 : 0;
}

void pg_run_destroy(pg_run* run) { delete run; }

}  // extern "C"
