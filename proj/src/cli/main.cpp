// Command-line front end. Flags are assembled into a JSON request, executed
// through the C API, and the resulting document goes to --out or stdout.
// Exit codes: 0 success, 1 verification failure, 2 usage or execution error.
//
// Rational-valued flags (--p, --q, --r, --rp, --sp, axis bounds) pass through
// as literal strings and are parsed exactly by the library, so "0.01" and
// "1/100" denote the same point and the echoed configuration shows exactly
// what was requested.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "percgames.h"

namespace {

using Json = nlohmann::json;

// Per-model parameter flags shared by several subcommands; empty = not given.
struct ModelOpts {
  std::string model;
  std::string p, q, r;
  std::string rp, sp;
};

void add_model_options(CLI::App* cmd, ModelOpts& m) {
  cmd->add_option("--model", m.model, "game model")
      ->required()
      ->check(CLI::IsMember({"generalized", "bond"}));
  cmd->add_option("--p", m.p, "vertex-trap probability (generalized)");
  cmd->add_option("--q", m.q, "vertex-target probability (generalized)");
  cmd->add_option("--r", m.r, "edge-trap probability (generalized)");
  cmd->add_option("--rp", m.rp, "edge-trap probability r' (bond)");
  cmd->add_option("--sp", m.sp, "edge-target probability s' (bond)");
}

void put_model_params(Json& req, const ModelOpts& m) {
  req["model"] = m.model;
  const bool gen = m.model == "generalized";
  const bool has_gen = !m.p.empty() || !m.q.empty() || !m.r.empty();
  const bool has_bond = !m.rp.empty() || !m.sp.empty();
  if (gen && has_bond)
    throw std::runtime_error("--rp/--sp conflict with --model generalized");
  if (!gen && has_gen)
    throw std::runtime_error("--p/--q/--r conflict with --model bond");
  if (gen) {
    if (m.p.empty() || m.q.empty() || m.r.empty())
      throw std::runtime_error("--model generalized requires --p, --q and --r");
    req["p"] = m.p;
    req["q"] = m.q;
    req["r"] = m.r;
  } else {
    if (m.rp.empty() || m.sp.empty())
      throw std::runtime_error("--model bond requires --rp and --sp");
    req["rp"] = m.rp;
    req["sp"] = m.sp;
  }
}

unsigned long parse_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("axis count must be a nonnegative integer: " + s);
  }
}

void put_axis(Json& req, const char* key,
              const std::vector<std::string>& triple) {
  if (triple.size() != 3)
    throw std::runtime_error(std::string("--") + key + " expects: LO HI COUNT");
  req[key] = Json{{"lo", triple[0]},
                  {"hi", triple[1]},
                  {"count", parse_count(triple[2])}};
}

// Runs the request through the C API and writes the document. Returns the
// process exit code.
int run_and_emit(const char* subcommand, const Json& request,
                 const std::string& out_path) {
  pg_run* run = nullptr;
  const pg_status status =
      pg_run_create(subcommand, request.dump().c_str(), &run);
  if (status != PG_OK && status != PG_ERR_VERIFICATION_FAILED) {
    std::cerr << "error: " << pg_last_error() << "\n";
    return 2;
  }
  const std::string output = pg_run_output(run);
  pg_run_destroy(run);
  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << output;
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
  }
  if (status == PG_ERR_VERIFICATION_FAILED) {
    std::cerr << "verification failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Percolation games: envelope-PCA simulation and exact "
               "verification of the draw-probability-zero regimes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pg_version());

  int exit_code = 0;

  // --- kernel ---------------------------------------------------------
  auto* kernel = app.add_subcommand("kernel", "dump the envelope-PCA kernel");
  ModelOpts kernel_model;
  std::string kernel_out;
  add_model_options(kernel, kernel_model);
  kernel->add_option("--out", kernel_out, "output path (default stdout)");
  kernel->callback([&] {
    Json req;
    put_model_params(req, kernel_model);
    exit_code = run_and_emit("kernel", req, kernel_out);
  });

  // --- regime ---------------------------------------------------------
  auto* regime =
      app.add_subcommand("regime", "regime membership verdict for one point");
  ModelOpts regime_model;
  std::string regime_out;
  add_model_options(regime, regime_model);
  regime->add_option("--out", regime_out, "output path (default stdout)");
  regime->callback([&] {
    Json req;
    put_model_params(req, regime_model);
    exit_code = run_and_emit("regime", req, regime_out);
  });

  // --- region ---------------------------------------------------------
  auto* region = app.add_subcommand(
      "region", "sample regime predicates on a product grid (CSV)");
  std::string region_model;
  std::vector<std::string> ax_p, ax_q, ax_r, ax_rp, ax_sp;
  std::string region_out;
  region->add_option("--model", region_model, "game model")
      ->required()
      ->check(CLI::IsMember({"generalized", "bond"}));
  region->add_option("--p", ax_p, "p axis: LO HI COUNT")->expected(3);
  region->add_option("--q", ax_q, "q axis: LO HI COUNT")->expected(3);
  region->add_option("--r", ax_r, "r axis: LO HI COUNT")->expected(3);
  region->add_option("--rp", ax_rp, "r' axis: LO HI COUNT")->expected(3);
  region->add_option("--sp", ax_sp, "s' axis: LO HI COUNT")->expected(3);
  region->add_option("--out", region_out, "output path (default stdout)");
  region->callback([&] {
    Json req;
    req["model"] = region_model;
    if (region_model == "generalized") {
      if (!ax_rp.empty() || !ax_sp.empty())
        throw std::runtime_error("--rp/--sp conflict with --model generalized");
      put_axis(req, "p", ax_p);
      put_axis(req, "q", ax_q);
      put_axis(req, "r", ax_r);
    } else {
      if (!ax_p.empty() || !ax_q.empty() || !ax_r.empty())
        throw std::runtime_error("--p/--q/--r conflict with --model bond");
      put_axis(req, "rp", ax_rp);
      put_axis(req, "sp", ax_sp);
    }
    exit_code = run_and_emit("region", req, region_out);
  });

  // --- draw-prob ------------------------------------------------------
  auto* draw = app.add_subcommand(
      "draw-prob", "Monte Carlo draw-probability estimate with Wilson bounds");
  ModelOpts draw_model;
  std::uint64_t horizon = 256, replicas = 10000, draw_seed = 1;
  unsigned threads = 0;
  std::string draw_format = "json", draw_out;
  add_model_options(draw, draw_model);
  draw->add_option("--horizon", horizon, "triangle horizon N");
  draw->add_option("--replicas", replicas, "independent boards");
  draw->add_option("--seed", draw_seed, "master seed");
  draw->add_option("--format", draw_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  draw->add_option("--threads", threads, "worker-thread cap (0 = hardware)")
      ->envname("PGL_THREADS");
  draw->add_option("--out", draw_out, "output path (default stdout)");
  draw->callback([&] {
    Json req;
    put_model_params(req, draw_model);
    req["horizon"] = horizon;
    req["replicas"] = replicas;
    req["seed"] = draw_seed;
    req["format"] = draw_format;
    req["threads"] = threads;
    exit_code = run_and_emit("draw-prob", req, draw_out);
  });

  // --- simulate -------------------------------------------------------
  auto* simulate = app.add_subcommand(
      "simulate", "run the envelope PCA on a ring, recording densities (CSV)");
  ModelOpts sim_model;
  std::string sim_geometry = "ring", sim_init = "allD", sim_driver = "kernel";
  std::uint64_t sim_size = 0, sim_steps = 0, sim_seed = 1;
  std::string sim_out;
  add_model_options(simulate, sim_model);
  simulate->add_option("--geometry", sim_geometry, "lattice geometry")
      ->check(CLI::IsMember({"ring"}));
  simulate->add_option("--size", sim_size, "ring circumference")->required();
  simulate->add_option("--steps", sim_steps, "update steps")->required();
  simulate->add_option("--init", sim_init, "initial configuration")
      ->check(CLI::IsMember({"allD", "allW", "allL"}));
  simulate->add_option("--driver", sim_driver, "update driver")
      ->check(CLI::IsMember({"kernel", "labels"}));
  simulate->add_option("--seed", sim_seed, "master seed");
  simulate->add_option("--out", sim_out, "output path (default stdout)");
  simulate->callback([&] {
    Json req;
    put_model_params(req, sim_model);
    req["geometry"] = sim_geometry;
    req["size"] = sim_size;
    req["steps"] = sim_steps;
    req["init"] = sim_init;
    req["driver"] = sim_driver;
    req["seed"] = sim_seed;
    exit_code = run_and_emit("simulate", req, sim_out);
  });

  // --- verify ---------------------------------------------------------
  auto* verify =
      app.add_subcommand("verify", "exact verification sweeps");
  verify->require_subcommand(1);

  auto* lemmas = verify->add_subcommand(
      "lemmas", "pushforward identities and termwise bounds");
  std::uint64_t lem_points = 100, lem_measures = 20, lem_seed = 1;
  std::string lem_family = "all", lem_out;
  lemmas->add_option("--point-samples", lem_points, "parameter points");
  lemmas->add_option("--measure-samples", lem_measures, "invariant measures");
  lemmas->add_option("--seed", lem_seed, "sampling seed");
  lemmas->add_option("--family", lem_family, "which lemma family")
      ->check(CLI::IsMember({"identities", "bounds", "all"}));
  lemmas->add_option("--out", lem_out, "report path (default stdout)");
  lemmas->callback([&] {
    const Json req{{"point_samples", lem_points},
                   {"measure_samples", lem_measures},
                   {"seed", lem_seed},
                   {"family", lem_family}};
    exit_code = run_and_emit("verify-lemmas", req, lem_out);
  });

  auto* weights = verify->add_subcommand(
      "weights", "weight-function inequality over sampled regime points");
  std::string wt_variant;
  std::uint64_t wt_points = 200, wt_measures = 20, wt_seed = 1;
  std::string wt_out;
  weights->add_option("--variant", wt_variant, "weight-function variant")
      ->required()
      ->check(CLI::IsMember({"gen_cond1", "gen_cond234", "bond_B1",
                             "bond_B2_high", "bond_B2_mid", "bond_B2_low",
                             "bond_B3"}));
  weights->add_option("--param-samples", wt_points, "regime points");
  weights->add_option("--measure-samples", wt_measures, "invariant measures");
  weights->add_option("--seed", wt_seed, "sampling seed");
  weights->add_option("--out", wt_out, "report path (default stdout)");
  weights->callback([&] {
    const Json req{{"variant", wt_variant},
                   {"param_samples", wt_points},
                   {"measure_samples", wt_measures},
                   {"seed", wt_seed}};
    exit_code = run_and_emit("verify-weights", req, wt_out);
  });

  // --- roots ----------------------------------------------------------
  auto* roots = app.add_subcommand(
      "roots", "reproduce the published threshold constants by bisection");
  bool roots_list = false;
  std::string roots_format = "table", roots_out;
  roots->add_flag("--list", roots_list, "print the threshold table");
  roots->add_option("--format", roots_format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  roots->add_option("--out", roots_out, "output path (default stdout)");
  roots->callback([&] {
    const Json req{{"format", roots_format}};
    exit_code = run_and_emit("roots", req, roots_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
