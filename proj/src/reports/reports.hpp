// Rendering layer shared by the C API: audit-exact JSON documents and CSV
// files for kernel dumps, regime verdicts, lemma/weight verification runs,
// threshold tables, and simulation outputs. Exact rationals appear as
// {"num","den"} string pairs; floats appear only in simulation outputs.
// Every renderer is deterministic so that identical run configurations yield
// byte-identical files.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kernels/kernel.hpp"
#include "polynomials/registry.hpp"
#include "pushforward/lemmas.hpp"
#include "regimes/regimes.hpp"
#include "simulator/mc.hpp"
#include "simulator/pca.hpp"
#include "weights/weights.hpp"

namespace pg {

using Json = nlohmann::json;

// {"num": "...", "den": "..."}; the denominator is positive, the sign rides
// on the numerator.
Json rat_json(const Rat& x);

Json params_json(const GenParams& gp);
Json params_json(const BondParams& bp);

// Deterministic float rendering for CSV cells (%.12g).
std::string format_double(double x);

// Regime verdicts, including the simplified sub-regimes for the generalized
// model.
Json regime_json(const GenParams& gp, const GenRegimeVerdict& v,
                 const SimplifiedVerdict& s);
Json regime_json(const BondParams& bp, const BondRegimeVerdict& v);

// One verification row: {lemma_id, params, measure_id, residual_or_margin,
// pass}.
Json lemma_check_json(const Json& params, const LemmaCheck& row);

// Randomized sweep of the pushforward lemma checks: `points` random
// parameter points x `measures` invariant measures, all exact. The identity
// sweep samples the full parameter simplex; the bound sweep samples the
// smallness box where the bounds are asserted.
struct LemmaSweepResult {
  Json rows = Json::array();
  std::size_t checks = 0;
  bool all_pass = true;
};

LemmaSweepResult run_identity_lemma_sweep(std::size_t points,
                                          std::size_t measures,
                                          std::uint64_t seed);
LemmaSweepResult run_bound_lemma_sweep(std::size_t points,
                                       std::size_t measures,
                                       std::uint64_t seed);

// One weight-inequality row: {variant, params, measure_id, margin_num,
// margin_den_sign, pass}. The margin is the exact rational margin_num /
// margin_den_sign with the sign carried by margin_num.
Json weight_row_json(const InequalityReport& r);
Json weight_report_json(const WeightVerificationRun& run);

// Threshold table rows: {id, stated_constant, bracket_lo, bracket_hi,
// midpoint, pass}; the text table is the `roots --list` rendering.
Json root_rows_json(const std::vector<RootCheckRow>& rows);
std::string root_table_text(const std::vector<RootCheckRow>& rows);

Json draw_estimate_json(const DrawEstimate& e);
Json transform_comparison_json(const TransformComparison& c);

// CSV renderings. Each starts with a `# config: {...}` comment carrying the
// serialized run configuration, so any output file identifies the run that
// produced it.
std::string config_comment(const Json& config);
std::string with_config_header(const Json& config, const std::string& csv);
std::string draw_estimate_csv(const Json& config, const DrawEstimate& e);
std::string densities_csv(const Json& config, const PcaTrajectory& t);

// Canonical document rendering: sorted keys, two-space indent, trailing
// newline.
std::string dump_document(const Json& doc);

}  // namespace pg
