#include "reports/reports.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "core/measure.hpp"
#include "core/rational.hpp"

namespace pg {
namespace {

// Random points of the parameter simplex; `small_box` scales into the
// smallness box where the bound lemmas are asserted.
std::vector<GenParams> sample_theta_points(std::size_t count,
                                           std::uint64_t seed,
                                           bool small_box) {
  std::vector<GenParams> pts;
  pts.reserve(count);
  std::uint64_t idx = 0;
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 1000 + 100 * count;
  while (pts.size() < count) {
    if (++attempts > max_attempts)
      throw std::runtime_error("parameter sampling stalled");
    Rat p = random_rational(seed, idx++);
    Rat q = random_rational(seed, idx++);
    Rat r = random_rational(seed, idx++);
    if (small_box) {
      p *= kDefaultSmallness;
      q *= kDefaultSmallness;
      r *= kDefaultSmallness;
    }
    if (p + q > 1) continue;
    if (p + q + r == 0) continue;  // the all-zero corner is not a game
    pts.push_back(make_gen_params(p, q, r));
  }
  return pts;
}

template <typename VerifyFn>
LemmaSweepResult run_lemma_sweep(std::size_t points, std::size_t measures,
                                 std::uint64_t seed, bool small_box,
                                 const VerifyFn& verify) {
  LemmaSweepResult out;
  const auto pts = sample_theta_points(points, seed, small_box);
  const auto suite = make_measure_suite(measures, 5, seed + 1);
  for (const auto& gp : pts) {
    const Json pj = params_json(gp);
    for (const auto& mu : suite) {
      for (const auto& row : verify(gp, mu)) {
        out.rows.push_back(lemma_check_json(pj, row));
        out.all_pass = out.all_pass && row.pass;
        ++out.checks;
      }
    }
  }
  return out;
}

}  // namespace

Json rat_json(const Rat& x) {
  return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Json params_json(const GenParams& gp) {
  return Json{{"model", "generalized"},
              {"p", rat_json(gp.p)},
              {"q", rat_json(gp.q)},
              {"r", rat_json(gp.r)}};
}

Json params_json(const BondParams& bp) {
  return Json{{"model", "bond"},
              {"rp", rat_json(bp.r_prime)},
              {"sp", rat_json(bp.s_prime)}};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json regime_json(const GenParams& gp, const GenRegimeVerdict& v,
                 const SimplifiedVerdict& s) {
  return Json{{"params", params_json(gp)},
              {"universal", v.universal},
              {"universal_boundary", v.universal_boundary},
              {"cond", static_cast<int>(v.cond)},
              {"conditions_matched", v.conditions_matched},
              {"small", v.small},
              {"in_theta", v.in_theta},
              {"member", v.member},
              {"simplified", Json{{"s1", s.s1}, {"s4", s.s4}}}};
}

Json regime_json(const BondParams& bp, const BondRegimeVerdict& v) {
  return Json{{"params", params_json(bp)},
              {"b1", v.b1},
              {"b1_inequality", v.b1_inequality},
              {"b2", v.b2},
              {"b3", v.b3},
              {"member", v.member}};
}

Json lemma_check_json(const Json& params, const LemmaCheck& row) {
  return Json{{"lemma_id", row.lemma_id},
              {"params", params},
              {"measure_id", row.measure_id},
              {"residual_or_margin", rat_json(row.value)},
              {"pass", row.pass}};
}

LemmaSweepResult run_identity_lemma_sweep(std::size_t points,
                                          std::size_t measures,
                                          std::uint64_t seed) {
  return run_lemma_sweep(points, measures, seed, /*small_box=*/false,
                         [](const GenParams& gp, const CylinderMeasure& mu) {
                           return verify_identity_lemmas(gp, mu);
                         });
}

LemmaSweepResult run_bound_lemma_sweep(std::size_t points,
                                       std::size_t measures,
                                       std::uint64_t seed) {
  return run_lemma_sweep(points, measures, seed, /*small_box=*/true,
                         [](const GenParams& gp, const CylinderMeasure& mu) {
                           return verify_bound_lemmas(gp, mu);
                         });
}

Json weight_row_json(const InequalityReport& r) {
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = rat_json(value);
  return Json{{"variant", weight_variant_name(r.variant)},
              {"params", params},
              {"measure_id", r.measure_id},
              {"margin_num", r.margin.get_num().get_str()},
              {"margin_den_sign", r.margin.get_den().get_str()},
              {"pass", r.pass}};
}

Json weight_report_json(const WeightVerificationRun& run) {
  Json rows = Json::array();
  for (const auto& r : run.reports) rows.push_back(weight_row_json(r));
  return Json{{"variant", weight_variant_name(run.variant)},
              {"rows", std::move(rows)},
              {"all_pass", run.all_pass}};
}

Json root_rows_json(const std::vector<RootCheckRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"id", r.id},
                       {"stated_constant", rat_json(r.stated_constant)},
                       {"bracket_lo", rat_json(r.bracket.lo)},
                       {"bracket_hi", rat_json(r.bracket.hi)},
                       {"midpoint", rat_json(r.bracket.midpoint())},
                       {"pass", r.pass}});
  }
  return out;
}

std::string root_table_text(const std::vector<RootCheckRow>& rows) {
  std::size_t id_width = 2;
  for (const auto& r : rows) id_width = std::max(id_width, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(id_width) + 2) << "id"
     << std::setw(16) << "stated" << std::setw(36) << "bracket"
     << "result\n";
  std::size_t passed = 0;
  for (const auto& r : rows) {
    const std::string bracket = "[" + to_decimal(r.bracket.lo) + ", " +
                                to_decimal(r.bracket.hi) + "]";
    os << std::left << std::setw(static_cast<int>(id_width) + 2) << r.id
       << std::setw(16) << to_decimal(r.stated_constant, 8) << std::setw(36)
       << bracket << (r.pass ? "pass" : "FAIL") << "\n";
    passed += r.pass ? 1 : 0;
  }
  os << passed << "/" << rows.size() << " thresholds reproduced\n";
  return os.str();
}

Json draw_estimate_json(const DrawEstimate& e) {
  return Json{{"point_estimate", e.point_estimate},
              {"draw_count", e.draw_count},
              {"replicas", e.replicas},
              {"horizon", e.horizon},
              {"wilson_lo", e.wilson_lo},
              {"wilson_hi", e.wilson_hi}};
}

Json transform_comparison_json(const TransformComparison& c) {
  return Json{{"bond", draw_estimate_json(c.bond_estimate)},
              {"generalized", draw_estimate_json(c.generalized_estimate)},
              {"abs_difference", c.abs_difference},
              {"pooled_3sigma", c.pooled_3sigma},
              {"within", c.within}};
}

std::string config_comment(const Json& config) {
  return "# config: " + config.dump() + "\n";
}

std::string with_config_header(const Json& config, const std::string& csv) {
  return config_comment(config) + csv;
}

std::string draw_estimate_csv(const Json& config, const DrawEstimate& e) {
  std::ostringstream os;
  os << config_comment(config)
     << "point_estimate,draw_count,replicas,horizon,wilson_lo,wilson_hi\n"
     << format_double(e.point_estimate) << "," << e.draw_count << ","
     << e.replicas << "," << e.horizon << "," << format_double(e.wilson_lo)
     << "," << format_double(e.wilson_hi) << "\n";
  return os.str();
}

std::string densities_csv(const Json& config, const PcaTrajectory& t) {
  std::ostringstream os;
  os << config_comment(config) << "step,densW,densL,densD\n";
  for (const auto& d : t.densities) {
    os << d.step << "," << format_double(d.dens_w) << ","
       << format_double(d.dens_l) << "," << format_double(d.dens_d) << "\n";
  }
  return os.str();
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace pg
