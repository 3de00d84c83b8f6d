#include "polynomials/registry.hpp"

#include <stdexcept>

namespace pg {

namespace {

const std::vector<std::string> kX = {"x"};

Polynomial from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> rs;
  rs.reserve(coeffs.size());
  for (long c : coeffs) rs.emplace_back(c);
  return poly_x(rs);
}

// (1-x)^k and x^k prefactor helpers for the composite registry entries.
Polynomial one_minus_x_pow(unsigned k) {
  return (Polynomial::constant(kX, 1) - Polynomial::var(kX, "x")).pow(k);
}
Polynomial x_pow(unsigned k) { return Polynomial::var(kX, "x").pow(k); }

std::vector<ThresholdEntry> build_registry() {
  std::vector<ThresholdEntry> reg;
  auto add = [&reg](std::string id, Polynomial poly, const char* stated,
                    const char* lo, const char* hi, std::string note) {
    reg.push_back({std::move(id), std::move(poly), parse_rational(stated),
                   parse_rational(lo), parse_rational(hi), std::move(note)});
  };

  // --- s'=0 (B2) derivation chain -----------------------------------------
  add("b2_stage0_trigger", from_ints({0, 2, -4, 0, 1}), "0.53918", "0.5", "0.55",
      "stage-0 WD surplus: positive on (0, root), forcing the first adjustment");
  add("b2_high_ld", from_ints({0, 2, -6, 4, -1}), "0.4564", "0.3", "0.6",
      "LD coefficient of the high-range inequality: nonpositive on [root, 1]. "
      "The published 0.4564 is the root (0.4563110...) rounded up to a safe "
      "bound, so this entry is matched at print-rounding width");
  reg.back().print_tolerance = parse_rational("1e-4");
  add("b2_mid_ld", from_ints({0, 2, -14, 23, -14, 0, 3, -1}), "0.201383", "0.15",
      "0.25", "LD coefficient of the mid-range inequality: negative on (root, 1]");
  add("b2_mid_ldl", from_ints({1, -1, -3, 3, -1}), "0.52779", "0.5", "0.55",
      "LDL core factor of the mid-range inequality: positive on [0, root)");
  add("alpha1",
      one_minus_x_pow(2) *
          from_ints({1, -1, -3, -3, 10, -8, 0, 9, -10, 5, -1}),
      "0.435029", "0.4", "0.5",
      "low-range LDL coefficient: positive on [0, root)");
  add("alpha2",
      x_pow(1) * one_minus_x_pow(2) *
          from_ints({1, -1, -9, 14, -9, 0, 9, -10, 5, -1}),
      "0.35678", "0.3", "0.4",
      "low-range LDW coefficient: positive on [0, root)");
  add("alpha3",
      x_pow(1) * one_minus_x_pow(4) * from_ints({1, 1}) *
          from_ints({1, -2, -3, 7, -7, 4, -1}),
      "0.410819", "0.4", "0.45",
      "low-range LDD coefficient: positive on [0, root)");
  add("beta1",
      x_pow(1) * one_minus_x_pow(4) * from_ints({2, -5, 2, 1, -3, 3, -1}),
      "0.505225", "0.45", "0.55",
      "low-range LLD coefficient: positive on (0, root)");
  add("beta2",
      x_pow(1) * one_minus_x_pow(4) * from_ints({1, -3, 1, 1, -3, 3, -1}),
      "0.387969", "0.35", "0.45",
      "low-range LWLD coefficient: positive on (0, root)");
  add("beta3",
      x_pow(1) * one_minus_x_pow(2) *
          from_ints({1, -6, 9, -1, -7, 11, -10, 5, -1}),
      "0.265137", "0.2", "0.3",
      "low-range DLD coefficient: positive on (0, root)");
  add("gamma1", from_ints({1, -3, -1, 2, 13, -31, 26, 1, -28, 34, -21, 7, -1}),
      "0.345627", "0.3", "0.4",
      "low-range LWD group coefficient: positive on [0, root)");
  add("gamma2",
      x_pow(1) * from_ints({1, -4, -6, 31, -46, 32, 0, -28, 34, -21, 7, -1}),
      "0.238556", "0.2", "0.3",
      "low-range LDW group coefficient: positive on (0, root)");
  add("gamma3",
      x_pow(3) * one_minus_x_pow(6) * from_ints({1, -3, 0, 1, -2, 0, 2, -1}),
      "0.338338", "0.3", "0.4",
      "low-range LLDW/LLWD group coefficient: positive on (0, root)");
  add("gamma4", from_ints({1, -3, -2, 12, -31, 81, -156, 197, -168, 98, -38, 9, -1}),
      "0.345094", "0.3", "0.4",
      "low-range WDD group coefficient: positive on [0, root)");
  add("b2_low_ld",
      from_ints({2, -16, 21, 4, -39, 50, -35, 7, 13, -14, 6, -1}), "0.157175",
      "0.1", "0.2",
      "core of the low-range LD coefficient: negative for all x > root, which "
      "certifies the s'=0 regime threshold");

  // --- r'=s' (B3) ----------------------------------------------------------
  add("b3_lwd",
      from_ints({1, -10, 7, 0, 64, -292, 583, -663, 447, -168, 28}), "0.10883",
      "0.05", "0.2",
      "LWD coefficient of the diagonal inequality: negative for x > root, which "
      "certifies the r'=s' regime threshold");

  return reg;
}

}  // namespace

Polynomial poly_x(const std::vector<Rat>& coeffs) {
  Polynomial p(kX);
  Polynomial x = Polynomial::var(kX, "x");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p = p + x.pow(static_cast<unsigned>(i)) * coeffs[i];
  return p;
}

const std::vector<ThresholdEntry>& threshold_registry() {
  static const std::vector<ThresholdEntry> reg = build_registry();
  return reg;
}

const ThresholdEntry& threshold_entry(const std::string& id) {
  for (const auto& e : threshold_registry())
    if (e.id == id) return e;
  throw std::out_of_range("no threshold entry '" + id + "'");
}

std::vector<RootCheckRow> check_all_thresholds() {
  std::vector<RootCheckRow> rows;
  const Rat tol = parse_rational("1e-7");
  for (const auto& e : threshold_registry()) {
    RootBracket bracket = isolate_root(e.poly, e.search_lo, e.search_hi, tol);
    Rat err = bracket.midpoint() - e.stated_constant;
    if (err < 0) err = -err;
    rows.push_back({e.id, e.stated_constant, bracket, err <= e.print_tolerance});
  }
  return rows;
}

}  // namespace pg
