#include "regimes/region.hpp"

#include <stdexcept>

namespace pg {

std::vector<Rat> grid_points(const GridAxis& axis) {
  if (axis.count == 0) throw std::invalid_argument("grid axis needs points");
  if (axis.hi < axis.lo) throw std::invalid_argument("grid axis hi < lo");
  std::vector<Rat> pts;
  pts.reserve(axis.count);
  if (axis.count == 1) {
    pts.push_back(axis.lo);
    return pts;
  }
  const Rat span = axis.hi - axis.lo;
  for (unsigned k = 0; k < axis.count; ++k) {
    Rat frac(k, axis.count - 1);
    frac.canonicalize();
    pts.push_back(axis.lo + span * frac);
  }
  return pts;
}

std::string sample_region_generalized(const std::array<GridAxis, 3>& axes) {
  const auto ps = grid_points(axes[0]);
  const auto qs = grid_points(axes[1]);
  const auto rs = grid_points(axes[2]);
  std::string csv = "p,q,r,universal,cond,member\n";
  for (const Rat& p : ps)
    for (const Rat& q : qs)
      for (const Rat& r : rs) {
        csv += to_decimal(p) + ',' + to_decimal(q) + ',' + to_decimal(r) + ',';
        if (p + q > 1) {
          csv += "0,0,0\n";
          continue;
        }
        const GenRegimeVerdict v = check_generalized(make_gen_params(p, q, r));
        csv += v.universal ? '1' : '0';
        csv += ',';
        csv += static_cast<char>('0' + static_cast<int>(v.cond));
        csv += ',';
        csv += v.member ? '1' : '0';
        csv += '\n';
      }
  return csv;
}

std::string sample_region_bond(const std::array<GridAxis, 2>& axes) {
  const auto rps = grid_points(axes[0]);
  const auto sps = grid_points(axes[1]);
  std::string csv = "rp,sp,b1,b2,b3,member\n";
  for (const Rat& rp : rps)
    for (const Rat& sp : sps) {
      csv += to_decimal(rp) + ',' + to_decimal(sp) + ',';
      if (rp + sp > 1) {
        csv += "0,0,0,0\n";
        continue;
      }
      const BondRegimeVerdict v = check_bond(make_bond_params(rp, sp));
      csv += v.b1 ? '1' : '0';
      csv += ',';
      csv += v.b2 ? '1' : '0';
      csv += ',';
      csv += v.b3 ? '1' : '0';
      csv += ',';
      csv += v.member ? '1' : '0';
      csv += '\n';
    }
  return csv;
}

}  // namespace pg
