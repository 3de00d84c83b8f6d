// Exact multivariate polynomials over the model parameters, with dense
// rational coefficients keyed by exponent vectors. Used for symbolic kernel
// identities, regime predicates, weight-function coefficients, sign scans and
// root isolation; everything is exact (no floats).
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace pg {

class Polynomial {
 public:
  using ExpVec = std::vector<unsigned>;

  explicit Polynomial(std::vector<std::string> vars);
  static Polynomial constant(std::vector<std::string> vars, const Rat& value);
  static Polynomial var(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Rat& c) const;
  Polynomial operator-(const Rat& c) const;
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned n) const;

  // Evaluate at a point given in variable order.
  Rat eval(const std::vector<Rat>& point) const;

  // Substitute each variable by a polynomial over a common target variable
  // set; substitutions must cover every variable of *this.
  Polynomial compose(const std::map<std::string, Polynomial>& substitutions) const;

  std::string to_string() const;  // canonical, for diagnostics and reports

 private:
  void require_same_vars(const Polynomial& o) const;
  void insert(const ExpVec& e, const Rat& c);

  std::vector<std::string> vars_;
  std::map<ExpVec, Rat> terms_;  // exponent vector -> nonzero coefficient
};

inline Polynomial operator+(const Rat& c, const Polynomial& p) { return p + c; }
inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }
inline Polynomial operator-(const Rat& c, const Polynomial& p) { return (-p) + c; }

struct SignReport {
  bool all_nonneg = true;
  bool all_nonpos = true;
  bool mixed = false;
  std::size_t points_scanned = 0;
  std::size_t positive = 0, negative = 0, zero = 0;
  // one witness point per observed sign (empty if none)
  std::vector<Rat> positive_witness, negative_witness, zero_witness;

  bool all_strictly_negative() const { return all_nonpos && zero == 0 && points_scanned > 0; }
  bool all_strictly_positive() const { return all_nonneg && zero == 0 && points_scanned > 0; }
};

// Evaluate `poly` on the rational grid {lo + k*(hi-lo)/resolution} per axis,
// restricted to points where `filter` (if given) returns true.
SignReport grid_sign_scan(const Polynomial& poly,
                          const std::vector<std::pair<Rat, Rat>>& box,
                          unsigned resolution,
                          const std::function<bool(const std::vector<Rat>&)>& filter = {});

}  // namespace pg
