#include "polynomials/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace pg {

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rat& value) {
  Polynomial p(std::move(vars));
  if (value != 0) p.terms_[ExpVec(p.vars_.size(), 0)] = value;
  return p;
}

Polynomial Polynomial::var(std::vector<std::string> vars, const std::string& name) {
  Polynomial p(std::move(vars));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end())
    throw std::invalid_argument("variable '" + name + "' not in variable set");
  ExpVec e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.terms_[e] = 1;
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    deg = std::max(deg, d);
  }
  return deg;
}

void Polynomial::require_same_vars(const Polynomial& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("polynomial variable sets differ: [" + to_string() +
                                "] vs [" + o.to_string() + "]");
}

void Polynomial::insert(const ExpVec& e, const Rat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_vars(o);
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.insert(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_vars(o);
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.insert(e, Rat(-c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_vars(o);
  Polynomial out(vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      out.insert(e, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Rat& c) const {
  Polynomial out = *this;
  out.insert(ExpVec(vars_.size(), 0), c);
  return out;
}

Polynomial Polynomial::operator-(const Rat& c) const { return *this + Rat(-c); }

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial out(vars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_[e] = coef * c;
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial acc = constant(vars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("evaluation point arity mismatch");
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= rat_pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::compose(const std::map<std::string, Polynomial>& substitutions) const {
  if (substitutions.empty()) throw std::invalid_argument("empty substitution map");
  const std::vector<std::string>& target_vars = substitutions.begin()->second.vars();
  std::vector<const Polynomial*> subs;
  subs.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = substitutions.find(v);
    if (it == substitutions.end())
      throw std::invalid_argument("no substitution for variable '" + v + "'");
    if (it->second.vars() != target_vars)
      throw std::invalid_argument("substitution polynomials disagree on variables");
    subs.push_back(&it->second);
  }
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * subs[i]->pow(e[i]);
    out = out + term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_fraction(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + vars_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

SignReport grid_sign_scan(const Polynomial& poly,
                          const std::vector<std::pair<Rat, Rat>>& box,
                          unsigned resolution,
                          const std::function<bool(const std::vector<Rat>&)>& filter) {
  if (box.size() != poly.vars().size())
    throw std::invalid_argument("sign-scan box arity mismatch");
  if (resolution == 0) throw std::invalid_argument("resolution must be >= 1");

  SignReport rep;
  const std::size_t dims = box.size();
  std::vector<unsigned> idx(dims, 0);
  std::vector<Rat> point(dims);
  while (true) {
    for (std::size_t d = 0; d < dims; ++d) {
      Rat t(idx[d], resolution);
      t.canonicalize();
      point[d] = box[d].first + (box[d].second - box[d].first) * t;
    }
    if (!filter || filter(point)) {
      ++rep.points_scanned;
      const Rat v = poly.eval(point);
      if (v > 0) {
        ++rep.positive;
        rep.all_nonpos = false;
        if (rep.positive_witness.empty()) rep.positive_witness = point;
      } else if (v < 0) {
        ++rep.negative;
        rep.all_nonneg = false;
        if (rep.negative_witness.empty()) rep.negative_witness = point;
      } else {
        ++rep.zero;
        if (rep.zero_witness.empty()) rep.zero_witness = point;
      }
    }
    // odometer increment
    std::size_t d = 0;
    while (d < dims && ++idx[d] > resolution) idx[d++] = 0;
    if (d == dims) break;
  }
  rep.mixed = !rep.all_nonneg && !rep.all_nonpos;
  return rep;
}

}  // namespace pg
