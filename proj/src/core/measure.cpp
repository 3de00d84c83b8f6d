#include "core/measure.hpp"

#include <stdexcept>

#include "core/rng.hpp"

namespace pg {

namespace {

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

void take_max(Rat& acc, const Rat& candidate) {
  if (candidate > acc) acc = candidate;
}

}  // namespace

CylinderMeasure CylinderMeasure::iid(const Rat& w_w, const Rat& w_l, const Rat& w_d,
                                     std::size_t max_len, std::string id) {
  if (w_w < 0 || w_l < 0 || w_d < 0 || w_w + w_l + w_d != 1)
    throw std::domain_error("iid weights must be nonnegative and sum to 1");
  if (max_len < 1) throw std::domain_error("max_len must be >= 1");
  const Rat weight[3] = {w_w, w_l, w_d};

  CylinderMeasure m;
  m.translation_invariant_ = true;
  m.reflection_invariant_ = true;
  m.id_ = std::move(id);
  m.tables_.resize(max_len);
  m.tables_[0] = {w_w, w_l, w_d};
  for (std::size_t len = 2; len <= max_len; ++len) {
    const auto& prev = m.tables_[len - 2];
    auto& cur = m.tables_[len - 1];
    cur.resize(prev.size() * 3);
    for (std::size_t i = 0; i < prev.size(); ++i)
      for (int a = 0; a < 3; ++a) cur[i * 3 + a] = prev[i] * weight[a];
  }
  return m;
}

CylinderMeasure CylinderMeasure::reversible_chain(
    const std::array<std::array<Rat, 3>, 3>& s, std::size_t max_len, std::string id) {
  if (max_len < 1) throw std::domain_error("max_len must be >= 1");
  Rat total(0);
  std::array<Rat, 3> rowsum;
  for (int i = 0; i < 3; ++i) {
    rowsum[i] = 0;
    for (int j = 0; j < 3; ++j) {
      if (s[i][j] < 0) throw std::domain_error("chain weights must be nonnegative");
      if (s[i][j] != s[j][i]) throw std::domain_error("chain weight matrix must be symmetric");
      rowsum[i] += s[i][j];
    }
    if (rowsum[i] == 0) throw std::domain_error("chain weight matrix has a zero row sum");
    total += rowsum[i];
  }

  // mu(a1..ak) = pi(a1) prod T(ai, ai+1) with pi(i) = rowsum(i)/total and
  // T(i,j) = s[i][j]/rowsum(i); detailed balance makes this reflection-invariant.
  CylinderMeasure m;
  m.translation_invariant_ = true;
  m.reflection_invariant_ = true;
  m.id_ = std::move(id);
  m.tables_.resize(max_len);
  m.tables_[0].resize(3);
  for (int i = 0; i < 3; ++i) m.tables_[0][i] = rowsum[i] / total;
  for (std::size_t len = 2; len <= max_len; ++len) {
    const auto& prev = m.tables_[len - 2];
    auto& cur = m.tables_[len - 1];
    cur.resize(prev.size() * 3);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const int last = static_cast<int>(i % 3);
      for (int a = 0; a < 3; ++a)
        cur[i * 3 + a] = prev[i] * s[last][a] / rowsum[last];
    }
  }
  return m;
}

CylinderMeasure CylinderMeasure::from_tables(std::vector<std::vector<Rat>> tables,
                                             bool translation_invariant,
                                             bool reflection_invariant, std::string id) {
  if (tables.empty()) throw std::domain_error("empty measure tables");
  std::size_t expect = 3;
  for (const auto& t : tables) {
    if (t.size() != expect) throw std::domain_error("measure table has wrong cardinality");
    expect *= 3;
  }
  CylinderMeasure m;
  m.tables_ = std::move(tables);
  m.translation_invariant_ = translation_invariant;
  m.reflection_invariant_ = reflection_invariant;
  m.id_ = std::move(id);
  return m;
}

const Rat& CylinderMeasure::prob(const Word& w) const {
  if (!is_valid_word(w) || w.size() > tables_.size())
    throw std::out_of_range("word '" + w + "' not covered by measure of depth " +
                            std::to_string(tables_.size()));
  return tables_[w.size() - 1][word_index(w)];
}

void CylinderMeasure::set_prob(const Word& w, const Rat& value) {
  if (!is_valid_word(w) || w.size() > tables_.size())
    throw std::out_of_range("word '" + w + "' not covered");
  tables_[w.size() - 1][word_index(w)] = value;
}

ConsistencyReport CylinderMeasure::check() const {
  ConsistencyReport rep;
  rep.range_violation = rep.normalization_residual = 0;
  rep.left_residual = rep.right_residual = rep.reflection_residual = 0;

  for (std::size_t len = 1; len <= tables_.size(); ++len) {
    const auto& table = tables_[len - 1];
    Rat sum(0);
    for (const Rat& v : table) {
      if (v < 0) take_max(rep.range_violation, Rat(-v));
      if (v > 1) take_max(rep.range_violation, Rat(v - 1));
      sum += v;
    }
    take_max(rep.normalization_residual, abs_rat(sum - 1));

    if (len < tables_.size()) {
      const auto& next = tables_[len];
      const std::size_t stride = table.size();
      for (std::size_t i = 0; i < table.size(); ++i) {
        Rat left(0), right(0);
        for (std::size_t a = 0; a < 3; ++a) {
          left += next[a * stride + i];  // prepend symbol a
          right += next[i * 3 + a];      // append symbol a
        }
        take_max(rep.left_residual, abs_rat(table[i] - left));
        take_max(rep.right_residual, abs_rat(table[i] - right));
      }
    }
    if (reflection_invariant_) {
      for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t j = word_index(reflect(word_from_index(i, len)));
        take_max(rep.reflection_residual, abs_rat(table[i] - table[j]));
      }
    }
  }
  return rep;
}

CylinderMeasure CylinderMeasure::reflected() const {
  CylinderMeasure m;
  m.translation_invariant_ = translation_invariant_;
  m.reflection_invariant_ = reflection_invariant_;
  m.id_ = id_ + "-reflected";
  m.tables_.resize(tables_.size());
  for (std::size_t len = 1; len <= tables_.size(); ++len) {
    const auto& src = tables_[len - 1];
    auto& dst = m.tables_[len - 1];
    dst.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      dst[word_index(reflect(word_from_index(i, len)))] = src[i];
  }
  return m;
}

std::vector<CylinderMeasure> make_measure_suite(std::size_t count, std::size_t max_len,
                                                std::uint64_t seed) {
  std::vector<CylinderMeasure> suite;
  suite.reserve(count);
  if (count == 0) return suite;
  suite.push_back(CylinderMeasure::iid(Rat(1, 3), Rat(1, 3), Rat(1, 3), max_len,
                                       "iid-uniform"));
  std::uint64_t draw = 0;
  auto next_weight = [&]() {
    // strictly positive weights keep every cylinder word supported
    return Rat(1 + counter_hash({seed, 0}, LabelKind::pca_cell, draw++, 0) % 997, 1);
  };
  for (std::size_t i = 1; i < count; ++i) {
    if (i % 2 == 1) {
      Rat a = next_weight(), b = next_weight(), c = next_weight();
      Rat total = a + b + c;
      suite.push_back(CylinderMeasure::iid(a / total, b / total, c / total, max_len,
                                           "iid-" + std::to_string(i)));
    } else {
      std::array<std::array<Rat, 3>, 3> s;
      for (int row = 0; row < 3; ++row)
        for (int col = row; col < 3; ++col) s[row][col] = s[col][row] = next_weight();
      suite.push_back(CylinderMeasure::reversible_chain(s, max_len,
                                                        "chain-" + std::to_string(i)));
    }
  }
  return suite;
}

}  // namespace pg
