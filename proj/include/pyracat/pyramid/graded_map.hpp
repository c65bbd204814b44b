#pragma once

#include <memory>
#include <stdexcept>

#include "pyracat/pyramid/pyramid.hpp"

namespace pyracat {

/// Sparse block matrix keyed by (row index vector, column index vector).
/// Entry (a, b) is a morphism from the column cell b to the row cell a.
using BlockEntries = std::map<std::pair<IndexVector, IndexVector>, Matrix>;

inline void drop_zero_blocks(BlockEntries& e) {
  std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
}

inline void accumulate(BlockEntries& into, const IndexVector& row, const IndexVector& col, const Matrix& m) {
  auto [it, inserted] = into.try_emplace({row, col}, m);
  if (!inserted) it->second += m;
}

/// Block product lhs * rhs; zero blocks dropped.
inline BlockEntries multiply(const BlockEntries& lhs, const BlockEntries& rhs) {
  std::map<IndexVector, std::vector<std::pair<IndexVector, const Matrix*>>> rhs_rows;
  for (const auto& [key, m] : rhs) rhs_rows[key.first].emplace_back(key.second, &m);
  BlockEntries out;
  for (const auto& [key, m] : lhs) {
    auto it = rhs_rows.find(key.second);
    if (it == rhs_rows.end()) continue;
    for (const auto& [col, r] : it->second) accumulate(out, key.first, col, m * *r);
  }
  drop_zero_blocks(out);
  return out;
}

inline BlockEntries add(BlockEntries lhs, const BlockEntries& rhs) {
  for (const auto& [key, m] : rhs) accumulate(lhs, key.first, key.second, m);
  drop_zero_blocks(lhs);
  return lhs;
}

inline BlockEntries negate(BlockEntries e) {
  for (auto& [key, m] : e) m = -m;
  return e;
}

/// All differentials of p as one block matrix (the d^(k) for every k).
template <AdditiveCategory C>
BlockEntries differential_entries(const Pyramid<C>& p) {
  BlockEntries out;
  for (const auto& [key, m] : p.diffs) out.emplace(std::pair{key.first + IndexVector::epsilon(key.second), key.first}, m);
  return out;
}

/// Graded map between pyramids: degree 0 (morphism) or -1 (homotopy).
/// Entry (a, b) maps source cell b to target cell a with ht(a) = ht(b) + degree.
template <AdditiveCategory C>
struct GradedMap {
  std::shared_ptr<const Pyramid<C>> source;
  std::shared_ptr<const Pyramid<C>> target;
  int degree = 0;
  BlockEntries entries;

  bool operator==(const GradedMap& o) const {
    return degree == o.degree && *source == *o.source && *target == *o.target && entries == o.entries;
  }
};

template <AdditiveCategory C>
GradedMap<C> make_map(const Pyramid<C>& source, const Pyramid<C>& target, BlockEntries entries, int degree = 0) {
  drop_zero_blocks(entries);
  return {std::make_shared<const Pyramid<C>>(source), std::make_shared<const Pyramid<C>>(target), degree,
          std::move(entries)};
}

template <AdditiveCategory C>
GradedMap<C> make_map(std::shared_ptr<const Pyramid<C>> source, std::shared_ptr<const Pyramid<C>> target,
                      BlockEntries entries, int degree = 0) {
  drop_zero_blocks(entries);
  return {std::move(source), std::move(target), degree, std::move(entries)};
}

/// Block matrix d^(k) of p: rows are height-(k+1) cells, columns height-k
/// cells, both lexicographic.
template <AdditiveCategory C>
struct HeightBlock {
  std::vector<IndexVector> rows;
  std::vector<IndexVector> cols;
  BlockEntries entries;
};

template <AdditiveCategory C>
HeightBlock<C> d_matrix(const Pyramid<C>& p, std::int64_t k) {
  HeightBlock<C> out{p.cells_at_height(k + 1), p.cells_at_height(k), {}};
  for (const auto& [key, m] : p.diffs)
    if (key.first.height() == k) out.entries.emplace(std::pair{key.first + IndexVector::epsilon(key.second), key.first}, m);
  return out;
}

template <AdditiveCategory C>
GradedMap<C> identity_map(const C& cat, const Pyramid<C>& p) {
  BlockEntries e;
  for (const auto& [a, x] : p.cells) e.emplace(std::pair{a, a}, cat.identity(x));
  auto ptr = std::make_shared<const Pyramid<C>>(p);
  return {ptr, ptr, 0, std::move(e)};
}

template <AdditiveCategory C>
GradedMap<C> zero_map(const Pyramid<C>& source, const Pyramid<C>& target, int degree = 0) {
  return make_map(source, target, {}, degree);
}

/// beta o alpha for degree-0 maps; throws std::invalid_argument on endpoint mismatch.
template <AdditiveCategory C>
GradedMap<C> compose(const GradedMap<C>& beta, const GradedMap<C>& alpha) {
  if (!(*alpha.target == *beta.source)) throw std::invalid_argument("compose: endpoint mismatch");
  return {alpha.source, beta.target, alpha.degree + beta.degree, multiply(beta.entries, alpha.entries)};
}

template <AdditiveCategory C>
GradedMap<C> add_morphisms(const GradedMap<C>& a, const GradedMap<C>& b) {
  if (!(*a.source == *b.source) || !(*a.target == *b.target) || a.degree != b.degree)
    throw std::invalid_argument("add_morphisms: endpoint mismatch");
  return {a.source, a.target, a.degree, add(a.entries, b.entries)};
}

template <AdditiveCategory C>
GradedMap<C> negate(const GradedMap<C>& a) {
  return {a.source, a.target, a.degree, negate(a.entries)};
}

template <AdditiveCategory C>
GradedMap<C> scale(const Scalar& s, const GradedMap<C>& a) {
  BlockEntries e = a.entries;
  for (auto& [k, m] : e) m = m.scaled(s);
  drop_zero_blocks(e);
  return {a.source, a.target, a.degree, std::move(e)};
}

/// True iff every block has the right endpoints and degree, and (for
/// degree 0) alpha^(k+1) d^(k) = d'^(k) alpha^(k) for all k.
template <AdditiveCategory C>
bool is_morphism(const C& cat, const GradedMap<C>& alpha) {
  for (const auto& [key, m] : alpha.entries) {
    const auto* x = alpha.source->cell(key.second);
    const auto* y = alpha.target->cell(key.first);
    if (!x || !y || key.first.height() != key.second.height() + alpha.degree) return false;
    if (m.rows() != cat.dim(*y) || m.cols() != cat.dim(*x)) return false;
  }
  if (alpha.degree != 0) return false;
  return multiply(alpha.entries, differential_entries(*alpha.source)) ==
         multiply(differential_entries(*alpha.target), alpha.entries);
}

/// chi d + d' chi for a degree -1 map chi.
template <AdditiveCategory C>
BlockEntries homotopy_boundary(const GradedMap<C>& chi) {
  return add(multiply(chi.entries, differential_entries(*chi.source)),
             multiply(differential_entries(*chi.target), chi.entries));
}

}  // namespace pyracat
