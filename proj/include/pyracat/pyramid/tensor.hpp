#pragma once

#include <stdexcept>

#include "pyracat/pyramid/graded_map.hpp"

namespace pyracat {

/// Splits a global index a of a width-n-first product into (pi_n a, sigma_n a).
inline std::pair<IndexVector, IndexVector> split_index(const IndexVector& a, std::size_t n) {
  const int k = static_cast<int>(n);
  return {a.truncate(k, TruncSide::low), a.truncate(k, TruncSide::high)};
}

inline IndexVector join_index(const IndexVector& low, const IndexVector& high, std::size_t n) {
  return low + high.shift(static_cast<int>(n));
}

/// P acting on Y: cell (b, c) -> X_b <> Y_c at b + shift_n(c). Direction
/// i <= n carries d_{b,i} <> id, direction n + j carries
/// (-1)^{ht b} id <> d_{c,j}.
template <ActionOracle Act>
Pyramid<typename Act::Acted> act(const Act& action, const Pyramid<typename Act::Acting>& p,
                                 const Pyramid<typename Act::Acted>& y) {
  const auto& a_cat = action.acting();
  const auto& c_cat = action.acted();
  const std::size_t n = p.width;
  Pyramid<typename Act::Acted> z;
  z.width = p.width + y.width;
  for (const auto& [b, x] : p.cells)
    for (const auto& [c, w] : y.cells) z.cells.emplace(join_index(b, c, n), action.act_objects(x, w));

  for (const auto& [key, d] : p.diffs) {
    const auto& [b, i] = key;
    const auto& xs = p.cells.at(b);
    const auto& xt = p.cells.at(b + IndexVector::epsilon(i));
    for (const auto& [c, w] : y.cells)
      z.diffs.emplace(std::pair{join_index(b, c, n), i}, action.act_morphisms(d, xs, xt, c_cat.identity(w), w, w));
  }
  for (const auto& [key, d] : y.diffs) {
    const auto& [c, j] = key;
    const auto& ws = y.cells.at(c);
    const auto& wt = y.cells.at(c + IndexVector::epsilon(j));
    for (const auto& [b, x] : p.cells) {
      Matrix m = action.act_morphisms(a_cat.identity(x), x, x, d, ws, wt);
      if (b.height() % 2 != 0) m = c_cat.negate(m);
      z.diffs.emplace(std::pair{join_index(b, c, n), static_cast<int>(n) + j}, std::move(m));
    }
  }
  return normalize(c_cat, std::move(z));
}

template <MonoidalCategory C>
Pyramid<C> tensor(const C& cat, const Pyramid<C>& p, const Pyramid<C>& q) {
  return act(SelfAction<C>(cat), p, q);
}

/// alpha <> beta: entry ((b', c'), (b, c)) = alpha_{b'b} <> beta_{c'c}.
/// Both maps have degree 0, so ht(b') = ht(b) is automatic.
template <ActionOracle Act>
GradedMap<typename Act::Acted> act_morphisms(const Act& action, const GradedMap<typename Act::Acting>& alpha,
                                             const GradedMap<typename Act::Acted>& beta) {
  if (alpha.degree != 0 || beta.degree != 0) throw std::invalid_argument("act_morphisms: degree must be 0");
  const auto& ps = *alpha.source;
  const auto& pt = *alpha.target;
  const auto& ys = *beta.source;
  const auto& yt = *beta.target;
  BlockEntries e;
  for (const auto& [ka, ma] : alpha.entries)
    for (const auto& [kb, mb] : beta.entries) {
      const IndexVector row = join_index(ka.first, kb.first, pt.width);
      const IndexVector col = join_index(ka.second, kb.second, ps.width);
      accumulate(e, row, col,
                 action.act_morphisms(ma, ps.cells.at(ka.second), pt.cells.at(ka.first), mb, ys.cells.at(kb.second),
                                      yt.cells.at(kb.first)));
    }
  return make_map(act(action, ps, ys), act(action, pt, yt), std::move(e));
}

template <MonoidalCategory C>
GradedMap<C> tensor_morphisms(const C& cat, const GradedMap<C>& alpha, const GradedMap<C>& beta) {
  return act_morphisms(SelfAction<C>(cat), alpha, beta);
}

/// P <> beta.
template <ActionOracle Act>
GradedMap<typename Act::Acted> act_left_identity(const Act& action, const Pyramid<typename Act::Acting>& p,
                                                 const GradedMap<typename Act::Acted>& beta) {
  return act_morphisms(action, identity_map(action.acting(), p), beta);
}

/// alpha <> Y.
template <ActionOracle Act>
GradedMap<typename Act::Acted> act_right_identity(const Act& action, const GradedMap<typename Act::Acting>& alpha,
                                                  const Pyramid<typename Act::Acted>& y) {
  return act_morphisms(action, alpha, identity_map(action.acted(), y));
}

}  // namespace pyracat
