#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pyracat/catcore/oracle.hpp"
#include "pyracat/index.hpp"

namespace pyracat {

/// A pyramid over an additive category: a finite map from index vectors to
/// nonzero objects with differentials d_{a,i} : X_a -> X_{a + e_i}.
///
/// Canonical form (see `normalize`): no zero objects, no zero differentials,
/// differentials only between stored cells. Structural equality is then
/// equality of pyramids.
template <AdditiveCategory C>
struct Pyramid {
  using Object = typename C::Object;
  using DiffKey = std::pair<IndexVector, int>;

  std::size_t width = 0;
  std::map<IndexVector, Object> cells;
  std::map<DiffKey, Matrix> diffs;

  bool operator==(const Pyramid&) const = default;

  const Object* cell(const IndexVector& a) const {
    auto it = cells.find(a);
    return it == cells.end() ? nullptr : &it->second;
  }
  const Matrix* diff(const IndexVector& a, int i) const {
    auto it = diffs.find({a, i});
    return it == diffs.end() ? nullptr : &it->second;
  }
  /// Cells of height k in lexicographic order.
  std::vector<IndexVector> cells_at_height(std::int64_t k) const {
    std::vector<IndexVector> out;
    for (const auto& [a, x] : cells)
      if (a.height() == k) out.push_back(a);
    return out;
  }
  std::set<std::int64_t> heights() const {
    std::set<std::int64_t> hs;
    for (const auto& [a, x] : cells) hs.insert(a.height());
    return hs;
  }
};

/// Drops zero objects, zero differentials, and differentials whose
/// endpoints are not stored cells.
template <AdditiveCategory C>
Pyramid<C> normalize(const C& cat, Pyramid<C> p) {
  std::erase_if(p.cells, [&](const auto& kv) { return cat.is_zero_object(kv.second); });
  std::erase_if(p.diffs, [&](const auto& kv) {
    const auto& [key, m] = kv;
    return m.is_zero() || !p.cell(key.first) || key.second < 1 ||
           !p.cell(key.first + IndexVector::epsilon(key.second));
  });
  return p;
}

/// The object X placed at index 0 in a width-0 pyramid.
template <AdditiveCategory C>
Pyramid<C> embed_object(const C& cat, const typename C::Object& x) {
  Pyramid<C> p;
  if (!cat.is_zero_object(x)) p.cells.emplace(IndexVector{}, x);
  return p;
}

template <MonoidalCategory C>
Pyramid<C> unit_pyramid(const C& cat) {
  return embed_object(cat, cat.unit());
}

struct AxiomViolation {
  std::string axiom;  // "I", "III", "IV", or "shape"
  IndexVector at;
  int i = 0;
  int j = 0;
  std::string detail;
};

/// Zero map when the differential is absent.
template <AdditiveCategory C>
Matrix diff_or_zero(const C& cat, const Pyramid<C>& p, const IndexVector& a, int i) {
  if (const Matrix* m = p.diff(a, i)) return *m;
  const IndexVector b = a + IndexVector::epsilon(i);
  const auto* x = p.cell(a);
  const auto* y = p.cell(b);
  return Matrix::zero(y ? cat.dim(*y) : 0, x ? cat.dim(*x) : 0);
}

/// Empty iff axioms (I), (III), (IV) hold and every stored differential has
/// the shape of a morphism between its endpoint cells. Axiom (II) holds by
/// finiteness of the cell map.
template <AdditiveCategory C>
std::vector<AxiomViolation> check_axioms(const C& cat, const Pyramid<C>& p) {
  std::vector<AxiomViolation> out;
  const int n = static_cast<int>(p.width);
  for (const auto& [a, x] : p.cells)
    if (a.support_end() > n) out.push_back({"I", a, 0, 0, "nonzero coordinate beyond width"});

  for (const auto& [key, m] : p.diffs) {
    const auto& [a, i] = key;
    const auto* x = p.cell(a);
    if (i < 1 || i > n) {
      out.push_back({"shape", a, i, 0, "direction outside 1..width"});
      continue;
    }
    const auto* y = p.cell(a + IndexVector::epsilon(i));
    if (!x || !y) {
      out.push_back({"shape", a, i, 0, "differential between missing cells"});
      continue;
    }
    if (m.rows() != cat.dim(*y) || m.cols() != cat.dim(*x))
      out.push_back({"shape", a, i, 0, "differential has wrong matrix shape"});
  }
  if (!out.empty()) return out;

  for (const auto& [a, x] : p.cells) {
    for (int i = 1; i <= n; ++i) {
      const IndexVector ai = a + IndexVector::epsilon(i);
      if (!p.cell(ai)) continue;
      const IndexVector aii = ai + IndexVector::epsilon(i);
      if (p.cell(aii) && !cat.compose(diff_or_zero(cat, p, ai, i), diff_or_zero(cat, p, a, i)).is_zero())
        out.push_back({"III", a, i, i, "d o d != 0"});
      for (int j = i + 1; j <= n; ++j) {
        const IndexVector aj = a + IndexVector::epsilon(j);
        if (!p.cell(ai + IndexVector::epsilon(j))) continue;
        Matrix lhs = cat.compose(diff_or_zero(cat, p, ai, j), diff_or_zero(cat, p, a, i));
        Matrix rhs = cat.compose(diff_or_zero(cat, p, aj, i), diff_or_zero(cat, p, a, j));
        if (!cat.add(lhs, rhs).is_zero()) out.push_back({"IV", a, i, j, "square does not anticommute"});
      }
    }
  }
  return out;
}

}  // namespace pyracat
