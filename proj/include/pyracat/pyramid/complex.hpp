#pragma once

#include <stdexcept>

#include "pyracat/pyramid/graded_map.hpp"

namespace pyracat {

/// Bounded complex: objects M_k and differentials f_k : M_k -> M_{k+1}.
/// Canonical form has no zero objects and no zero differentials.
template <AdditiveCategory C>
struct Complex {
  using Object = typename C::Object;
  std::map<std::int64_t, Object> objects;
  std::map<std::int64_t, Matrix> diffs;

  bool operator==(const Complex&) const = default;
};

/// Degree-wise components of a chain map between complexes.
using ComplexMorphism = std::map<std::int64_t, Matrix>;

template <AdditiveCategory C>
Complex<C> normalize(const C& cat, Complex<C> c) {
  std::erase_if(c.objects, [&](const auto& kv) { return cat.is_zero_object(kv.second); });
  std::erase_if(c.diffs, [&](const auto& kv) {
    return kv.second.is_zero() || !c.objects.count(kv.first) || !c.objects.count(kv.first + 1);
  });
  return c;
}

/// Zero map when absent.
template <AdditiveCategory C>
Matrix complex_diff(const C& cat, const Complex<C>& c, std::int64_t k) {
  if (auto it = c.diffs.find(k); it != c.diffs.end()) return it->second;
  auto dim_at = [&](std::int64_t j) {
    auto it = c.objects.find(j);
    return it == c.objects.end() ? std::size_t{0} : cat.dim(it->second);
  };
  return Matrix::zero(dim_at(k + 1), dim_at(k));
}

template <AdditiveCategory C>
bool is_complex(const C& cat, const Complex<C>& c) {
  for (const auto& [k, f] : c.diffs)
    if (!cat.compose(complex_diff(cat, c, k + 1), f).is_zero()) return false;
  return true;
}

template <AdditiveCategory C>
bool is_chain_map(const C& cat, const Complex<C>& src, const Complex<C>& tgt, const ComplexMorphism& f) {
  auto comp = [&](std::int64_t k) {
    if (auto it = f.find(k); it != f.end()) return it->second;
    auto dim_of = [&](const Complex<C>& c) {
      auto it = c.objects.find(k);
      return it == c.objects.end() ? std::size_t{0} : cat.dim(it->second);
    };
    return Matrix::zero(dim_of(tgt), dim_of(src));
  };
  std::set<std::int64_t> ks;
  for (const auto& [k, x] : src.objects) ks.insert(k);
  for (const auto& [k, x] : tgt.objects) ks.insert(k - 1);
  for (auto k : ks)
    if (!(cat.compose(comp(k + 1), complex_diff(cat, src, k)) == cat.compose(complex_diff(cat, tgt, k), comp(k))))
      return false;
  return true;
}

/// Width-1 pyramid with M_k at k e_1 and d_{k e_1, 1} = f_k.
/// Every complex here is finitely supported, so bounded above.
template <AdditiveCategory C>
Pyramid<C> include_complex(const C& cat, const Complex<C>& c) {
  Pyramid<C> p;
  p.width = 1;
  for (const auto& [k, x] : c.objects) p.cells.emplace(IndexVector{k}, x);
  for (const auto& [k, f] : c.diffs) p.diffs.emplace(std::pair{IndexVector{k}, 1}, f);
  return normalize(cat, std::move(p));
}

/// Totalization together with the direct-sum data used to build it.
template <AdditiveCategory C>
struct Totalization {
  Complex<C> complex;
  std::map<std::int64_t, std::vector<IndexVector>> summands;
  std::map<std::int64_t, DirectSum<typename C::Object>> sums;

  /// Position of cell a inside the summand list of its height.
  std::size_t slot(const IndexVector& a) const {
    const auto& s = summands.at(a.height());
    return static_cast<std::size_t>(std::find(s.begin(), s.end(), a) - s.begin());
  }
  const Matrix& injection(const IndexVector& a) const { return sums.at(a.height()).injections[slot(a)]; }
  const Matrix& projection(const IndexVector& a) const { return sums.at(a.height()).projections[slot(a)]; }
};

/// M_k = direct sum of the height-k cells in lexicographic order,
/// f_k = sum of i_a d_{a,b} p_b.
template <AdditiveCategory C>
Totalization<C> totalization(const C& cat, const Pyramid<C>& p) {
  Totalization<C> t;
  for (auto k : p.heights()) {
    auto cells = p.cells_at_height(k);
    std::vector<typename C::Object> objs;
    for (const auto& a : cells) objs.push_back(*p.cell(a));
    t.sums.emplace(k, cat.direct_sum(std::span<const typename C::Object>(objs)));
    t.complex.objects.emplace(k, t.sums.at(k).object);
    t.summands.emplace(k, std::move(cells));
  }
  for (const auto& [key, d] : p.diffs) {
    const IndexVector& b = key.first;
    const IndexVector a = b + IndexVector::epsilon(key.second);
    const std::int64_t k = b.height();
    Matrix term = cat.compose(t.injection(a), cat.compose(d, t.projection(b)));
    auto [it, inserted] = t.complex.diffs.try_emplace(k, term);
    if (!inserted) it->second = cat.add(it->second, term);
  }
  t.complex = normalize(cat, std::move(t.complex));
  return t;
}

template <AdditiveCategory C>
Complex<C> totalize(const C& cat, const Pyramid<C>& p) {
  return totalization(cat, p).complex;
}

template <AdditiveCategory C>
ComplexMorphism totalize_morphism(const C& cat, const GradedMap<C>& alpha) {
  if (alpha.degree != 0) throw std::invalid_argument("totalize_morphism: degree must be 0");
  const auto src = totalization(cat, *alpha.source);
  const auto tgt = totalization(cat, *alpha.target);
  ComplexMorphism out;
  for (const auto& [key, m] : alpha.entries) {
    const auto k = key.second.height();
    Matrix term = cat.compose(tgt.injection(key.first), cat.compose(m, src.projection(key.second)));
    auto [it, inserted] = out.try_emplace(k, term);
    if (!inserted) it->second = cat.add(it->second, term);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Natural isomorphism P -> include(totalize(P)) built from the biproduct
/// injections, and its inverse built from the projections.
template <AdditiveCategory C>
std::pair<GradedMap<C>, GradedMap<C>> canonical_unit(const C& cat, const Pyramid<C>& p) {
  const auto t = totalization(cat, p);
  const Pyramid<C> q = include_complex(cat, t.complex);
  BlockEntries u, v;
  for (const auto& [a, x] : p.cells) {
    const IndexVector k{a.height()};
    u.emplace(std::pair{k, a}, t.injection(a));
    v.emplace(std::pair{a, k}, t.projection(a));
  }
  return {make_map(p, q, std::move(u)), make_map(q, p, std::move(v))};
}

/// Direct sum of pyramids with its injections and projections.
template <AdditiveCategory C>
struct PyramidSum {
  Pyramid<C> sum;
  std::vector<GradedMap<C>> injections;
  std::vector<GradedMap<C>> projections;
};

/// Cellwise direct sums, block-diagonal differentials. A cell present in
/// only one summand is carried over unchanged, so P (+) 0 = P exactly.
template <AdditiveCategory C>
PyramidSum<C> direct_sum(const C& cat, const std::vector<Pyramid<C>>& parts) {
  using Object = typename C::Object;
  std::set<IndexVector> indices;
  Pyramid<C> sum;
  for (const auto& p : parts) {
    sum.width = std::max(sum.width, p.width);
    for (const auto& [a, x] : p.cells) indices.insert(a);
  }
  // Per index: which parts contribute, and the oracle sum data.
  std::map<IndexVector, std::vector<std::size_t>> owners;
  std::map<IndexVector, DirectSum<Object>> sums;
  for (const auto& a : indices) {
    std::vector<Object> objs;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (const auto* x = parts[i].cell(a)) {
        owners[a].push_back(i);
        objs.push_back(*x);
      }
    if (objs.size() == 1) {
      sums.emplace(a, DirectSum<Object>{objs[0], {cat.identity(objs[0])}, {cat.identity(objs[0])}});
    } else {
      sums.emplace(a, cat.direct_sum(std::span<const Object>(objs)));
    }
    sum.cells.emplace(a, sums.at(a).object);
  }
  auto slot_of = [&](const IndexVector& a, std::size_t part) {
    const auto& o = owners.at(a);
    return static_cast<std::size_t>(std::find(o.begin(), o.end(), part) - o.begin());
  };
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [key, d] : parts[i].diffs) {
      const IndexVector& b = key.first;
      const IndexVector a = b + IndexVector::epsilon(key.second);
      Matrix term = cat.compose(sums.at(a).injections[slot_of(a, i)], cat.compose(d, sums.at(b).projections[slot_of(b, i)]));
      auto [it, inserted] = sum.diffs.try_emplace(key, term);
      if (!inserted) it->second = cat.add(it->second, term);
    }
  PyramidSum<C> out;
  out.sum = normalize(cat, std::move(sum));
  auto sum_ptr = std::make_shared<const Pyramid<C>>(out.sum);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    BlockEntries inj, proj;
    for (const auto& [a, x] : parts[i].cells) {
      inj.emplace(std::pair{a, a}, sums.at(a).injections[slot_of(a, i)]);
      proj.emplace(std::pair{a, a}, sums.at(a).projections[slot_of(a, i)]);
    }
    auto part_ptr = std::make_shared<const Pyramid<C>>(parts[i]);
    out.injections.push_back(make_map(part_ptr, sum_ptr, std::move(inj)));
    out.projections.push_back(make_map(sum_ptr, part_ptr, std::move(proj)));
  }
  return out;
}

}  // namespace pyracat
