#pragma once

#include "pyracat/catcore/matcat.hpp"
#include "pyracat/pyramid/complex.hpp"
#include "pyracat/pyramid/tensor.hpp"

namespace pyracat {

/// Textbook total tensor complex over MatCat: Tot_k is the sum over p + q = k
/// (p increasing) of M_p (x) N_q, with differential f (x) 1 + (-1)^p 1 (x) g.
/// Built without any pyramid machinery.
inline Complex<MatCat> total_tensor_complex(const Complex<MatCat>& m, const Complex<MatCat>& n) {
  const MatCat cat;
  using Pieces = std::vector<std::pair<std::int64_t, std::int64_t>>;  // (p, q)
  std::map<std::int64_t, Pieces> pieces;
  for (const auto& [p, x] : m.objects)
    for (const auto& [q, y] : n.objects) pieces[p + q].emplace_back(p, q);

  Complex<MatCat> tot;
  std::map<std::int64_t, std::map<std::pair<std::int64_t, std::int64_t>, std::size_t>> offset;
  for (const auto& [k, ps] : pieces) {
    std::size_t o = 0;
    for (const auto& pq : ps) {
      offset[k][pq] = o;
      o += m.objects.at(pq.first) * n.objects.at(pq.second);
    }
    tot.objects[k] = o;
  }
  for (const auto& [k, ps] : pieces) {
    if (!tot.objects.count(k + 1)) continue;
    Matrix d(tot.objects.at(k + 1), tot.objects.at(k));
    for (const auto& [p, q] : ps) {
      const std::size_t col = offset[k][{p, q}];
      const std::size_t mp = m.objects.at(p);
      const std::size_t nq = n.objects.at(q);
      if (m.objects.count(p + 1))
        d.add_block(offset[k + 1][{p + 1, q}], col,
                    kronecker(complex_diff(cat, m, p), Matrix::identity(nq)));
      if (n.objects.count(q + 1)) {
        Matrix g = kronecker(Matrix::identity(mp), complex_diff(cat, n, q));
        if (p % 2 != 0) g = -g;
        d.add_block(offset[k + 1][{p, q + 1}], col, g);
      }
    }
    tot.diffs[k] = std::move(d);
  }
  return normalize(cat, std::move(tot));
}

/// Permutation matrices P_k : totalize(X (x) Y)_k -> Tot(totalize X, totalize Y)_k.
/// Cell (b, c), entry (i, j) goes to off_{p,q} + (off_b + i) dim N_q + (off_c + j).
inline ComplexMorphism total_tensor_iso(const Pyramid<MatCat>& x, const Pyramid<MatCat>& y) {
  const MatCat cat;
  const auto tx = totalization(cat, x);
  const auto ty = totalization(cat, y);
  const auto txy = totalization(cat, tensor(cat, x, y));

  // Offsets of cells inside their totalization summand, and of (p, q)
  // pieces inside Tot_k, recomputed independently of total_tensor_complex.
  auto cell_offsets = [&](const Pyramid<MatCat>& p) {
    std::map<IndexVector, std::size_t> off;
    for (auto k : p.heights()) {
      std::size_t o = 0;
      for (const auto& a : p.cells_at_height(k)) {
        off[a] = o;
        o += p.cells.at(a);
      }
    }
    return off;
  };
  const auto ox = cell_offsets(x);
  const auto oy = cell_offsets(y);
  std::map<std::int64_t, std::map<std::int64_t, std::size_t>> piece_off;  // k -> p -> offset
  for (const auto& px : tx.complex.objects)
    for (const auto& qy : ty.complex.objects) piece_off[px.first + qy.first][px.first] = 0;
  for (auto& [k, byp] : piece_off) {
    std::size_t o = 0;
    for (auto& [p, off] : byp) {
      off = o;
      o += tx.complex.objects.at(p) * ty.complex.objects.at(k - p);
    }
  }

  ComplexMorphism iso;
  for (const auto& [k, dim] : txy.complex.objects) iso[k] = Matrix(dim, dim);
  for (const auto& [k, cells] : txy.summands) {
    std::size_t cursor_k = 0;
    for (const auto& a : cells) {
      const auto [b, c] = split_index(a, x.width);
      const std::int64_t p = b.height();
      const std::size_t xb = x.cells.at(b);
      const std::size_t yc = y.cells.at(c);
      const std::size_t nq = ty.complex.objects.at(k - p);
      for (std::size_t i = 0; i < xb; ++i)
        for (std::size_t j = 0; j < yc; ++j)
          iso[k](piece_off[k][p] + (ox.at(b) + i) * nq + oy.at(c) + j, cursor_k + i * yc + j) = 1;
      cursor_k += xb * yc;
    }
  }
  return iso;
}

/// Chain-map and invertibility re-check of a claimed isomorphism of complexes.
inline bool is_chain_isomorphism(const Complex<MatCat>& s, const Complex<MatCat>& t, const ComplexMorphism& f) {
  const MatCat cat;
  if (!is_chain_map(cat, s, t, f)) return false;
  for (const auto& [k, x] : s.objects) {
    auto it = f.find(k);
    if (it == f.end() || !t.objects.count(k) || t.objects.at(k) != x || !inverse(it->second)) return false;
  }
  for (const auto& [k, y] : t.objects)
    if (!s.objects.count(k)) return false;
  return true;
}

}  // namespace pyracat
