#pragma once

#include <initializer_list>

#include "pyracat/catcore/matcat.hpp"
#include "pyracat/pyramid/complex.hpp"

namespace testing {

using namespace pyracat;

inline Matrix rows(std::initializer_list<std::initializer_list<long>> rs) {
  const std::size_t r = rs.size();
  const std::size_t c = r ? rs.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rs) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

/// Width-2 square W -> X, Y -> Z on rank-1 cells. Anticommutes unless
/// `commute` is set.
inline Pyramid<MatCat> square(long top = 1, long left = 1, long right = 1, bool commute = false) {
  Pyramid<MatCat> p;
  p.width = 2;
  for (auto a : {IndexVector{}, IndexVector{1}, IndexVector{0, 1}, IndexVector{1, 1}}) p.cells.emplace(a, 1);
  p.diffs.emplace(std::pair{IndexVector{}, 1}, rows({{top}}));
  p.diffs.emplace(std::pair{IndexVector{}, 2}, rows({{left}}));
  p.diffs.emplace(std::pair{IndexVector{1}, 2}, rows({{right}}));
  // d_{e2,1} d_{0,2} = -d_{e1,2} d_{0,1}
  const long bottom = commute ? top * right / left : -top * right / left;
  p.diffs.emplace(std::pair{IndexVector{0, 1}, 1}, rows({{bottom}}));
  return p;
}

/// 0 -> X = X -> 0 in degrees -1, 0.
inline Complex<MatCat> cone(std::size_t x) {
  Complex<MatCat> c;
  c.objects = {{-1, x}, {0, x}};
  c.diffs = {{-1, Matrix::identity(x)}};
  return c;
}

}  // namespace testing
