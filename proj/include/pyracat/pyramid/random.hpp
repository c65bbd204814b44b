#pragma once

#include "pyracat/catcore/matcat.hpp"
#include "pyracat/pyramid/complex.hpp"
#include "pyracat/pyramid/tensor.hpp"
#include "pyracat/util/rng.hpp"

namespace pyracat {

struct RandomShape {
  std::size_t max_terms = 3;  // nonzero degrees per complex
  std::size_t max_rank = 3;
  std::int64_t min_degree = -2;
  std::int64_t max_degree = 1;
};

inline Matrix random_integer_matrix(std::size_t rows, std::size_t cols, Rng& rng, std::int64_t bound = 2) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.uniform(-bound, bound));
  return m;
}

/// Random complex over MatCat on consecutive degrees. Each f_k is K R with
/// K a basis of ker f_{k+1}, built from the top degree down, so d o d = 0
/// holds by construction.
inline Complex<MatCat> random_complex(Rng& rng, const RandomShape& shape = {}) {
  Complex<MatCat> c;
  const auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_terms)));
  const auto start = rng.uniform(shape.min_degree, shape.max_degree);
  for (std::size_t t = 0; t < terms; ++t)
    c.objects[start + static_cast<std::int64_t>(t)] =
        static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_rank)));
  for (auto k = start + static_cast<std::int64_t>(terms) - 2; k >= start; --k) {
    const std::size_t src = c.objects.at(k);
    const std::size_t tgt = c.objects.at(k + 1);
    std::vector<Vector> kernel;
    if (auto it = c.diffs.find(k + 1); it != c.diffs.end()) {
      kernel = nullspace(it->second);
    } else {
      for (std::size_t i = 0; i < tgt; ++i) {
        Vector e(tgt);
        e[i] = 1;
        kernel.push_back(std::move(e));
      }
    }
    if (kernel.empty()) continue;
    const Matrix k_mat = Matrix::from_columns(tgt, kernel);
    c.diffs[k] = k_mat * random_integer_matrix(kernel.size(), src, rng);
  }
  return normalize(MatCat{}, std::move(c));
}

inline Pyramid<MatCat> random_width1(Rng& rng, const RandomShape& shape = {}) {
  return include_complex(MatCat{}, random_complex(rng, shape));
}

/// Width 0, 1 or 2; width 2 is the tensor of two width-1 pyramids with at
/// most max_cells cells in total.
inline Pyramid<MatCat> random_pyramid(Rng& rng, std::size_t max_width = 2, std::size_t max_cells = 6,
                                      std::size_t max_rank = 3) {
  const MatCat cat;
  const auto w = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_width)));
  if (w == 0) return embed_object(cat, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_rank))));
  if (w == 1) return random_width1(rng, {std::min<std::size_t>(max_cells, 3), max_rank});
  const auto first = static_cast<std::size_t>(rng.uniform(1, 3));
  const std::size_t second = std::max<std::size_t>(1, std::min<std::size_t>(3, max_cells / first));
  return tensor(cat, random_width1(rng, {first, max_rank}), random_width1(rng, {second, max_rank}));
}

}  // namespace pyracat
