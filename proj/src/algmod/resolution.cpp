#include "pyracat/algmod/resolution.hpp"

namespace pyracat {

SubBimodule kernel_bimodule(const Bimodule& source, const Matrix& map) {
  const auto ker = nullspace(map);
  SubBimodule out;
  out.module.dim = ker.size();
  if (ker.empty()) {
    out.module.left.assign(source.left.size(), Matrix(0, 0));
    out.module.right.assign(source.right.size(), Matrix(0, 0));
    out.inclusion = Matrix(source.dim, 0);
    return out;
  }
  const auto q = QuotientSpace::subspace(Matrix::from_columns(source.dim, ker));
  for (const auto& l : source.left) out.module.left.push_back(q.induced(l));
  for (const auto& r : source.right) out.module.right.push_back(q.induced(r));
  out.inclusion = q.section();
  return out;
}

ProjectiveCover projective_cover(const Algebra& a, const Bimodule& m) {
  const std::size_t n = a.num_idempotents();
  const auto top = bimodule_top(a, m);
  std::vector<Matrix> left_bases, right_bases;
  for (std::size_t i = 0; i < n; ++i) {
    left_bases.push_back(QuotientSpace::subspace(a.right_matrix(a.idempotents[i])).section());
    right_bases.push_back(QuotientSpace::subspace(a.left_matrix(a.idempotents[i])).section());
  }
  ProjectiveCover out;
  std::vector<Bimodule> parts;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& g : top.generators[i][j]) {
        parts.push_back(bimodule_p(a, i, j));
        out.summands.emplace_back(i, j);
        // Basis of P_ij is u_s (x) w_t in row-major (s, t) order.
        for (std::size_t s = 0; s < left_bases[i].cols(); ++s) {
          const Matrix lu = m.left_action(left_bases[i].col(s));
          for (std::size_t t = 0; t < right_bases[j].cols(); ++t)
            images.push_back(lu * (m.right_action(right_bases[j].col(t)) * g));
        }
      }
  std::size_t dim = 0;
  for (const auto& p : parts) dim += p.dim;
  out.cover.dim = dim;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    std::vector<Matrix> ls, rs;
    for (const auto& p : parts) {
      ls.push_back(p.left[k]);
      rs.push_back(p.right[k]);
    }
    out.cover.left.push_back(block_diagonal(ls));
    out.cover.right.push_back(block_diagonal(rs));
  }
  out.surjection = Matrix::from_columns(m.dim, images);
  return out;
}

Resolution projective_resolution(const Algebra& a, const Bimodule& m, std::size_t length) {
  Resolution res;
  res.exact = true;
  Bimodule current = m;
  Matrix inclusion = Matrix::identity(m.dim);  // current -> previous term (or M)
  for (std::size_t k = 0; k <= length; ++k) {
    auto cover = projective_cover(a, current);
    const Matrix to_prev = inclusion * cover.surjection;
    if (rank(cover.surjection) != current.dim) res.exact = false;
    if (k == 0) {
      res.augmentation = to_prev;
    } else {
      res.differentials.push_back(to_prev);
    }
    auto ker = kernel_bimodule(cover.cover, cover.surjection);
    res.terms.push_back(cover.cover);
    res.summands.push_back(cover.summands);
    if (ker.module.dim == 0) {
      res.terminated = true;
      break;
    }
    current = std::move(ker.module);
    inclusion = std::move(ker.inclusion);
  }
  // Rank bookkeeping: dim Q_k = rank d_k + dim ker d_k, ker d_k = im d_{k+1}.
  std::vector<Matrix> maps{res.augmentation};
  maps.insert(maps.end(), res.differentials.begin(), res.differentials.end());
  if (rank(res.augmentation) != m.dim) res.exact = false;
  for (std::size_t k = 0; k < res.terms.size(); ++k) {
    const std::size_t r_out = rank(maps[k]);
    const std::size_t r_in = k + 1 < maps.size() ? rank(maps[k + 1]) : 0;
    const bool last = k + 1 == res.terms.size();
    if (!last || res.terminated) {
      if (r_out + r_in != res.terms[k].dim) res.exact = false;
    }
    if (k + 1 < maps.size() && !(maps[k] * maps[k + 1]).is_zero()) res.exact = false;
  }
  return res;
}

}  // namespace pyracat
