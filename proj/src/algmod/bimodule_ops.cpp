#include "pyracat/algmod/bimodule_ops.hpp"

namespace pyracat {

namespace {

/// Columns of sum_k (A_k (x) I - I (x) B_k) over every basis element: the
/// balancing relations of a tensor product over A.
Matrix balancing_relations(const std::vector<Matrix>& right_of_first, std::size_t m,
                           const std::vector<Matrix>& left_of_second, std::size_t n) {
  const std::size_t mn = m * n;
  Matrix w(mn, mn * right_of_first.size());
  const Matrix im = Matrix::identity(m);
  const Matrix in = Matrix::identity(n);
  for (std::size_t k = 0; k < right_of_first.size(); ++k)
    w.set_block(0, k * mn, kronecker(right_of_first[k], in) - kronecker(im, left_of_second[k]));
  return w;
}

Matrix column_span(std::size_t rows, const std::vector<Matrix>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix w(rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    w.set_block(0, c, b);
    c += b.cols();
  }
  return w;
}

std::vector<Vector> radical_vectors(const Algebra& a) {
  const Matrix rad = radical_basis(a);
  std::vector<Vector> out;
  for (std::size_t c = 0; c < rad.cols(); ++c) out.push_back(rad.col(c));
  return out;
}

}  // namespace

TensorOverA tensor_over_a_data(const Bimodule& m, const Bimodule& n) {
  const std::size_t mn = m.dim * n.dim;
  const std::size_t d = m.left.size();
  if (mn == 0) {
    TensorOverA out{{0, std::vector<Matrix>(d, Matrix(0, 0)), std::vector<Matrix>(d, Matrix(0, 0))},
                    Matrix(0, 0), Matrix(0, 0)};
    out.projection = Matrix(0, mn);
    out.section = Matrix(mn, 0);
    return out;
  }
  const QuotientSpace q(mn, std::nullopt, balancing_relations(m.right, m.dim, n.left, n.dim));
  TensorOverA out;
  out.product.dim = q.dim();
  const Matrix im = Matrix::identity(m.dim);
  const Matrix in = Matrix::identity(n.dim);
  for (std::size_t k = 0; k < d; ++k) {
    out.product.left.push_back(q.induced(kronecker(m.left[k], in)));
    out.product.right.push_back(q.induced(kronecker(im, n.right[k])));
  }
  out.projection = q.projection();
  out.section = q.section();
  return out;
}

Bimodule tensor_over_a(const Bimodule& m, const Bimodule& n) { return tensor_over_a_data(m, n).product; }

Matrix tensor_over_a_morphisms(const TensorOverA& src, const TensorOverA& tgt, const Matrix& f, const Matrix& g) {
  return tgt.projection * (kronecker(f, g) * src.section);
}

LeftModule tensor_over_a(const Bimodule& m, const LeftModule& x) {
  const std::size_t mn = m.dim * x.dim;
  if (mn == 0) return {0, std::vector<Matrix>(m.left.size(), Matrix(0, 0))};
  const QuotientSpace q(mn, std::nullopt, balancing_relations(m.right, m.dim, x.act, x.dim));
  LeftModule out{q.dim(), {}};
  const Matrix in = Matrix::identity(x.dim);
  for (const auto& l : m.left) out.act.push_back(q.induced(kronecker(l, in)));
  return out;
}

Matrix bimodule_radical(const Algebra& a, const Bimodule& m) {
  std::vector<Matrix> blocks;
  for (const auto& r : radical_vectors(a)) {
    blocks.push_back(m.left_action(r));
    blocks.push_back(m.right_action(r));
  }
  return column_span(m.dim, blocks);
}

BimoduleTop bimodule_top(const Algebra& a, const Bimodule& m) {
  const std::size_t n = a.num_idempotents();
  BimoduleTop top{std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)),
                  std::vector<std::vector<std::vector<Vector>>>(n, std::vector<std::vector<Vector>>(n))};
  if (m.dim == 0) return top;
  const QuotientSpace q(m.dim, std::nullopt, bimodule_radical(a, m));
  const Matrix proj = q.projection();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix piece = m.left_action(a.idempotents[i]) * m.right_action(a.idempotents[j]);
      const auto red = rref(proj * piece);
      top.dims[i][j] = red.rank;
      for (auto c : red.pivots) top.generators[i][j].push_back(piece.col(c));
    }
  return top;
}

Matrix bimodule_generators(const Algebra& a, const Bimodule& m) {
  const auto top = bimodule_top(a, m);
  std::vector<Vector> cols;
  for (const auto& row : top.generators)
    for (const auto& gens : row)
      for (const auto& g : gens) cols.push_back(g);
  return Matrix::from_columns(m.dim, cols);
}

LeftModuleStats left_module_stats(const Algebra& a, const LeftModule& l) {
  const std::size_t n = a.num_idempotents();
  LeftModuleStats s{std::vector<std::size_t>(n), std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  if (l.dim == 0) return s;
  std::vector<Matrix> rad_ops;
  for (const auto& r : radical_vectors(a)) rad_ops.push_back(l.action(r));
  const QuotientSpace q(l.dim, std::nullopt, column_span(l.dim, rad_ops));
  const Matrix proj = q.projection();
  Matrix soc = Matrix::identity(l.dim);
  if (!rad_ops.empty()) {
    std::size_t rows = 0;
    for (const auto& op : rad_ops) rows += op.rows();
    Matrix stacked(rows, l.dim);
    std::size_t r = 0;
    for (const auto& op : rad_ops) {
      stacked.set_block(r, 0, op);
      r += op.rows();
    }
    soc = Matrix::from_columns(l.dim, nullspace(stacked));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix e = l.action(a.idempotents[k]);
    s.dims[k] = rank(e);
    s.top[k] = rank(proj * e);
    s.soc[k] = soc.cols() == 0 ? 0 : rank(e * soc);
  }
  return s;
}

LeftModule left_submodule(const LeftModule& l, const Matrix& span) {
  const auto q = QuotientSpace::subspace(span);
  LeftModule out{q.dim(), {}};
  for (const auto& op : l.act) out.act.push_back(q.induced(op));
  return out;
}

}  // namespace pyracat
