#include "pyracat/exactla/quotient.hpp"

#include <stdexcept>

namespace pyracat {

namespace {

void reduce_by(Vector& v, const Matrix& rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Scalar f = v[pivots[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < rows.cols(); ++c)
      if (sgn(rows(i, c)) != 0) v[c] -= f * rows(i, c);
  }
}

}  // namespace

QuotientSpace::QuotientSpace(std::size_t ambient, const std::optional<Matrix>& v_span, const Matrix& w_span)
    : n_(ambient) {
  if (w_span.rows() != ambient && !(w_span.rows() == 0 && w_span.cols() == 0))
    throw std::invalid_argument("QuotientSpace: W has wrong ambient dimension");
  if (w_span.cols() > 0) {
    auto red = rref(w_span.transpose());
    w_rows_ = red.reduced.block(0, 0, red.rank, ambient);
    w_pivots_ = red.pivots;
  } else {
    w_rows_ = Matrix(0, ambient);
  }

  Matrix span = v_span ? v_span->transpose() : Matrix::identity(ambient);
  if (span.cols() != ambient) throw std::invalid_argument("QuotientSpace: V has wrong ambient dimension");
  for (std::size_t r = 0; r < span.rows(); ++r) {
    Vector v(span.row(r).begin(), span.row(r).end());
    reduce_by(v, w_rows_, w_pivots_);
    for (std::size_t c = 0; c < ambient; ++c) span(r, c) = v[c];
  }
  auto red = rref(span);
  basis_rows_ = red.reduced.block(0, 0, red.rank, ambient);
  basis_pivots_ = red.pivots;
}

QuotientSpace QuotientSpace::subspace(const Matrix& v_span) {
  return QuotientSpace(v_span.rows(), v_span, Matrix(v_span.rows(), 0));
}

Vector QuotientSpace::reduce(Vector v) const {
  reduce_by(v, w_rows_, w_pivots_);
  return v;
}

Vector QuotientSpace::coords(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("QuotientSpace::coords: wrong length");
  Vector r = reduce(v);
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = r[basis_pivots_[i]];
  return out;
}

bool QuotientSpace::contains_in_sub(const Vector& v) const {
  for (const auto& x : reduce(v))
    if (sgn(x) != 0) return false;
  return true;
}

Matrix QuotientSpace::projection() const {
  Matrix p(dim(), n_);
  Vector e(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    e[c] = 1;
    auto k = coords(e);
    for (std::size_t i = 0; i < dim(); ++i) p(i, c) = k[i];
    e[c] = 0;
  }
  return p;
}

Matrix QuotientSpace::section() const { return basis_rows_.transpose(); }

Matrix QuotientSpace::induced(const Matrix& op) const {
  Matrix out(dim(), dim());
  const Matrix img = op * section();
  for (std::size_t j = 0; j < dim(); ++j) {
    auto k = coords(img.col(j));
    for (std::size_t i = 0; i < dim(); ++i) out(i, j) = k[i];
  }
  return out;
}

}  // namespace pyracat
