#include "pyracat/exactla/kernels.hpp"

#include <omp.h>

namespace pyracat::kernels {

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(r, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(r, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t work = a.rows() * a.cols() * b.cols();
  if (work >= kParallelWork && a.rows() > 1 && omp_get_max_threads() > 1)
    return matmul_parallel(a, b);
  return matmul_serial(a, b);
}

Matrix kron_serial(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  Matrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l)
          if (sgn(b(k, l)) != 0) out(i * p + k, j * q + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix kron_parallel(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  Matrix out(a.rows() * p, a.cols() * q);
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for
  for (long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l)
          if (sgn(b(k, l)) != 0) out(i * p + k, j * q + l) = a(i, j) * b(k, l);
    }
  }
  return out;
}

namespace {

void eliminate_row(Matrix& m, std::size_t r, std::size_t pivot_row, std::size_t col) {
  if (r == pivot_row || sgn(m(r, col)) == 0) return;
  const Scalar factor = m(r, col);
  for (std::size_t c = col; c < m.cols(); ++c)
    if (sgn(m(pivot_row, c)) != 0) m(r, c) -= factor * m(pivot_row, c);
}

template <class Eliminate>
RrefResult rref_with(const Matrix& input, Eliminate&& eliminate) {
  RrefResult out{input, {}, 0};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    eliminate(m, row, col);
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

}  // namespace

void eliminate_column_serial(Matrix& m, std::size_t pivot_row, std::size_t col) {
  for (std::size_t r = 0; r < m.rows(); ++r) eliminate_row(m, r, pivot_row, col);
}

void eliminate_column_parallel(Matrix& m, std::size_t pivot_row, std::size_t col) {
  const auto n = static_cast<long>(m.rows());
#pragma omp parallel for schedule(static)
  for (long r = 0; r < n; ++r) eliminate_row(m, static_cast<std::size_t>(r), pivot_row, col);
}

RrefResult rref_serial(const Matrix& m) { return rref_with(m, eliminate_column_serial); }

RrefResult rref_parallel(const Matrix& m) { return rref_with(m, eliminate_column_parallel); }

}  // namespace pyracat::kernels
