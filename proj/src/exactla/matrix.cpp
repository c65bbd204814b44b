#include "pyracat/exactla/matrix.hpp"

#include <omp.h>

#include <stdexcept>

#include "pyracat/exactla/kernels.hpp"

namespace pyracat {

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    const bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed scalar: " + text);
  }
  Scalar s;
  if (s.set_str(text, 10) != 0) throw std::invalid_argument("malformed scalar: " + text);
  if (text.find('/') != std::string::npos && sgn(s.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  s.canonicalize();
  return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (sgn(x) != 0) ++n;
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("Matrix::add_block");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (sgn(m(r, c)) != 0) (*this)(r0 + r, c0 + c) += m(r, c);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix out = *this;
  out -= other;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  return kernels::matmul(*this, other);
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("Matrix * Vector: shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += scalar_to_string((*this)(r, c));
    }
    s += "]";
  }
  return s + "]";
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::size_t work = a.rows() * a.cols() * b.rows() * b.cols();
  if (work >= kernels::kParallelWork && a.rows() > 1 && omp_get_max_threads() > 1)
    return kernels::kron_parallel(a, b);
  return kernels::kron_serial(a, b);
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t c = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks[0].rows()) throw std::invalid_argument("hstack: row mismatch");
    c += b.cols();
  }
  Matrix out(blocks[0].rows(), c);
  c = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks[0].cols()) throw std::invalid_argument("vstack: column mismatch");
    r += b.rows();
  }
  Matrix out(r, blocks[0].cols());
  r = 0;
  for (const auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  if (m.rows() * m.cols() >= kernels::kParallelWork && omp_get_max_threads() > 1)
    return kernels::rref_parallel(m);
  return kernels::rref_serial(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < b.size(); ++r) aug(r, a.cols()) = b[r];
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, a.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  const auto red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(a.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = -red.reduced(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  const auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return red.reduced.block(0, n, n, n);
}

}  // namespace pyracat
