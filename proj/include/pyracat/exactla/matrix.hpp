#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pyracat {

/// Exact field element. Rationals throughout; no floating point anywhere.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// "p/q" (or "p" when q = 1).
std::string scalar_to_string(const Scalar& s);
/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Scalar parse_scalar(const std::string& text);

/// Row-major dense matrix over Scalar. 0 x n and n x 0 shapes are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector col(std::size_t c) const;
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  std::size_t nonzeros() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Scalar& s) const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product with the row-major block convention:
/// (A (x) B)(i*p + k, j*q + l) = A(i,j) * B(k,l) for B of shape p x q.
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);
Matrix hstack(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form; pivot = first nonzero entry at or below the
/// current row in the current column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Some x with Ax = b (free variables zero), or nullopt when inconsistent.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Basis of {x : Ax = 0}, one vector per free column in increasing order.
std::vector<Vector> nullspace(const Matrix& a);
/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace pyracat
