#pragma once

// Data-parallel kernels behind Matrix. Each kernel has a serial reference
// implementation that the OpenMP version is tested against.

#include "pyracat/exactla/matrix.hpp"

namespace pyracat::kernels {

/// Work (multiply-adds) above which the dispatching entry points go parallel.
inline constexpr std::size_t kParallelWork = 1u << 15;

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix kron_serial(const Matrix& a, const Matrix& b);
Matrix kron_parallel(const Matrix& a, const Matrix& b);

/// Clears column `col` in every row except `pivot_row` using that row, which
/// must already carry a 1 in `col`. Rows are independent, hence parallel.
void eliminate_column_serial(Matrix& m, std::size_t pivot_row, std::size_t col);
void eliminate_column_parallel(Matrix& m, std::size_t pivot_row, std::size_t col);

RrefResult rref_serial(const Matrix& m);
RrefResult rref_parallel(const Matrix& m);

}  // namespace pyracat::kernels
