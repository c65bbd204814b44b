#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pyracat/exactla/matrix.hpp"

namespace pyracat {

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Linear system A x = b accumulated one equation at a time.
///
/// Each equation is reduced against the rows kept so far and stored only if
/// it is independent, so memory stays bounded by the rank. Pivoting is by
/// smallest column index, which makes solutions and nullspace bases
/// deterministic.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }

  /// Adds sum_j coeffs[j] x_j = rhs. Duplicate columns are summed.
  void add_equation(SparseRow coeffs, const Scalar& rhs = 0);
  void add_equation(const std::map<std::size_t, Scalar>& coeffs, const Scalar& rhs = 0);

  /// A solution with free variables zero, or nullopt if inconsistent.
  std::optional<Vector> solve() const;
  /// Basis of the homogeneous solution space, ordered by free column.
  std::vector<Vector> nullspace() const;

 private:
  // Stored rows are normalized (leading coefficient 1) and keyed by leading
  // column; column n_ holds the right-hand side.
  SparseRow reduce(SparseRow row) const;
  Vector back_substitute(const std::vector<std::pair<std::size_t, Scalar>>& fixed, bool with_rhs) const;

  std::size_t n_;
  std::map<std::size_t, SparseRow> pivots_;
  bool consistent_ = true;
};

}  // namespace pyracat
