#pragma once

#include <optional>
#include <vector>

#include "pyracat/exactla/matrix.hpp"

namespace pyracat {

/// The quotient V / W of a subspace V of k^n by a subspace W contained in V.
///
/// W is kept in reduced row echelon form; a basis of V/W is the RREF of the
/// W-reduced spanning vectors of V. Coordinates of v in V are read off at
/// the complement pivots after reducing v modulo W. The choice is canonical
/// for the given spanning sets.
class QuotientSpace {
 public:
  /// V = span of `v_span` columns (or all of k^n when nullopt), W = span of
  /// `w_span` columns. Each matrix has `ambient` rows.
  QuotientSpace(std::size_t ambient, const std::optional<Matrix>& v_span, const Matrix& w_span);

  /// Subspace V itself (W = 0).
  static QuotientSpace subspace(const Matrix& v_span);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_pivots_.size(); }
  std::size_t sub_dim() const { return w_pivots_.size(); }

  Vector reduce(Vector v) const;
  /// Coordinates of the class of v; v must lie in V.
  Vector coords(const Vector& v) const;
  bool contains_in_sub(const Vector& v) const;

  /// dim() x ambient matrix of v -> coords(v), valid on V.
  Matrix projection() const;
  /// ambient x dim() matrix whose columns are the chosen representatives.
  Matrix section() const;
  /// Matrix of the induced map on V/W; `op` must preserve V and W.
  Matrix induced(const Matrix& op) const;

 private:
  std::size_t n_;
  Matrix w_rows_;
  std::vector<std::size_t> w_pivots_;
  Matrix basis_rows_;
  std::vector<std::size_t> basis_pivots_;
};

}  // namespace pyracat
