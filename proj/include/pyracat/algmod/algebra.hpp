#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "pyracat/exactla/matrix.hpp"

namespace pyracat {

/// Finite-dimensional unital algebra over Q given by structure constants.
/// left_mult[i] is the matrix of y -> x_i y, so left_mult[i](k, j) is the
/// coefficient of x_k in x_i x_j.
struct Algebra {
  std::string name;
  std::vector<std::string> basis;
  Vector unit;
  std::vector<Matrix> left_mult;
  std::vector<Vector> idempotents;

  std::size_t dim() const { return basis.size(); }
  std::size_t num_idempotents() const { return idempotents.size(); }

  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& x, const Vector& y) const;
  /// y -> x y.
  Matrix left_matrix(const Vector& x) const;
  /// y -> y x.
  Matrix right_matrix(const Vector& x) const;
  /// right_mult[i] is the matrix of y -> y x_i.
  std::vector<Matrix> right_mult() const;
};

/// Builds left_mult from entries (i, j, k, c): x_i x_j has c x_k.
Algebra algebra_from_structure_constants(std::string name, std::vector<std::string> basis, Vector unit,
                                         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& mul,
                                         std::vector<Vector> idempotents);

/// k[x]/(x^n) with basis 1, x, ..., x^{n-1} and the single idempotent 1.
Algebra truncated_polynomial(std::size_t n);

/// Path algebra of the linearly oriented A_n quiver, all paths allowed.
/// Basis p_{ij} for j <= i (path from j to i), ordered idempotents
/// p_{11}, ..., p_{nn} first and then the remaining paths by (i, j).
/// p_{ij} p_{kl} = p_{il} when j = k, else 0. Cartan entry (i, j) = [j <= i].
Algebra path_algebra_an(std::size_t n);

/// Q^n, with primitive idempotents the coordinate vectors.
Algebra semisimple_algebra(std::size_t n);

struct AlgebraReport {
  bool valid = true;
  std::vector<std::string> problems;
};

/// Associativity and unit laws on basis elements, orthogonality, sum to 1
/// and primitivity of the idempotents (e A e modulo its radical is Q).
AlgebraReport validate(const Algebra& a);

/// Basis (as columns) of the Jacobson radical, via the trace form
/// {x : tr(L_{xy}) = 0 for all y}; correct in characteristic 0.
Matrix radical_basis(const Algebra& a);

/// C(i, j) = dim e_i A e_j.
std::vector<std::vector<std::size_t>> cartan_matrix(const Algebra& a);

}  // namespace pyracat
