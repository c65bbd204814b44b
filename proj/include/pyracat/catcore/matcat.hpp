#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pyracat/catcore/oracle.hpp"

namespace pyracat {

/// Matrices over Q: objects are ranks, Hom(m, n) is n x m matrices, the
/// tensor is integer multiplication on objects and Kronecker on morphisms.
/// Strict on the nose.
class MatCat : public MatrixMorphisms {
 public:
  using Object = std::size_t;
  static constexpr bool strict_on_the_nose = true;

  std::size_t dim(Object x) const { return x; }
  bool is_zero_object(Object x) const { return x == 0; }
  Object zero_object() const { return 0; }
  Matrix identity(Object x) const { return Matrix::identity(x); }
  Matrix zero_morphism(Object from, Object to) const { return Matrix::zero(to, from); }
  /// Elementary matrices E_{rc} in row-major order of (r, c).
  std::vector<Matrix> hom_basis(Object from, Object to) const;
  DirectSum<Object> direct_sum(std::span<const Object> objects) const;
  Matrix generators(Object x) const { return Matrix::identity(x); }

  Object tensor_objects(Object x, Object y) const { return x * y; }
  Matrix tensor_morphisms(const Matrix& f, Object, Object, const Matrix& g, Object, Object) const {
    return kronecker(f, g);
  }
  Object unit() const { return 1; }
};

/// MatCat with a deliberately wrong tensor on morphisms: entry (0, 0) of
/// every Kronecker product is negated. Used to confirm the checks can fail.
class FaultyMatCat : public MatCat {
 public:
  Matrix tensor_morphisms(const Matrix& f, Object, Object, const Matrix& g, Object, Object) const {
    Matrix k = kronecker(f, g);
    if (!k.empty()) k(0, 0) = -k(0, 0);
    return k;
  }
};

}  // namespace pyracat
