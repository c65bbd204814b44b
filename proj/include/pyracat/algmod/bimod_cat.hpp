#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>

#include "pyracat/algmod/bimodule_ops.hpp"
#include "pyracat/catcore/oracle.hpp"

namespace pyracat {

/// A-A-bimodules with bimodule maps, tensored over A. The tensor is only
/// associative up to canonical isomorphism in the chosen bases, so the
/// oracle is not strict. Hom bases, generators and tensor data are cached
/// per object content; the caches are internally synchronized.
class BimodCat : public MatrixMorphisms {
 public:
  using Object = Bimodule;
  static constexpr bool strict_on_the_nose = false;

  explicit BimodCat(Algebra a);

  const Algebra& algebra() const { return algebra_; }

  std::size_t dim(const Object& x) const { return x.dim; }
  bool is_zero_object(const Object& x) const { return x.dim == 0; }
  Object zero_object() const { return zero_bimodule(algebra_); }
  Matrix identity(const Object& x) const { return Matrix::identity(x.dim); }
  Matrix zero_morphism(const Object& from, const Object& to) const { return Matrix::zero(to.dim, from.dim); }
  std::vector<Matrix> hom_basis(const Object& from, const Object& to) const;
  DirectSum<Object> direct_sum(std::span<const Object> objects) const;
  Matrix generators(const Object& x) const;

  Object tensor_objects(const Object& x, const Object& y) const;
  Matrix tensor_morphisms(const Matrix& f, const Object& fs, const Object& ft, const Matrix& g, const Object& gs,
                          const Object& gt) const;
  Object unit() const { return regular(algebra_); }

 private:
  struct Cache;
  std::shared_ptr<const TensorOverA> tensor_data(const Object& x, const Object& y) const;

  Algebra algebra_;
  std::shared_ptr<Cache> cache_;
};

/// Content hash of a bimodule, used for cache lookup.
std::size_t bimodule_hash(const Bimodule& m);

}  // namespace pyracat
