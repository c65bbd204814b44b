#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "pyracat/exactla/matrix.hpp"

namespace pyracat {

/// Object of a direct sum with its canonical injections and projections.
template <class Object>
struct DirectSum {
  Object object;
  std::vector<Matrix> injections;
  std::vector<Matrix> projections;
};

/// Morphism operations shared by every concrete linear category in this
/// library: a morphism X -> Y is a dim(Y) x dim(X) matrix over Scalar.
struct MatrixMorphisms {
  Matrix compose(const Matrix& g, const Matrix& f) const { return g * f; }
  Matrix add(const Matrix& f, const Matrix& g) const { return f + g; }
  Matrix negate(const Matrix& f) const { return -f; }
  Matrix scale(const Scalar& s, const Matrix& f) const { return f.scaled(s); }
};

/// Additive category with explicit finite hom bases.
///
/// `generators(x)` returns columns that detect morphisms out of x: a
/// morphism f : x -> y vanishes iff f * generators(x) == 0. Linear systems
/// over hom spaces only need those columns as equations.
template <class C>
concept AdditiveCategory = requires(const C& cat, const typename C::Object& x, const Matrix& f,
                                    std::span<const typename C::Object> objects) {
  typename C::Object;
  { x == x } -> std::convertible_to<bool>;
  { cat.dim(x) } -> std::convertible_to<std::size_t>;
  { cat.is_zero_object(x) } -> std::convertible_to<bool>;
  { cat.zero_object() } -> std::same_as<typename C::Object>;
  { cat.identity(x) } -> std::same_as<Matrix>;
  { cat.zero_morphism(x, x) } -> std::same_as<Matrix>;
  { cat.hom_basis(x, x) } -> std::convertible_to<std::vector<Matrix>>;
  { cat.direct_sum(objects) } -> std::same_as<DirectSum<typename C::Object>>;
  { cat.generators(x) } -> std::convertible_to<Matrix>;
  { cat.compose(f, f) } -> std::same_as<Matrix>;
  { cat.add(f, f) } -> std::same_as<Matrix>;
  { cat.negate(f) } -> std::same_as<Matrix>;
  { cat.scale(Scalar(1), f) } -> std::same_as<Matrix>;
};

/// Additive strict monoidal structure (strictness declared, not assumed).
/// The morphism tensor receives the endpoints of both factors.
template <class C>
concept MonoidalCategory = AdditiveCategory<C> && requires(const C& cat, const typename C::Object& x, const Matrix& f) {
  { cat.tensor_objects(x, x) } -> std::same_as<typename C::Object>;
  { cat.tensor_morphisms(f, x, x, f, x, x) } -> std::same_as<Matrix>;
  { cat.unit() } -> std::same_as<typename C::Object>;
  { C::strict_on_the_nose } -> std::convertible_to<bool>;
};

/// Action of a monoidal category on an additive category.
template <class A>
concept ActionOracle = requires(const A& act, const typename A::Acting::Object& a,
                                const typename A::Acted::Object& c, const Matrix& f) {
  requires MonoidalCategory<typename A::Acting>;
  requires AdditiveCategory<typename A::Acted>;
  { act.acting() } -> std::convertible_to<const typename A::Acting&>;
  { act.acted() } -> std::convertible_to<const typename A::Acted&>;
  { act.act_objects(a, c) } -> std::same_as<typename A::Acted::Object>;
  { act.act_morphisms(f, a, a, f, c, c) } -> std::same_as<Matrix>;
  { A::strict_on_the_nose } -> std::convertible_to<bool>;
};

/// A monoidal category acting on itself by its tensor product.
template <MonoidalCategory M>
class SelfAction {
 public:
  using Acting = M;
  using Acted = M;
  static constexpr bool strict_on_the_nose = M::strict_on_the_nose;

  explicit SelfAction(const M& cat) : cat_(&cat) {}
  const M& acting() const { return *cat_; }
  const M& acted() const { return *cat_; }
  typename M::Object act_objects(const typename M::Object& a, const typename M::Object& c) const {
    return cat_->tensor_objects(a, c);
  }
  Matrix act_morphisms(const Matrix& f, const typename M::Object& fs, const typename M::Object& ft,
                       const Matrix& g, const typename M::Object& gs, const typename M::Object& gt) const {
    return cat_->tensor_morphisms(f, fs, ft, g, gs, gt);
  }

 private:
  const M* cat_;
};

}  // namespace pyracat
