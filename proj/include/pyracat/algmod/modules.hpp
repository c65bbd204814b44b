#pragma once

#include <optional>

#include "pyracat/algmod/algebra.hpp"

namespace pyracat {

/// Left A-module: act[i] is the matrix of m -> x_i m.
struct LeftModule {
  std::size_t dim = 0;
  std::vector<Matrix> act;
  bool operator==(const LeftModule&) const = default;
  Matrix action(const Vector& a) const;
};

/// Right A-module: act[i] is the matrix of m -> m x_i, so act(xy) = act(y) act(x).
struct RightModule {
  std::size_t dim = 0;
  std::vector<Matrix> act;
  bool operator==(const RightModule&) const = default;
  Matrix action(const Vector& a) const;
};

/// A-A-bimodule given by commuting left and right action matrices.
struct Bimodule {
  std::size_t dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  bool operator==(const Bimodule&) const = default;
  Matrix left_action(const Vector& a) const;
  Matrix right_action(const Vector& a) const;
};

Bimodule zero_bimodule(const Algebra& a);
bool is_left_module(const Algebra& a, const LeftModule& m);
bool is_right_module(const Algebra& a, const RightModule& m);
/// Both actions unital representations that commute elementwise.
bool is_bimodule(const Algebra& a, const Bimodule& m);

LeftModule left_regular(const Algebra& a);
RightModule right_regular(const Algebra& a);
Bimodule regular(const Algebra& a);
/// A e_i as a left submodule of A.
LeftModule left_projective(const Algebra& a, std::size_t i);
/// e_j A as a right submodule of A.
RightModule right_projective(const Algebra& a, std::size_t j);
/// N* as a left module: (a f)(n) = f(n a).
LeftModule dual(const RightModule& n);
/// M* as a right module: (f a)(m) = f(a m).
RightModule dual(const LeftModule& m);
/// M* with left action R_M(a)^T and right action L_M(a)^T.
Bimodule dual(const Bimodule& m);
/// M (x)_k N with A acting on the M leg from the left and the N leg from the right.
Bimodule tensor_k(const LeftModule& m, const RightModule& n);

LeftModule restrict_left(const Bimodule& m);
RightModule restrict_right(const Bimodule& m);

/// F = A (x) A.
Bimodule bimodule_f(const Algebra& a);
/// G = A* (x) A with A* the left dual of the right regular module.
Bimodule bimodule_g(const Algebra& a);
/// P_ij = A e_i (x) e_j A.
Bimodule bimodule_p(const Algebra& a, std::size_t i, std::size_t j);
/// Q_ij = (e_i A)* (x) e_j A.
Bimodule bimodule_q(const Algebra& a, std::size_t i, std::size_t j);

/// Basis of {T : T A_k = B_k T for all k}, each T of shape b_dim x a_dim.
std::vector<Matrix> intertwiners(std::size_t a_dim, std::size_t b_dim, const std::vector<std::pair<Matrix, Matrix>>& pairs);

std::vector<Matrix> hom_left(const LeftModule& m, const LeftModule& n);
std::vector<Matrix> hom_right(const RightModule& m, const RightModule& n);
std::vector<Matrix> hom_bimodules(const Bimodule& m, const Bimodule& n);

/// An invertible element of the given hom basis: fixed patterns first, then
/// seeded random integer combinations.
std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis, std::size_t dim, std::uint64_t seed = 1);
std::optional<Matrix> find_isomorphism(const Bimodule& m, const Bimodule& n);
std::optional<Matrix> find_isomorphism(const LeftModule& m, const LeftModule& n);

}  // namespace pyracat
