#pragma once

#include <string>

#include "pyracat/algmod/bimodule_ops.hpp"

namespace pyracat {

/// Indecomposable left modules used for splitting: A e_1..A e_n, then
/// (e_i A)* for every i where that module is not projective. A projective
/// (e_i A)* is identified with the A e_k sharing its top.
struct LeftIndecomposables {
  std::vector<LeftModule> modules;
  std::vector<std::string> labels;
  std::vector<LeftModuleStats> stats;
  /// For each i: position of (e_i A)* (or its projective twin) in `modules`.
  std::vector<std::size_t> injective_slot;
};
LeftIndecomposables left_indecomposables(const Algebra& a);

struct LeftDecomposition {
  bool ok = true;
  std::string problem;
  std::vector<std::size_t> multiplicities;  // aligned with LeftIndecomposables::modules
};

/// Multiplicities of the candidate indecomposables in L, read off from the
/// dimension vectors of L, its top and its socle. Requires a unique
/// nonnegative integer solution; anything else is reported as a problem.
LeftDecomposition decompose_left(const Algebra& a, const LeftIndecomposables& ind, const LeftModule& l);

/// Multiplicities of P_ij = A e_i (x) e_j A and of Q_ij = (e_i A)* (x) e_j A
/// (the latter only for non-projective (e_i A)*; a projective one is counted
/// as the matching P_kj).
struct ProjectiveDecomposition {
  bool ok = true;
  std::string problem;
  std::vector<std::vector<std::size_t>> p;
  std::vector<std::vector<std::size_t>> q;
};

/// X must lie in add of the P_ij and Q_ij. Each left module X e_j / X rad e_j
/// is split over the candidates; the total dimension is then tallied.
ProjectiveDecomposition decompose_projective(const Algebra& a, const Bimodule& x);
ProjectiveDecomposition decompose_projective(const Algebra& a, const LeftIndecomposables& ind, const Bimodule& x);

}  // namespace pyracat
