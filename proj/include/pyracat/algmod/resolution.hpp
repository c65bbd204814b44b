#pragma once

#include "pyracat/algmod/bimodule_ops.hpp"

namespace pyracat {

/// Kernel of a bimodule map as a sub-bimodule, with its inclusion.
struct SubBimodule {
  Bimodule module;
  Matrix inclusion;
};
SubBimodule kernel_bimodule(const Bimodule& source, const Matrix& map);

/// P = sum of P_ij^{t_ij}, t_ij = dim e_i top(M) e_j, mapping onto M by
/// sending u (x) w in A e_i (x) e_j A to u m w for a lifted top generator m.
struct ProjectiveCover {
  Bimodule cover;
  std::vector<std::pair<std::size_t, std::size_t>> summands;  // (i, j) per copy
  Matrix surjection;
};
ProjectiveCover projective_cover(const Algebra& a, const Bimodule& m);

/// ... -> Q_1 -> Q_0 -> M by iterated covers of kernels.
struct Resolution {
  std::vector<Bimodule> terms;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> summands;
  /// differentials[k - 1] is d_k : Q_k -> Q_{k-1}.
  std::vector<Matrix> differentials;
  Matrix augmentation;
  /// The kernel after the last computed term vanished.
  bool terminated = false;
  /// Rank bookkeeping held at every step.
  bool exact = false;
};
Resolution projective_resolution(const Algebra& a, const Bimodule& m, std::size_t length);

}  // namespace pyracat
