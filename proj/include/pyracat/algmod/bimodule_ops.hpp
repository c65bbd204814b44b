#pragma once

#include "pyracat/algmod/modules.hpp"
#include "pyracat/exactla/quotient.hpp"

namespace pyracat {

/// M (x)_A N as the quotient of M (x)_k N by the span of ma (x) n - m (x) an.
/// `projection` sends M (x)_k N onto the chosen basis, `section` picks
/// representatives.
struct TensorOverA {
  Bimodule product;
  Matrix projection;
  Matrix section;
};

TensorOverA tensor_over_a_data(const Bimodule& m, const Bimodule& n);
Bimodule tensor_over_a(const Bimodule& m, const Bimodule& n);
/// f (x)_A g : M (x)_A N -> M' (x)_A N'.
Matrix tensor_over_a_morphisms(const TensorOverA& src, const TensorOverA& tgt, const Matrix& f, const Matrix& g);

/// M (x)_A X as a left module.
LeftModule tensor_over_a(const Bimodule& m, const LeftModule& x);

/// Column basis of rad(A) M + M rad(A).
Matrix bimodule_radical(const Algebra& a, const Bimodule& m);

/// Top M / (rad M + M rad) split by idempotent pairs: dims[i][j] is
/// dim e_i top e_j, and generators[i][j] lifts a basis of that piece to
/// elements of e_i M e_j.
struct BimoduleTop {
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<std::vector<Vector>>> generators;
};
BimoduleTop bimodule_top(const Algebra& a, const Bimodule& m);

/// All lifted top generators as columns; they generate M as a bimodule.
Matrix bimodule_generators(const Algebra& a, const Bimodule& m);

/// dim e_k L, dim e_k top(L), dim e_k soc(L) for a left module L.
struct LeftModuleStats {
  std::vector<std::size_t> dims, top, soc;
  bool operator==(const LeftModuleStats&) const = default;
};
LeftModuleStats left_module_stats(const Algebra& a, const LeftModule& l);

/// Submodule of a left module spanned by the columns of `span`.
LeftModule left_submodule(const LeftModule& l, const Matrix& span);

}  // namespace pyracat
