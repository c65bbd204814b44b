#pragma once

#include "pyracat/cells/table.hpp"

namespace pyracat {

/// Indecomposable objects of the cell 2-representation: A e_1..A e_n for
/// CA (add of projectives); for DA also every non-projective (e_i A)*.
struct CellObjects {
  std::vector<std::string> labels;
  std::vector<LeftModule> modules;
  std::vector<std::size_t> candidate_slot;  // position in LeftIndecomposables
};
CellObjects cell_objects(const LeftIndecomposables& ind, std::size_t n, Flavor flavor);

/// Integer matrices stored as rational matrices.
struct ActionMatrices {
  CellObjects objects;
  /// cartan(X, Y) = dim Hom(X, Y) over the objects.
  Matrix cartan;
  std::map<Symbol, Matrix> per_symbol;
  Matrix f;          // [F], column X holds the multiplicities in F (x)_A X
  Matrix g;          // [G] (zero-sized for CA)
  Matrix g_bracket;  // cartan [G] cartan^{-1}
  bool ok = true;
  std::string problem;
};

/// [X](Y, Z) = multiplicity of Y in X (x)_A Z.
ActionMatrices action_matrices(const Algebra& a, Flavor flavor);

}  // namespace pyracat
