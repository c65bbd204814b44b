#pragma once

#include <optional>

#include "pyracat/cells/table.hpp"

namespace pyracat {

/// Preorders and cells of a composition table. Orders are reflexive and
/// transitive; order[s][t] means s >= t. Cells are listed by their smallest
/// symbol position; members in table order.
struct CellStructure {
  std::vector<Symbol> symbols;
  std::vector<std::vector<bool>> left_order, right_order, two_sided_order;
  std::vector<std::vector<std::size_t>> left_cells, right_cells, two_sided_cells;

  std::size_t index_of(const Symbol& s) const;
  /// Position of the cell containing symbol index k.
  static std::size_t cell_of(const std::vector<std::vector<std::size_t>>& cells, std::size_t k);
};

/// s >=_L t iff s is a summand of u o t for some u, closed transitively;
/// >=_R uses t o u and >=_J both sides.
CellStructure cell_structure(const CompositionTable& t);

/// No two distinct left (right) cells inside the two-sided cell are
/// comparable, and each left-right intersection is a single symbol.
bool is_strongly_regular(const CellStructure& s, std::size_t two_sided);

/// The unique maximal two-sided cell among those containing a symbol that
/// acts nonzero; nullopt if none or not unique.
std::optional<std::size_t> apex(const CellStructure& s, const std::vector<bool>& acts_nonzero);

}  // namespace pyracat
