#include "pyracat/cells/cell_structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace pyracat {

namespace {

using Order = std::vector<std::vector<bool>>;

void close_transitively(Order& o) {
  const std::size_t n = o.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (o[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (o[k][j]) o[i][j] = true;
}

std::vector<std::vector<std::size_t>> classes(const Order& o) {
  const std::size_t n = o.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j)
      if (o[i][j] && o[j][i]) {
        cls.push_back(j);
        seen[j] = true;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

std::size_t CellStructure::index_of(const Symbol& s) const {
  auto it = std::find(symbols.begin(), symbols.end(), s);
  if (it == symbols.end()) throw std::invalid_argument("unknown symbol " + s.name());
  return static_cast<std::size_t>(it - symbols.begin());
}

std::size_t CellStructure::cell_of(const std::vector<std::vector<std::size_t>>& cells, std::size_t k) {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (std::find(cells[c].begin(), cells[c].end(), k) != cells[c].end()) return c;
  throw std::invalid_argument("symbol in no cell");
}

CellStructure cell_structure(const CompositionTable& t) {
  CellStructure s;
  s.symbols = t.symbols;
  const std::size_t n = t.symbols.size();
  Order left(n, std::vector<bool>(n)), right = left;
  for (std::size_t k = 0; k < n; ++k) left[k][k] = right[k][k] = true;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& [w, m] : t.compose(t.symbols[u], t.symbols[v])) {
        const std::size_t wi = s.index_of(w);
        left[wi][v] = true;   // w is a summand of u o v
        right[wi][u] = true;  // w is a summand of u o v, read from u
      }
  close_transitively(left);
  close_transitively(right);
  Order both(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) both[i][j] = left[i][j] || right[i][j];
  close_transitively(both);
  s.left_order = left;
  s.right_order = right;
  s.two_sided_order = both;
  s.left_cells = classes(left);
  s.right_cells = classes(right);
  s.two_sided_cells = classes(both);
  return s;
}

bool is_strongly_regular(const CellStructure& s, std::size_t two_sided) {
  const auto& members = s.two_sided_cells.at(two_sided);
  std::vector<std::size_t> lefts, rights;
  for (auto k : members) {
    lefts.push_back(CellStructure::cell_of(s.left_cells, k));
    rights.push_back(CellStructure::cell_of(s.right_cells, k));
  }
  auto incomparable = [&](const std::vector<std::vector<std::size_t>>& cells, const std::vector<std::size_t>& ids,
                          const std::vector<std::vector<bool>>& order) {
    for (auto a : ids)
      for (auto b : ids)
        if (a != b && order[cells[a][0]][cells[b][0]]) return false;
    return true;
  };
  if (!incomparable(s.left_cells, lefts, s.left_order) || !incomparable(s.right_cells, rights, s.right_order))
    return false;
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      if (lefts[x] == lefts[y] && rights[x] == rights[y]) return false;
  return true;
}

std::optional<std::size_t> apex(const CellStructure& s, const std::vector<bool>& acts_nonzero) {
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < s.two_sided_cells.size(); ++c)
    for (auto k : s.two_sided_cells[c])
      if (acts_nonzero.at(k)) {
        live.push_back(c);
        break;
      }
  std::vector<std::size_t> maximal;
  for (auto c : live) {
    bool is_max = true;
    for (auto d : live)
      if (d != c && s.two_sided_order[s.two_sided_cells[d][0]][s.two_sided_cells[c][0]]) is_max = false;
    if (is_max) maximal.push_back(c);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal[0];
}

}  // namespace pyracat
