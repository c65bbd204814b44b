#include "pyracat/cells/representation.hpp"

namespace pyracat {

CellObjects cell_objects(const LeftIndecomposables& ind, std::size_t n, Flavor flavor) {
  CellObjects out;
  const std::size_t count = flavor == Flavor::CA ? n : ind.modules.size();
  for (std::size_t k = 0; k < count; ++k) {
    out.labels.push_back(ind.labels[k]);
    out.modules.push_back(ind.modules[k]);
    out.candidate_slot.push_back(k);
  }
  return out;
}

ActionMatrices action_matrices(const Algebra& a, Flavor flavor) {
  const std::size_t n = a.num_idempotents();
  const auto ind = left_indecomposables(a);
  ActionMatrices out;
  out.objects = cell_objects(ind, n, flavor);
  const std::size_t m = out.objects.modules.size();

  out.cartan = Matrix(m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      out.cartan(x, y) = static_cast<unsigned long>(hom_left(out.objects.modules[x], out.objects.modules[y]).size());

  const auto table = build_table(cartan_matrix(a), flavor);
  out.f = Matrix(m, m);
  if (flavor == Flavor::DA) out.g = Matrix(m, m);
  for (const auto& s : table.symbols) {
    const Bimodule x = realize(a, s);
    Matrix act(m, m);
    for (std::size_t z = 0; z < m; ++z) {
      const LeftModule image = tensor_over_a(x, out.objects.modules[z]);
      const auto dec = decompose_left(a, ind, image);
      if (!dec.ok) {
        out.ok = false;
        out.problem = s.name() + " on " + out.objects.labels[z] + ": " + dec.problem;
        return out;
      }
      for (std::size_t k = 0; k < dec.multiplicities.size(); ++k) {
        if (!dec.multiplicities[k]) continue;
        if (k >= m) {
          out.ok = false;
          out.problem = s.name() + " on " + out.objects.labels[z] + " leaves the representation";
          return out;
        }
        act(k, z) = static_cast<unsigned long>(dec.multiplicities[k]);
      }
    }
    if (s.kind == SymbolKind::F) out.f += act;
    if (s.kind == SymbolKind::G) out.g += act;
    out.per_symbol.emplace(s, std::move(act));
  }
  if (flavor == Flavor::DA) {
    if (auto inv = inverse(out.cartan)) {
      out.g_bracket = out.cartan * out.g * *inv;
    } else {
      out.ok = false;
      out.problem = "Hom-dimension matrix is singular";
    }
  }
  return out;
}

}  // namespace pyracat
