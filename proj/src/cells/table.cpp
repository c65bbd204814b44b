#include "pyracat/cells/table.hpp"

#include <stdexcept>

namespace pyracat {

std::string flavor_name(Flavor f) { return f == Flavor::CA ? "CA" : "DA"; }

std::string Symbol::name() const {
  if (kind == SymbolKind::Id) return "Id";
  return std::string(kind == SymbolKind::F ? "F" : "G") + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string to_string(const Combination& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [s, m] : c) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += s.name();
  }
  return out;
}

Combination CompositionTable::compose(const Combination& s, const Combination& t) const {
  Combination out;
  for (const auto& [a, m] : s)
    for (const auto& [b, k] : t)
      for (const auto& [c, r] : compose(a, b)) out[c] += m * k * r;
  return out;
}

CompositionTable build_table(const CartanMatrix& c, Flavor flavor) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw std::invalid_argument("build_table: Cartan matrix is not square");
    if (c[i][i] == 0) throw std::invalid_argument("build_table: Cartan matrix has a zero diagonal entry");
  }
  CompositionTable t;
  t.flavor = flavor;
  t.cartan = c;
  t.symbols.push_back({SymbolKind::Id, 0, 0});
  std::vector<SymbolKind> kinds{SymbolKind::F};
  if (flavor == Flavor::DA) kinds.push_back(SymbolKind::G);
  for (auto kind : kinds)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.symbols.push_back({kind, i, j});

  for (const auto& s : t.symbols)
    for (const auto& u : t.symbols) {
      Combination prod;
      if (s.kind == SymbolKind::Id) {
        prod[u] = 1;
      } else if (u.kind == SymbolKind::Id) {
        prod[s] = 1;
      } else {
        // The middle factor is e_j A e_k for u = F, and its dual-side
        // analogue of dimension c_kj for u = G.
        const std::size_t mult = u.kind == SymbolKind::F ? c[s.j][u.i] : c[u.i][s.j];
        if (mult) prod[{s.kind, s.i, u.j}] = mult;
      }
      t.products.emplace(std::pair{s, u}, std::move(prod));
    }
  return t;
}

Combination aggregate(const CompositionTable& t, SymbolKind kind) {
  Combination out;
  for (const auto& s : t.symbols)
    if (s.kind == kind) out[s] = 1;
  return out;
}

std::size_t aggregate_multiplicity(const CompositionTable& t) {
  const Combination f = aggregate(t, SymbolKind::F);
  const Combination ff = t.compose(f, f);
  if (ff.empty()) throw std::logic_error("F o F vanishes");
  const std::size_t d = ff.begin()->second;
  for (const auto& [s, c] : f)
    if (!ff.count(s) || ff.at(s) != d * c) throw std::logic_error("F o F is not a multiple of F");
  if (ff.size() != f.size()) throw std::logic_error("F o F leaves F");
  return d;
}

std::string associativity_failure(const CompositionTable& t) {
  for (const auto& s : t.symbols)
    for (const auto& u : t.symbols)
      for (const auto& v : t.symbols) {
        const Combination left = t.compose(t.compose(s, u), Combination{{v, 1}});
        const Combination right = t.compose(Combination{{s, 1}}, t.compose(u, v));
        if (left != right) return "(" + s.name() + " " + u.name() + ") " + v.name() + ": " + to_string(left) + " vs " + to_string(right);
      }
  return {};
}

Bimodule realize(const Algebra& a, const Symbol& s) {
  switch (s.kind) {
    case SymbolKind::Id:
      return regular(a);
    case SymbolKind::F:
      return bimodule_p(a, s.i, s.j);
    case SymbolKind::G:
      return bimodule_q(a, s.i, s.j);
  }
  throw std::logic_error("unknown symbol kind");
}

Symbol iso_class(const LeftIndecomposables& ind, const Symbol& s) {
  if (s.kind != SymbolKind::G) return s;
  const std::size_t slot = ind.injective_slot[s.i];
  const std::size_t n = ind.injective_slot.size();
  if (slot < n) return {SymbolKind::F, slot, s.j};
  return s;
}

Combination iso_classes(const LeftIndecomposables& ind, const Combination& c) {
  Combination out;
  for (const auto& [s, m] : c) out[iso_class(ind, s)] += m;
  return out;
}

Combination combination_of(const ProjectiveDecomposition& d) {
  Combination out;
  for (std::size_t i = 0; i < d.p.size(); ++i)
    for (std::size_t j = 0; j < d.p.size(); ++j) {
      if (d.p[i][j]) out[{SymbolKind::F, i, j}] += d.p[i][j];
      if (d.q[i][j]) out[{SymbolKind::G, i, j}] += d.q[i][j];
    }
  return out;
}

CoherenceReport check_table_coherence(const Algebra& a, const CompositionTable& t) {
  CoherenceReport rep;
  const auto ind = left_indecomposables(a);
  std::map<Symbol, Bimodule> real;
  for (const auto& s : t.symbols) real.emplace(s, realize(a, s));
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.mismatches.push_back(std::move(msg));
  };
  for (const auto& s : t.symbols)
    for (const auto& u : t.symbols) {
      ++rep.pairs;
      const Bimodule x = tensor_over_a(real.at(s), real.at(u));
      const std::string where = s.name() + " o " + u.name();
      if (s.kind == SymbolKind::Id || u.kind == SymbolKind::Id) {
        const Symbol other = s.kind == SymbolKind::Id ? u : s;
        if (!find_isomorphism(x, real.at(other))) fail(where + ": unit law has no isomorphism");
        continue;
      }
      const auto dec = decompose_projective(a, ind, x);
      if (!dec.ok) {
        fail(where + ": " + dec.problem);
        continue;
      }
      const Combination expected = iso_classes(ind, t.compose(s, u));
      const Combination found = iso_classes(ind, combination_of(dec));
      if (expected != found) fail(where + ": table " + to_string(expected) + ", bimodules " + to_string(found));
    }
  return rep;
}

}  // namespace pyracat
