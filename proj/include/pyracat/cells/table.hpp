#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pyracat/algmod/decompose.hpp"

namespace pyracat {

enum class Flavor { CA, DA };
std::string flavor_name(Flavor f);

enum class SymbolKind { Id, F, G };

/// Indecomposable 1-morphism symbol; i, j are 0-based, printed 1-based.
struct Symbol {
  SymbolKind kind = SymbolKind::Id;
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const Symbol&) const = default;
  std::string name() const;
};

/// Formal nonnegative combination of symbols; zero coefficients are never stored.
using Combination = std::map<Symbol, std::size_t>;
std::string to_string(const Combination& c);

using CartanMatrix = std::vector<std::vector<std::size_t>>;

/// (s, t) -> s o t, with s o t realized as s (x)_A t.
struct CompositionTable {
  Flavor flavor = Flavor::CA;
  CartanMatrix cartan;
  std::vector<Symbol> symbols;
  std::map<std::pair<Symbol, Symbol>, Combination> products;

  const Combination& compose(const Symbol& s, const Symbol& t) const { return products.at({s, t}); }
  /// Bilinear extension to combinations.
  Combination compose(const Combination& s, const Combination& t) const;
};

/// F(i,j) F(k,l) = c_jk F(i,l), G(i,j) F(k,l) = c_jk G(i,l),
/// F(i,j) G(k,l) = c_kj F(i,l), G(i,j) G(k,l) = c_kj G(i,l); Id is the unit.
/// Throws std::invalid_argument for a non-square C or a zero diagonal entry.
CompositionTable build_table(const CartanMatrix& c, Flavor flavor);

/// Sum of all F(i,j) (or G(i,j)).
Combination aggregate(const CompositionTable& t, SymbolKind kind);

/// d with F o F = d F for the aggregate F; throws std::logic_error when
/// the aggregate product is not a multiple of F.
std::size_t aggregate_multiplicity(const CompositionTable& t);

/// Empty when (s t) u = s (t u) on every triple; otherwise the first failure.
std::string associativity_failure(const CompositionTable& t);

/// Id -> A, F(i,j) -> P_ij, G(i,j) -> Q_ij.
Bimodule realize(const Algebra& a, const Symbol& s);

/// Symbols up to isomorphism of their realizations: G(i,j) becomes F(k,j)
/// when (e_i A)* is projective with top S_k.
Symbol iso_class(const LeftIndecomposables& ind, const Symbol& s);
Combination iso_classes(const LeftIndecomposables& ind, const Combination& c);

/// P_ij -> F(i,j), Q_ij -> G(i,j).
Combination combination_of(const ProjectiveDecomposition& d);

struct CoherenceReport {
  bool ok = true;
  std::size_t pairs = 0;
  std::vector<std::string> mismatches;
};
/// Compares every table entry with the decomposition of the realized
/// tensor product, both read up to isomorphism. Pairs involving Id are
/// checked by an explicit isomorphism A (x)_A X = X.
CoherenceReport check_table_coherence(const Algebra& a, const CompositionTable& t);

}  // namespace pyracat
