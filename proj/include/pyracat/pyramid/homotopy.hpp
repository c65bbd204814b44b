#pragma once

#include <optional>

#include "pyracat/exactla/echelon.hpp"
#include "pyracat/pyramid/graded_map.hpp"
#include "pyracat/util/rng.hpp"

namespace pyracat {

/// Linear system whose unknowns are graded maps between pyramids.
///
/// Each unknown map U : S -> T of degree k is parameterized by hom-basis
/// coefficients of every block U_{a,b} with ht(a) = ht(b) + k. Equations are
/// sums of terms coef * L * U * R equal to a fixed block map; every equation
/// block is multiplied on the right by the oracle generators of its source
/// cell, which keeps the row count small without losing information.
template <AdditiveCategory C>
class MapSystem {
 public:
  using PyrPtr = std::shared_ptr<const Pyramid<C>>;

  /// L or R absent means identity.
  struct Term {
    std::size_t unknown;
    Scalar coef = 1;
    const BlockEntries* left = nullptr;
    const BlockEntries* right = nullptr;
  };

  explicit MapSystem(const C& cat) : cat_(&cat) {}

  std::size_t add_unknown(PyrPtr source, PyrPtr target, int degree) {
    const std::size_t id = unknowns_.size();
    unknowns_.push_back({source, target, degree});
    for (const auto& [b, x] : source->cells)
      for (const auto& [a, y] : target->cells) {
        if (a.height() != b.height() + degree) continue;
        auto basis = cat_->hom_basis(x, y);
        if (basis.empty()) continue;
        slots_[id].push_back({a, b, vars_, std::move(basis)});
        vars_ += slots_[id].back().basis.size();
      }
    return id;
  }

  /// Call once after every unknown is registered and before any equation.
  void freeze() { system_ = LinearSystem(vars_); }

  std::size_t variables() const { return vars_; }
  std::size_t equations() const { return rows_; }

  /// sum of terms = rhs, all as block maps out of `source`.
  void add_equation(const Pyramid<C>& source, const std::vector<Term>& terms, const BlockEntries& rhs) {
    std::map<std::pair<IndexVector, IndexVector>, std::size_t> offsets;
    std::map<std::size_t, std::map<std::size_t, Scalar>> eqs;
    std::map<std::size_t, Scalar> rhs_vals;
    std::map<IndexVector, Matrix> gens;
    auto gen_of = [&](const IndexVector& c) -> const Matrix& {
      auto it = gens.find(c);
      if (it == gens.end()) it = gens.emplace(c, cat_->generators(source.cells.at(c))).first;
      return it->second;
    };
    auto offset_of = [&](const IndexVector& r, const IndexVector& c, std::size_t nrows, std::size_t ncols) {
      auto [it, inserted] = offsets.try_emplace({r, c}, rows_);
      if (inserted) rows_ += nrows * ncols;
      return it->second;
    };
    auto scatter = [](const Matrix& m, std::size_t base, auto&& sink) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (sgn(m(i, j)) != 0) sink(base + i * m.cols() + j, m(i, j));
    };

    for (const auto& t : terms) {
      auto sit = slots_.find(t.unknown);
      if (sit == slots_.end()) continue;
      for (const auto& slot : sit->second) {
        // Left factors with column slot.row, right factors with row slot.col.
        std::vector<std::pair<IndexVector, const Matrix*>> lefts, rights;
        if (t.left) {
          for (const auto& [key, m] : *t.left)
            if (key.second == slot.row) lefts.emplace_back(key.first, &m);
        } else {
          lefts.emplace_back(slot.row, nullptr);
        }
        if (t.right) {
          for (const auto& [key, m] : *t.right)
            if (key.first == slot.col) rights.emplace_back(key.second, &m);
        } else {
          rights.emplace_back(slot.col, nullptr);
        }
        for (const auto& [c, rm] : rights) {
          if (!source.cell(c)) continue;
          const Matrix rg = rm ? *rm * gen_of(c) : gen_of(c);
          for (const auto& [r, lm] : lefts)
            for (std::size_t k = 0; k < slot.basis.size(); ++k) {
              Matrix prod = slot.basis[k] * rg;
              if (lm) prod = *lm * prod;
              if (prod.is_zero()) continue;
              const std::size_t base = offset_of(r, c, prod.rows(), prod.cols());
              const std::size_t var = slot.first_var + k;
              scatter(prod, base, [&](std::size_t row, const Scalar& v) { eqs[row][var] += t.coef * v; });
            }
        }
      }
    }
    for (const auto& [key, m] : rhs) {
      if (!source.cell(key.second)) continue;
      const Matrix mg = m * gen_of(key.second);
      const std::size_t base = offset_of(key.first, key.second, mg.rows(), mg.cols());
      scatter(mg, base, [&](std::size_t row, const Scalar& v) { rhs_vals[row] += v; });
    }
    std::set<std::size_t> rows;
    for (const auto& [r, e] : eqs) rows.insert(r);
    for (const auto& [r, v] : rhs_vals) rows.insert(r);
    for (auto r : rows) {
      std::map<std::size_t, Scalar> coeffs;
      if (auto it = eqs.find(r); it != eqs.end())
        for (const auto& [var, v] : it->second)
          if (sgn(v) != 0) coeffs.emplace(var, v);
      auto it = rhs_vals.find(r);
      system_.add_equation(coeffs, it == rhs_vals.end() ? Scalar(0) : it->second);
    }
  }

  bool consistent() const { return system_.consistent(); }

  std::optional<std::vector<GradedMap<C>>> solve() const {
    const auto x = system_.solve();
    if (!x) return std::nullopt;
    return assemble(*x);
  }

  /// One tuple of maps per basis vector of the homogeneous solution space.
  std::vector<std::vector<GradedMap<C>>> nullspace() const {
    std::vector<std::vector<GradedMap<C>>> out;
    for (const auto& v : system_.nullspace()) out.push_back(assemble(v));
    return out;
  }

 private:
  struct Unknown {
    PyrPtr source, target;
    int degree;
  };
  struct Slot {
    IndexVector row, col;
    std::size_t first_var;
    std::vector<Matrix> basis;
  };

  std::vector<GradedMap<C>> assemble(const Vector& x) const {
    std::vector<GradedMap<C>> maps;
    for (std::size_t u = 0; u < unknowns_.size(); ++u) {
      BlockEntries e;
      if (auto it = slots_.find(u); it != slots_.end())
        for (const auto& s : it->second) {
          Matrix m = cat_->zero_morphism(unknowns_[u].source->cells.at(s.col), unknowns_[u].target->cells.at(s.row));
          for (std::size_t k = 0; k < s.basis.size(); ++k)
            if (sgn(x[s.first_var + k]) != 0) m += s.basis[k].scaled(x[s.first_var + k]);
          e.emplace(std::pair{s.row, s.col}, std::move(m));
        }
      maps.push_back(make_map(unknowns_[u].source, unknowns_[u].target, std::move(e), unknowns_[u].degree));
    }
    return maps;
  }

  const C* cat_;
  std::vector<Unknown> unknowns_;
  std::map<std::size_t, std::vector<Slot>> slots_;
  std::size_t vars_ = 0;
  std::size_t rows_ = 0;
  LinearSystem system_{0};
};

/// chi with chi d + d' chi = alpha, or nullopt.
template <AdditiveCategory C>
std::optional<GradedMap<C>> is_null_homotopic(const C& cat, const GradedMap<C>& alpha) {
  MapSystem<C> sys(cat);
  const auto chi = sys.add_unknown(alpha.source, alpha.target, -1);
  sys.freeze();
  const BlockEntries ds = differential_entries(*alpha.source);
  const BlockEntries dt = differential_entries(*alpha.target);
  sys.add_equation(*alpha.source, {{chi, 1, nullptr, &ds}, {chi, 1, &dt, nullptr}}, alpha.entries);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return (*sol)[chi];
}

/// Substitution check of a null-homotopy witness.
template <AdditiveCategory C>
bool check_null_homotopy(const GradedMap<C>& alpha, const GradedMap<C>& chi) {
  return chi.degree == -1 && *chi.source == *alpha.source && *chi.target == *alpha.target &&
         homotopy_boundary(chi) == alpha.entries;
}

template <AdditiveCategory C>
struct HomotopyEquivalence {
  GradedMap<C> inverse;           // g : Q -> P
  GradedMap<C> source_homotopy;   // g f - id_P = chi_P d + d chi_P
  GradedMap<C> target_homotopy;   // f g - id_Q = chi_Q d + d chi_Q
};

/// Fixes f : P -> Q and solves for g, chi_P, chi_Q.
template <AdditiveCategory C>
std::optional<HomotopyEquivalence<C>> is_homotopy_equivalence(const C& cat, const GradedMap<C>& f) {
  MapSystem<C> sys(cat);
  const auto g = sys.add_unknown(f.target, f.source, 0);
  const auto xp = sys.add_unknown(f.source, f.source, -1);
  const auto xq = sys.add_unknown(f.target, f.target, -1);
  sys.freeze();
  const BlockEntries dp = differential_entries(*f.source);
  const BlockEntries dq = differential_entries(*f.target);
  sys.add_equation(*f.target, {{g, 1, nullptr, &dq}, {g, -1, &dp, nullptr}}, {});
  sys.add_equation(*f.source, {{g, 1, nullptr, &f.entries}, {xp, -1, nullptr, &dp}, {xp, -1, &dp, nullptr}},
                   identity_map(cat, *f.source).entries);
  sys.add_equation(*f.target, {{g, 1, &f.entries, nullptr}, {xq, -1, nullptr, &dq}, {xq, -1, &dq, nullptr}},
                   identity_map(cat, *f.target).entries);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return HomotopyEquivalence<C>{(*sol)[g], (*sol)[xp], (*sol)[xq]};
}

/// Substitution check of all three identities and the chain-map property of g.
template <AdditiveCategory C>
bool check_homotopy_equivalence(const C& cat, const GradedMap<C>& f, const HomotopyEquivalence<C>& w) {
  if (!is_morphism(cat, f) || !is_morphism(cat, w.inverse)) return false;
  const auto id_p = identity_map(cat, *f.source);
  const auto id_q = identity_map(cat, *f.target);
  const auto gf_minus = add_morphisms(compose(w.inverse, f), negate(id_p));
  const auto fg_minus = add_morphisms(compose(f, w.inverse), negate(id_q));
  return check_null_homotopy(gf_minus, w.source_homotopy) && check_null_homotopy(fg_minus, w.target_homotopy);
}

/// Basis of the space of pyramid morphisms S -> T.
template <AdditiveCategory C>
std::vector<GradedMap<C>> chain_map_basis(const C& cat, const Pyramid<C>& s, const Pyramid<C>& t) {
  auto sp = std::make_shared<const Pyramid<C>>(s);
  auto tp = std::make_shared<const Pyramid<C>>(t);
  MapSystem<C> sys(cat);
  const auto a = sys.add_unknown(sp, tp, 0);
  sys.freeze();
  const BlockEntries ds = differential_entries(s);
  const BlockEntries dt = differential_entries(t);
  sys.add_equation(s, {{a, 1, nullptr, &ds}, {a, -1, &dt, nullptr}}, {});
  std::vector<GradedMap<C>> out;
  for (auto& v : sys.nullspace()) out.push_back(std::move(v[a]));
  return out;
}

/// Integer combination of the chain-map basis with coefficients in [-2, 2].
template <AdditiveCategory C>
GradedMap<C> random_chain_map(const C& cat, const Pyramid<C>& s, const Pyramid<C>& t, Rng& rng) {
  GradedMap<C> out = zero_map(s, t);
  for (const auto& b : chain_map_basis(cat, s, t)) {
    const auto c = rng.uniform(-2, 2);
    if (c != 0) out = add_morphisms(out, scale(Scalar(static_cast<long>(c)), b));
  }
  return out;
}

}  // namespace pyracat
