#include "pyracat/algmod/decompose.hpp"

#include "pyracat/exactla/echelon.hpp"

namespace pyracat {

LeftIndecomposables left_indecomposables(const Algebra& a) {
  const std::size_t n = a.num_idempotents();
  LeftIndecomposables ind;
  for (std::size_t i = 0; i < n; ++i) {
    ind.modules.push_back(left_projective(a, i));
    ind.labels.push_back("Ae" + std::to_string(i + 1));
    ind.stats.push_back(left_module_stats(a, ind.modules.back()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    LeftModule inj = dual(right_projective(a, i));
    const auto st = left_module_stats(a, inj);
    // Cyclic with top S_k and dim A e_k means a quotient of A e_k of equal size.
    std::size_t top_total = 0, k = 0;
    for (std::size_t t = 0; t < n; ++t) {
      top_total += st.top[t];
      if (st.top[t]) k = t;
    }
    if (top_total == 1 && inj.dim == ind.modules[k].dim) {
      ind.injective_slot.push_back(k);
      continue;
    }
    ind.injective_slot.push_back(ind.modules.size());
    ind.modules.push_back(std::move(inj));
    ind.labels.push_back("I" + std::to_string(i + 1));
    ind.stats.push_back(st);
  }
  return ind;
}

LeftDecomposition decompose_left(const Algebra& a, const LeftIndecomposables& ind, const LeftModule& l) {
  LeftDecomposition out;
  const std::size_t u = ind.modules.size();
  const auto target = left_module_stats(a, l);
  LinearSystem sys(u);
  auto add_rows = [&](auto member) {
    for (std::size_t k = 0; k < a.num_idempotents(); ++k) {
      std::map<std::size_t, Scalar> eq;
      for (std::size_t m = 0; m < u; ++m)
        if (const auto v = (ind.stats[m].*member)[k]) eq[m] = static_cast<unsigned long>(v);
      sys.add_equation(eq, static_cast<unsigned long>((target.*member)[k]));
    }
  };
  add_rows(&LeftModuleStats::dims);
  add_rows(&LeftModuleStats::top);
  add_rows(&LeftModuleStats::soc);
  const auto x = sys.solve();
  if (!x) {
    out.ok = false;
    out.problem = "statistics of the module are not a combination of the candidates";
    return out;
  }
  if (!sys.nullspace().empty()) {
    out.ok = false;
    out.problem = "candidate statistics are linearly dependent";
    return out;
  }
  std::size_t total = 0;
  for (std::size_t m = 0; m < u; ++m) {
    const Scalar& v = (*x)[m];
    if (v.get_den() != 1 || sgn(v) < 0) {
      out.ok = false;
      out.problem = "multiplicity of " + ind.labels[m] + " is not a nonnegative integer";
      return out;
    }
    out.multiplicities.push_back(v.get_num().get_ui());
    total += out.multiplicities.back() * ind.modules[m].dim;
  }
  if (total != l.dim) {
    out.ok = false;
    out.problem = "dimension tally mismatch";
  }
  return out;
}

ProjectiveDecomposition decompose_projective(const Algebra& a, const Bimodule& x) {
  return decompose_projective(a, left_indecomposables(a), x);
}

ProjectiveDecomposition decompose_projective(const Algebra& a, const LeftIndecomposables& ind, const Bimodule& x) {
  const std::size_t n = a.num_idempotents();
  ProjectiveDecomposition out{true, {}, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)),
                              std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n))};
  if (x.dim == 0) return out;

  // Y = X / X rad(A), a left module with a semisimple right action.
  const Matrix rad = radical_basis(a);
  Matrix w(x.dim, x.dim * rad.cols());
  for (std::size_t c = 0; c < rad.cols(); ++c) w.set_block(0, c * x.dim, x.right_action(rad.col(c)));
  const QuotientSpace y(x.dim, std::nullopt, w);
  LeftModule y_left{y.dim(), {}};
  for (const auto& l : x.left) y_left.act.push_back(y.induced(l));

  std::vector<std::size_t> right_dims(n);
  for (std::size_t j = 0; j < n; ++j) right_dims[j] = right_projective(a, j).dim;

  std::size_t tally = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix ej = y.induced(x.right_action(a.idempotents[j]));
    const LeftModule piece = left_submodule(y_left, ej);
    if (piece.dim == 0) continue;
    const auto dec = decompose_left(a, ind, piece);
    if (!dec.ok) {
      out.ok = false;
      out.problem = "column " + std::to_string(j + 1) + ": " + dec.problem;
      return out;
    }
    for (std::size_t m = 0; m < ind.modules.size(); ++m) {
      const std::size_t mult = dec.multiplicities[m];
      if (!mult) continue;
      if (m < n) {
        out.p[m][j] += mult;
      } else {
        for (std::size_t i = 0; i < n; ++i)
          if (ind.injective_slot[i] == m) out.q[i][j] += mult;
      }
      tally += mult * ind.modules[m].dim * right_dims[j];
    }
  }
  if (tally != x.dim) {
    out.ok = false;
    out.problem = "dimension tally " + std::to_string(tally) + " != " + std::to_string(x.dim);
  }
  return out;
}

}  // namespace pyracat
