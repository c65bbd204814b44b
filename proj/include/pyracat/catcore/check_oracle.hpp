#pragma once

#include <array>
#include <map>
#include <string>

#include "pyracat/catcore/oracle.hpp"
#include "pyracat/util/rng.hpp"

namespace pyracat {

struct LawTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

struct OracleReport {
  std::map<std::string, LawTally> laws;

  bool all_passed() const {
    for (const auto& [name, t] : laws)
      if (t.failed) return false;
    return true;
  }
  void record(const std::string& law, bool ok, const std::string& where) {
    auto& t = laws[law];
    ++t.checked;
    if (!ok && t.failed++ == 0) t.first_failure = where;
  }
};

/// Random element of Hom(x, y): integer combination of the hom basis with
/// coefficients in [-2, 2].
template <AdditiveCategory C>
Matrix random_morphism(const C& cat, const typename C::Object& x, const typename C::Object& y, Rng& rng) {
  Matrix f = cat.zero_morphism(x, y);
  for (const auto& b : cat.hom_basis(x, y)) {
    const auto c = rng.uniform(-2, 2);
    if (c != 0) f += b.scaled(Scalar(static_cast<long>(c)));
  }
  return f;
}

/// Randomized law checker. `sample` draws a small object from the oracle.
/// Failures are counted per law, never thrown.
template <AdditiveCategory C, class Sampler>
OracleReport check_oracle(const C& cat, Sampler&& sample, std::size_t samples, Rng& rng) {
  OracleReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::string where = "sample " + std::to_string(s);
    const auto x = sample(rng);
    const auto y = sample(rng);
    const auto z = sample(rng);
    const auto w = sample(rng);
    const Matrix f = random_morphism(cat, x, y, rng);
    const Matrix f2 = random_morphism(cat, x, y, rng);
    const Matrix g = random_morphism(cat, y, z, rng);
    const Matrix g2 = random_morphism(cat, y, z, rng);
    const Matrix h = random_morphism(cat, z, w, rng);

    report.record("associativity", cat.compose(h, cat.compose(g, f)) == cat.compose(cat.compose(h, g), f), where);
    report.record("identity", cat.compose(cat.identity(y), f) == f && cat.compose(f, cat.identity(x)) == f, where);
    report.record("bilinearity",
                  cat.compose(g, cat.add(f, f2)) == cat.add(cat.compose(g, f), cat.compose(g, f2)) &&
                      cat.compose(cat.add(g, g2), f) == cat.add(cat.compose(g, f), cat.compose(g2, f)) &&
                      cat.compose(g, cat.scale(Scalar(3), f)) == cat.scale(Scalar(3), cat.compose(g, f)) &&
                      cat.add(f, cat.negate(f)) == cat.zero_morphism(x, y),
                  where);

    const std::array<typename C::Object, 2> pair{x, y};
    const auto sum = cat.direct_sum(pair);
    bool biproduct = true;
    Matrix total = cat.zero_morphism(sum.object, sum.object);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const Matrix pi = cat.compose(sum.projections[i], sum.injections[j]);
        const Matrix expect = i == j ? cat.identity(pair[i]) : cat.zero_morphism(pair[j], pair[i]);
        biproduct = biproduct && pi == expect;
      }
      total = cat.add(total, cat.compose(sum.injections[i], sum.projections[i]));
    }
    biproduct = biproduct && total == cat.identity(sum.object);
    report.record("biproduct", biproduct, where);
    report.record("hom_additivity",
                  cat.hom_basis(sum.object, z).size() == cat.hom_basis(x, z).size() + cat.hom_basis(y, z).size(),
                  where);

    if constexpr (MonoidalCategory<C>) {
      // (a o0 b) o1 (c o0 d) = (a o1 c) o0 (b o1 d) with c: x->y, a: y->z, d: z->w, b: w->x.
      const Matrix b = random_morphism(cat, w, x, rng);
      const Matrix d = random_morphism(cat, z, w, rng);
      const Matrix lhs = cat.compose(cat.tensor_morphisms(g, y, z, b, w, x), cat.tensor_morphisms(f, x, y, d, z, w));
      const Matrix rhs = cat.tensor_morphisms(cat.compose(g, f), x, z, cat.compose(b, d), z, x);
      report.record("interchange", lhs == rhs, where);
      report.record("biadditivity",
                    cat.tensor_morphisms(cat.add(f, f2), x, y, d, z, w) ==
                        cat.add(cat.tensor_morphisms(f, x, y, d, z, w), cat.tensor_morphisms(f2, x, y, d, z, w)),
                    where);
      if constexpr (C::strict_on_the_nose) {
        const auto xy_z = cat.tensor_objects(cat.tensor_objects(x, y), z);
        const auto x_yz = cat.tensor_objects(x, cat.tensor_objects(y, z));
        const Matrix m1 = cat.tensor_morphisms(cat.tensor_morphisms(f, x, y, g, y, z), cat.tensor_objects(x, y),
                                               cat.tensor_objects(y, z), h, z, w);
        const Matrix m2 = cat.tensor_morphisms(f, x, y, cat.tensor_morphisms(g, y, z, h, z, w),
                                               cat.tensor_objects(y, z), cat.tensor_objects(z, w));
        const auto u = cat.unit();
        report.record("strict_associativity", xy_z == x_yz && m1 == m2, where);
        report.record("strict_unit",
                      cat.tensor_objects(u, x) == x && cat.tensor_objects(x, u) == x &&
                          cat.tensor_morphisms(cat.identity(u), u, u, f, x, y) == f &&
                          cat.tensor_morphisms(f, x, y, cat.identity(u), u, u) == f,
                      where);
      }
    }
  }
  return report;
}

}  // namespace pyracat
