#include <doctest.h>

#include "pyracat/pyramid/complex.hpp"
#include "pyracat/pyramid/homotopy.hpp"
#include "pyracat/verify/da_instance.hpp"

using namespace pyracat;

namespace {

void check_report(const DAReport& r) {
  CHECK(r.ok);
  REQUIRE(r.products.size() == 3);
  for (const auto& p : r.products) {
    INFO(p.lhs << " ~ " << p.rhs << ": " << p.problem);
    CHECK(p.lifted);
    CHECK(p.equivalent);
    CHECK(p.revalidated);
    CHECK(p.problem.empty());
  }
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("k[x]/x^2 instance") {
    const auto inst = build_instance(truncated_polynomial(2), 0);
    CHECK(inst.terminated);
    CHECK(inst.copies == 2);
    CHECK(inst.q_axiom_violations == 0);
    CHECK(inst.q_pyr.cells.size() == 1);
    CHECK(inst.f_pyr.width == 0);
    CHECK(inst.iso_fg.has_value());
    CHECK(inst.iso_gf.has_value());
    CHECK(inst.iso_gg.has_value());
    CHECK(is_morphism(*inst.cat, inst.q_augmentation));
    // G is projective here, so the augmentation is already an equivalence.
    CHECK(is_homotopy_equivalence(*inst.cat, inst.q_augmentation).has_value());
    check_report(verify_da_table(inst));
  }

  TEST_CASE("A2 instance") {
    const Algebra a = path_algebra_an(2);
    CHECK_FALSE(build_instance(a, 0).terminated);
    const auto inst = build_instance(a, 1);
    CHECK(inst.terminated);
    CHECK(inst.copies == 3);
    CHECK(inst.q_axiom_violations == 0);
    CHECK(check_axioms(*inst.cat, inst.q_pyr).empty());
    REQUIRE(inst.q_pyr.cells.size() == 2);
    CHECK(inst.q_pyr.cell(IndexVector{}) != nullptr);
    CHECK(inst.q_pyr.cell(IndexVector{-1}) != nullptr);
    CHECK(is_morphism(*inst.cat, inst.q_augmentation));
    // G is not projective, so Q -> G is only a quasi-isomorphism.
    CHECK_FALSE(is_homotopy_equivalence(*inst.cat, inst.q_augmentation).has_value());

    // The totalized resolution has homology G in degree 0 only.
    const BimodCat& cat = *inst.cat;
    const auto tq = totalize(cat, inst.q_pyr);
    const Matrix d = complex_diff(cat, tq, -1);
    CHECK(rank(d) == cat.dim(tq.objects.at(-1)));
    CHECK(cat.dim(tq.objects.at(0)) - rank(d) == inst.g.dim);
  }

  TEST_CASE("lifting along the augmentation") {
    const auto inst = build_instance(path_algebra_an(2), 1);
    const BimodCat& cat = *inst.cat;
    for (long s : {0L, 1L, 2L}) {
      const Matrix phi = Matrix::identity(inst.g.dim).scaled(s);
      const auto f = lift_augmentation(cat, inst.q_augmentation, inst.q_augmentation, phi);
      REQUIRE(f);
      CHECK(f->degree == 0);
      CHECK(is_morphism(cat, *f));
      const auto lhs = compose(inst.q_augmentation, *f);
      const auto rhs = scale(Scalar(s), inst.q_augmentation);
      CHECK(add_morphisms(lhs, negate(rhs)).entries.empty());
    }
  }

  TEST_CASE("composition table up to homotopy") {
    check_report(verify_da_table(build_instance(path_algebra_an(2), 1)));
  }
}
