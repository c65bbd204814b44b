#include <doctest.h>

#include "helpers.hpp"
#include "pyracat/pyramid/homotopy.hpp"
#include "pyracat/pyramid/random.hpp"

using namespace pyracat;

namespace {

const MatCat cat;

/// Random degree -1 map between two pyramids.
GradedMap<MatCat> random_homotopy(const Pyramid<MatCat>& p, const Pyramid<MatCat>& q, Rng& rng) {
  BlockEntries e;
  for (const auto& [b, x] : p.cells)
    for (const auto& [a, y] : q.cells)
      if (a.height() == b.height() - 1) e.emplace(std::pair{a, b}, random_integer_matrix(y, x, rng));
  return make_map(p, q, std::move(e), -1);
}

}  // namespace

TEST_SUITE("homotopy") {
  TEST_CASE("null homotopies") {
    const auto cone = include_complex(cat, testing::cone(2));
    const auto chi = is_null_homotopic(cat, identity_map(cat, cone));
    REQUIRE(chi);
    CHECK(check_null_homotopy(identity_map(cat, cone), *chi));
    CHECK(chi->entries.size() == 1);
    CHECK(chi->entries.at({IndexVector{-1}, IndexVector{}}) == Matrix::identity(2));

    const auto point = embed_object(cat, std::size_t{3});
    CHECK_FALSE(is_null_homotopic(cat, identity_map(cat, point)));

    const auto zero = is_null_homotopic(cat, zero_map(cone, point));
    REQUIRE(zero);
    CHECK(zero->entries.empty());

    auto wrong = *chi;
    wrong.entries.begin()->second = wrong.entries.begin()->second.scaled(2);
    CHECK_FALSE(check_null_homotopy(identity_map(cat, cone), wrong));
  }

  TEST_CASE("null-homotopic maps form an ideal") {
    Rng rng(61);
    for (int t = 0; t < 12; ++t) {
      const auto p = random_width1(rng), q = random_width1(rng), r = random_width1(rng), s = random_width1(rng);
      const auto chi = random_homotopy(p, q, rng);
      const auto alpha = make_map(p, q, homotopy_boundary(chi));
      CHECK(is_morphism(cat, alpha));
      CHECK(check_null_homotopy(alpha, chi));
      const auto beta = random_chain_map(cat, q, r, rng);
      const auto gamma = random_chain_map(cat, s, p, rng);
      // Transported witnesses.
      CHECK(check_null_homotopy(compose(beta, alpha), compose(beta, chi)));
      CHECK(check_null_homotopy(compose(alpha, gamma), compose(chi, gamma)));
      CHECK(is_null_homotopic(cat, compose(beta, alpha)).has_value());
      CHECK(is_null_homotopic(cat, compose(alpha, gamma)).has_value());
    }
  }

  TEST_CASE("homotopy equivalences") {
    Rng rng(62);
    const auto p = tensor(cat, random_width1(rng), random_width1(rng));
    const auto id = identity_map(cat, p);
    const auto w = is_homotopy_equivalence(cat, id);
    REQUIRE(w);
    CHECK(check_homotopy_equivalence(cat, id, *w));

    const auto cone = include_complex(cat, testing::cone(2));
    const auto to_zero = zero_map(cone, Pyramid<MatCat>{});
    const auto wc = is_homotopy_equivalence(cat, to_zero);
    REQUIRE(wc);
    CHECK(check_homotopy_equivalence(cat, to_zero, *wc));

    // The unit of totalization is an isomorphism, hence an equivalence.
    const auto [u, v] = canonical_unit(cat, testing::square(1, 1, 2));
    const auto wu = is_homotopy_equivalence(cat, u);
    REQUIRE(wu);
    CHECK(check_homotopy_equivalence(cat, u, *wu));

    // 0 -> embed(X) is not one.
    const auto from_zero = zero_map(Pyramid<MatCat>{}, embed_object(cat, std::size_t{1}));
    CHECK_FALSE(is_homotopy_equivalence(cat, from_zero));
  }

  TEST_CASE("chain map basis") {
    // Hom between two copies of 1 -> 1 (identity differential): chain maps
    // are pairs (f0, f1) with f1 = f0, so a one-dimensional space.
    Complex<MatCat> c;
    c.objects = {{0, 1}, {1, 1}};
    c.diffs = {{0, Matrix::identity(1)}};
    const auto p = include_complex(cat, c);
    CHECK(chain_map_basis(cat, p, p).size() == 1);
    CHECK(chain_map_basis(cat, embed_object(cat, std::size_t{2}), embed_object(cat, std::size_t{3})).size() == 6);
  }
}
