#include <doctest.h>

#include "pyracat/algmod/bimod_cat.hpp"
#include "pyracat/catcore/check_oracle.hpp"
#include "pyracat/catcore/matcat.hpp"

using namespace pyracat;

namespace {

/// Composition with a sign slip on entry (0, 0).
class SignSlipCat : public MatCat {
 public:
  Matrix compose(const Matrix& g, const Matrix& f) const {
    Matrix m = g * f;
    if (!m.empty()) m(0, 0) = -m(0, 0);
    return m;
  }
};

Matrix random_square(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.uniform(-5, 5));
  return m;
}

}  // namespace

TEST_SUITE("catcore") {
  TEST_CASE("matcat basics") {
    const MatCat cat;
    CHECK(cat.tensor_objects(2, 3) == 6);
    const std::array<std::size_t, 2> objs{2, 3};
    const auto sum = cat.direct_sum(objs);
    CHECK(sum.object == 5);
    Matrix iota(5, 2);
    iota(0, 0) = 1;
    iota(1, 1) = 1;
    CHECK(sum.injections[0] == iota);
    CHECK(sum.projections[0] == iota.transpose());
    CHECK(cat.hom_basis(2, 3).size() == 6);
  }

  TEST_CASE("interchange law by entry expansion") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_square(2, rng), b = random_square(2, rng), c = random_square(2, rng),
                   d = random_square(2, rng);
      const Matrix lhs = kronecker(a, b) * kronecker(c, d);
      // (a c)(i, j) (b d)(k, l) expanded by hand.
      Matrix rhs(4, 4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l) {
              Scalar ac = 0, bd = 0;
              for (std::size_t m = 0; m < 2; ++m) {
                ac += a(i, m) * c(m, j);
                bd += b(k, m) * d(m, l);
              }
              rhs(2 * i + k, 2 * j + l) = ac * bd;
            }
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("matcat passes the law checker") {
    Rng rng(101);
    const auto report = check_oracle(MatCat{}, [](Rng& r) { return static_cast<std::size_t>(r.uniform(0, 3)); }, 100, rng);
    for (const auto& [law, tally] : report.laws) {
      INFO(law);
      CHECK(tally.failed == 0);
      CHECK(tally.checked == 100);
    }
    CHECK(report.laws.count("strict_associativity"));
    CHECK(report.all_passed());
  }

  TEST_CASE("a sign slip in compose is caught") {
    Rng rng(101);
    const auto report =
        check_oracle(SignSlipCat{}, [](Rng& r) { return static_cast<std::size_t>(r.uniform(1, 3)); }, 50, rng);
    CHECK_FALSE(report.all_passed());
    CHECK((report.laws.at("associativity").failed > 0 || report.laws.at("bilinearity").failed > 0));
  }

  TEST_CASE("faulty tensor is caught") {
    Rng rng(5);
    const auto report =
        check_oracle(FaultyMatCat{}, [](Rng& r) { return static_cast<std::size_t>(r.uniform(1, 3)); }, 50, rng);
    CHECK_FALSE(report.all_passed());
  }

  TEST_CASE("bimodule oracle passes the additive laws") {
    const Algebra a = path_algebra_an(2);
    const BimodCat cat(a);
    const std::vector<Bimodule> pool{regular(a), bimodule_p(a, 0, 0), bimodule_p(a, 1, 0), bimodule_q(a, 0, 1),
                                     zero_bimodule(a)};
    Rng rng(7);
    const auto report = check_oracle(cat, [&](Rng& r) { return pool[static_cast<std::size_t>(r.uniform(0, 4))]; }, 50, rng);
    for (const auto& law : {"associativity", "identity", "bilinearity", "biproduct", "hom_additivity"}) {
      INFO(law);
      CHECK(report.laws.at(law).failed == 0);
    }
    CHECK(report.laws.at("interchange").failed == 0);
    CHECK_FALSE(report.laws.count("strict_associativity"));
  }
}
