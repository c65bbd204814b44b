#include <doctest.h>

#include <numeric>

#include "pyracat/cells/cell_structure.hpp"
#include "pyracat/cells/multiplicity.hpp"
#include "pyracat/cells/representation.hpp"
#include "pyracat/cells/table.hpp"
#include "pyracat/util/rng.hpp"
#include "helpers.hpp"

using namespace pyracat;
using testing::rows;

namespace {

std::size_t cartan_sum(const CartanMatrix& c) {
  std::size_t s = 0;
  for (const auto& r : c) s = std::accumulate(r.begin(), r.end(), s);
  return s;
}

/// Left reachability straight from the products: s >=_L t iff some chain
/// t -> u1 o t -> u2 o u1 o t ... reaches a combination containing s.
std::vector<std::vector<bool>> left_reach(const CompositionTable& t) {
  const std::size_t n = t.symbols.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> stack{k};
    r[k][k] = true;
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      for (const auto& u : t.symbols)
        for (const auto& [s, m] : t.compose(u, t.symbols[cur])) {
          const auto pos = static_cast<std::size_t>(std::find(t.symbols.begin(), t.symbols.end(), s) - t.symbols.begin());
          if (!r[pos][k]) {
            r[pos][k] = true;
            stack.push_back(pos);
          }
        }
    }
  }
  return r;
}

/// Positive-entry X with X^2 = d X, counted with machine integers.
struct NaiveCensus {
  std::size_t solutions = 0;
  std::int64_t max_d = 0;
};
NaiveCensus naive_census(std::size_t max_size, std::int64_t max_entry) {
  NaiveCensus out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::int64_t> x(n * n, 1);
    while (true) {
      std::vector<std::int64_t> sq(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) sq[i * n + j] += x[i * n + k] * x[k * n + j];
      const std::int64_t d = sq[0] / x[0];
      bool ok = sq[0] % x[0] == 0;
      for (std::size_t e = 0; ok && e < n * n; ++e) ok = sq[e] == d * x[e];
      if (ok) {
        ++out.solutions;
        out.max_d = std::max(out.max_d, d);
      }
      std::size_t e = 0;
      while (e < n * n && x[e] == max_entry) x[e++] = 1;
      if (e == n * n) break;
      ++x[e];
    }
  }
  return out;
}

Matrix col(const Vector& v) { return Matrix::from_columns(v.size(), {v}); }

}  // namespace

TEST_SUITE("cells") {
  TEST_CASE("aggregate multiplicity is the Cartan sum") {
    for (auto flavor : {Flavor::CA, Flavor::DA}) {
      CHECK(aggregate_multiplicity(build_table({{2}}, flavor)) == 2);
      CHECK(aggregate_multiplicity(build_table({{1, 0}, {1, 1}}, flavor)) == 3);
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto c = cartan_matrix(path_algebra_an(n));
        CHECK(aggregate_multiplicity(build_table(c, flavor)) == cartan_sum(c));
      }
    }
  }

  TEST_CASE("table basics") {
    const auto t = build_table({{2}}, Flavor::CA);
    const Symbol f{SymbolKind::F, 0, 0};
    CHECK(t.compose(f, f) == Combination{{f, 2}});
    CHECK(t.compose(Symbol{}, f) == Combination{{f, 1}});
    CHECK(t.symbols.size() == 2);
    CHECK(build_table({{1, 0}, {1, 1}}, Flavor::DA).symbols.size() == 9);
    CHECK_THROWS_AS(build_table({{1, 0}}, Flavor::CA), std::invalid_argument);
    CHECK_THROWS_AS(build_table({{0}}, Flavor::CA), std::invalid_argument);
    CHECK(f.name() == "F(1,1)");
  }

  TEST_CASE("associativity") {
    for (auto flavor : {Flavor::CA, Flavor::DA})
      for (const auto& c : std::vector<CartanMatrix>{{{2}}, {{1, 0}, {1, 1}}, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}})
        CHECK(associativity_failure(build_table(c, flavor)).empty());
    auto t = build_table({{1, 0}, {1, 1}}, Flavor::CA);
    const Symbol f11{SymbolKind::F, 0, 0};
    t.products[{f11, f11}] = Combination{{f11, 2}};
    CHECK_FALSE(associativity_failure(t).empty());
  }

  TEST_CASE("table agrees with bimodule tensors") {
    for (const Algebra& a : {truncated_polynomial(2), path_algebra_an(2)})
      for (auto flavor : {Flavor::CA, Flavor::DA}) {
        const auto r = check_table_coherence(a, build_table(cartan_matrix(a), flavor));
        CHECK(r.ok);
        const std::size_t n = a.num_idempotents();
        const std::size_t symbols = 1 + n * n * (flavor == Flavor::DA ? 2 : 1);
        CHECK(r.pairs == symbols * symbols);
      }
    const Algebra a2 = path_algebra_an(2);
    auto t = build_table(cartan_matrix(a2), Flavor::CA);
    const Symbol f21{SymbolKind::F, 1, 0};
    t.products[{f21, f21}] = Combination{{f21, 2}};
    const auto bad = check_table_coherence(a2, t);
    CHECK_FALSE(bad.ok);
    CHECK(bad.mismatches.size() == 1);
  }

  TEST_CASE("cells of C_A") {
    for (const auto& c : std::vector<CartanMatrix>{{{2}}, {{1, 0}, {1, 1}}}) {
      const auto s = cell_structure(build_table(c, Flavor::CA));
      REQUIRE(s.two_sided_cells.size() == 2);
      CHECK(s.two_sided_cells[0] == std::vector<std::size_t>{0});
      for (std::size_t k = 0; k < s.two_sided_cells.size(); ++k) CHECK(is_strongly_regular(s, k));
    }
  }

  TEST_CASE("left cells fix the second index") {
    for (auto flavor : {Flavor::CA, Flavor::DA})
      for (const auto& c : std::vector<CartanMatrix>{{{1, 0}, {1, 1}}, {{1, 0}, {0, 1}}, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}}) {
        const auto t = build_table(c, flavor);
        const auto s = cell_structure(t);
        CHECK(s.left_order == left_reach(t));
        CHECK(s.left_cells.size() == 1 + c.size());
        for (const auto& cell : s.left_cells) {
          if (t.symbols[cell[0]].kind == SymbolKind::Id) continue;
          CHECK(cell.size() == c.size() * (flavor == Flavor::DA ? 2 : 1));
          for (auto k : cell) CHECK(t.symbols[k].j == t.symbols[cell[0]].j);
        }
      }
  }

  TEST_CASE("apex") {
    const auto t = build_table({{1, 0}, {1, 1}}, Flavor::DA);
    const auto s = cell_structure(t);
    std::vector<bool> all(t.symbols.size(), true), only_id(t.symbols.size(), false), none(t.symbols.size(), false);
    only_id[0] = true;
    const auto top = apex(s, all);
    REQUIRE(top);
    CHECK(s.two_sided_cells[*top].size() == 8);
    CHECK(apex(s, only_id) == std::optional<std::size_t>{0});
    CHECK_FALSE(apex(s, none).has_value());
  }

  TEST_CASE("action matrices") {
    const auto kx = action_matrices(truncated_polynomial(2), Flavor::DA);
    REQUIRE(kx.ok);
    CHECK(kx.f == rows({{2}}));
    CHECK(kx.g == rows({{2}}));
    CHECK(kx.g_bracket == rows({{2}}));

    const auto a2 = action_matrices(path_algebra_an(2), Flavor::DA);
    REQUIRE(a2.ok);
    CHECK(a2.cartan == rows({{1, 0, 1}, {1, 1, 0}, {0, 0, 1}}));
    CHECK(a2.f == rows({{2, 1, 1}, {2, 1, 1}, {0, 0, 0}}));
    CHECK(a2.g == rows({{2, 1, 1}, {0, 0, 0}, {2, 1, 1}}));
    CHECK(a2.g_bracket == a2.f.transpose());

    const auto ca = action_matrices(path_algebra_an(2), Flavor::CA);
    REQUIRE(ca.ok);
    CHECK(ca.cartan == rows({{1, 0}, {1, 1}}));
    CHECK(ca.f == rows({{2, 1}, {2, 1}}));
    // [F] is the sum of the per-symbol matrices.
    Matrix sum(2, 2);
    for (const auto& [s, m] : ca.per_symbol)
      if (s.kind == SymbolKind::F) sum += m;
    CHECK(sum == ca.f);
  }

  TEST_CASE("rank one decomposition") {
    const auto r = rank_one_decompose(rows({{2, 4}, {1, 2}}));
    REQUIRE(r);
    CHECK(r->v == Vector{2, 1});
    CHECK(r->w == Vector{1, 2});
    CHECK_FALSE(rank_one_decompose(rows({{1, 0}, {0, 1}})).has_value());
    const auto z = rank_one_decompose(Matrix(2, 3));
    REQUIRE(z);
    CHECK(z->degenerate);

    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
      Vector v(n), w(m);
      for (auto& x : v) x = rng.uniform(0, 5);
      for (auto& x : w) x = rng.uniform(0, 5);
      v[0] += 1;
      w[m - 1] += 1;
      const Matrix h = col(v) * col(w).transpose();
      const auto d = rank_one_decompose(h);
      REQUIRE(d);
      CHECK_FALSE(d->degenerate);
      CHECK(col(d->v) * col(d->w).transpose() == h);
      mpz_class g = 0;
      for (const auto& x : d->w) g = gcd(g, mpz_class(x.get_num()));
      CHECK(g == 1);
    }
  }

  TEST_CASE("multiplicity vectors and identities") {
    const auto m = action_matrices(path_algebra_an(2), Flavor::DA);
    const auto v = mult_vectors(m, 3);
    REQUIRE(v);
    CHECK(v->a == Vector{1, 1, 0});
    CHECK(v->b == Vector{1, 1, 0});
    CHECK(v->a_prime == Vector{1, 0, 1});
    CHECK(v->b_prime == Vector{1, 1, 0});
    CHECK(col(v->a) * (col(v->b).transpose() * v->cartan) == m.f);
    const auto checks = verify_identities(*v);
    CHECK(checks.size() == 5);
    for (const auto& c : checks) CHECK_MESSAGE(c.holds, c.identity);

    auto broken = *v;
    broken.b = Vector{2, 1, 0};
    CHECK_FALSE(verify_identities(broken)[0].holds);

    const auto kv = mult_vectors(action_matrices(truncated_polynomial(2), Flavor::DA), 2);
    REQUIRE(kv);
    CHECK(kv->a == Vector{1});
    CHECK(kv->b == Vector{1});
    for (const auto& c : verify_identities(*kv)) CHECK(c.holds);
  }

  TEST_CASE("quasi-idempotent check") {
    const Matrix c = rows({{1, 0, 1}, {1, 1, 0}, {0, 0, 1}});
    const Matrix h = col(Vector{1, 1, 0}) * col(Vector{1, 1, 0}).transpose();
    const auto r = quasi_idempotent_check(h, c, 3);
    CHECK(r.equation_holds);
    CHECK(r.rank_h == 1);
    CHECK(r.ok);
    CHECK_FALSE(quasi_idempotent_check(rows({{1}}), rows({{1}}), 2).equation_holds);
    const auto id = quasi_idempotent_check(rows({{1, 0}, {0, 1}}), rows({{1, 0}, {0, 1}}), 1);
    CHECK(id.equation_holds);
    CHECK_FALSE(id.hc_positive);
    CHECK(id.ok);
  }

  TEST_CASE("census") {
    for (auto [n, e] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 3}, {3, 2}}) {
      const auto s = enumerate_quasi_idempotents_serial(n, e);
      const auto p = enumerate_quasi_idempotents_parallel(n, e);
      const auto o = naive_census(n, e);
      CHECK(s.solutions == o.solutions);
      CHECK(s.max_d == o.max_d);
      CHECK(p.solutions == s.solutions);
      CHECK(p.examined == s.examined);
      CHECK(p.max_d == s.max_d);
      CHECK(s.higher_rank.empty());
      CHECK(p.higher_rank.empty());
    }
  }
}
