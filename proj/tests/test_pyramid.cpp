#include <doctest.h>

#include "helpers.hpp"
#include "pyracat/pyramid/homotopy.hpp"
#include "pyracat/pyramid/json_io.hpp"
#include "pyracat/pyramid/random.hpp"
#include "pyracat/pyramid/total_tensor.hpp"

using namespace pyracat;
using testing::rows;

namespace {

const MatCat cat;

Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

IndexVector concat(const IndexVector& b, std::size_t n, const IndexVector& c) {
  auto dense = b.to_dense();
  dense.resize(n, 0);
  for (auto x : c.to_dense()) dense.push_back(x);
  return IndexVector::from_dense(dense);
}

/// Tensor of MatCat pyramids written out from the index formula.
Pyramid<MatCat> tensor_oracle(const Pyramid<MatCat>& p, const Pyramid<MatCat>& q) {
  Pyramid<MatCat> z;
  z.width = p.width + q.width;
  for (const auto& [b, x] : p.cells)
    for (const auto& [c, y] : q.cells) z.cells[concat(b, p.width, c)] = x * y;
  for (const auto& [key, d] : p.diffs)
    for (const auto& [c, y] : q.cells) z.diffs[{concat(key.first, p.width, c), key.second}] = naive_kron(d, Matrix::identity(y));
  for (const auto& [key, d] : q.diffs)
    for (const auto& [b, x] : p.cells) {
      Matrix m = naive_kron(Matrix::identity(x), d);
      if (b.height() % 2 != 0) m = -m;
      z.diffs[{concat(b, p.width, key.first), static_cast<int>(p.width) + key.second}] = m;
    }
  std::erase_if(z.diffs, [](const auto& kv) { return kv.second.is_zero(); });
  return z;
}

Pyramid<MatCat> two_term(std::size_t a, std::size_t b, const Matrix& f) {
  Complex<MatCat> c;
  c.objects = {{0, a}, {1, b}};
  c.diffs = {{0, f}};
  return include_complex(cat, c);
}

}  // namespace

TEST_SUITE("pyramid") {
  TEST_CASE("axiom checker") {
    CHECK(check_axioms(cat, embed_object(cat, std::size_t{3})).empty());
    CHECK(check_axioms(cat, testing::square()).empty());
    const auto bad = check_axioms(cat, testing::square(1, 1, 1, true));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].axiom == "IV");
    CHECK(bad[0].at == IndexVector{});

    Pyramid<MatCat> wide;
    wide.width = 1;
    wide.cells.emplace(IndexVector{0, 1}, 1);
    CHECK(check_axioms(cat, wide).at(0).axiom == "I");

    Pyramid<MatCat> loop;
    loop.width = 1;
    loop.cells = {{IndexVector{}, 1}, {IndexVector{1}, 1}, {IndexVector{2}, 1}};
    loop.diffs = {{{IndexVector{}, 1}, rows({{1}})}, {{IndexVector{1}, 1}, rows({{1}})}};
    CHECK(check_axioms(cat, loop).at(0).axiom == "III");
  }

  TEST_CASE("d matrices") {
    CHECK(d_matrix(embed_object(cat, std::size_t{2}), 0).entries.empty());
    const auto p = two_term(2, 1, rows({{1, -1}}));
    const auto d0 = d_matrix(p, 0);
    CHECK(d0.entries.size() == 1);
    CHECK(d0.entries.at({IndexVector{1}, IndexVector{}}) == rows({{1, -1}}));
    const auto sq = d_matrix(testing::square(2, 1, 3), 1);
    CHECK(sq.rows == std::vector<IndexVector>{IndexVector{1, 1}});
    CHECK(sq.cols == std::vector<IndexVector>{IndexVector{0, 1}, IndexVector{1}});
    CHECK(sq.entries.at({IndexVector{1, 1}, IndexVector{1}}) == rows({{3}}));
    CHECK(sq.entries.at({IndexVector{1, 1}, IndexVector{0, 1}}) == rows({{-6}}));
  }

  TEST_CASE("morphisms") {
    const auto p = testing::square();
    const auto id = identity_map(cat, p);
    CHECK(is_morphism(cat, id));
    CHECK(compose(id, id) == id);
    CHECK(identity_map(cat, Pyramid<MatCat>{}).entries.empty());

    auto broken = id;
    broken.entries.at({IndexVector{1}, IndexVector{1}}) = rows({{2}});
    CHECK_FALSE(is_morphism(cat, broken));

    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
      const auto x = random_width1(rng), y = random_width1(rng), z = random_width1(rng);
      const auto f = random_chain_map(cat, x, y, rng);
      const auto g = random_chain_map(cat, y, z, rng);
      const auto f2 = random_chain_map(cat, x, y, rng);
      CHECK(is_morphism(cat, f));
      CHECK(compose(identity_map(cat, y), f) == f);
      CHECK(compose(f, identity_map(cat, x)) == f);
      CHECK(add_morphisms(f, negate(f)).entries.empty());
      CHECK(add_morphisms(zero_map(x, y), f) == f);
      CHECK(compose(g, add_morphisms(f, f2)) == add_morphisms(compose(g, f), compose(g, f2)));
      // Totalization is a functor.
      const auto tg = totalize_morphism(cat, g), tf = totalize_morphism(cat, f);
      auto expected = ComplexMorphism{};
      for (const auto& [k, m] : tf)
        if (tg.count(k)) expected[k] = tg.at(k) * m;
      std::erase_if(expected, [](const auto& kv) { return kv.second.is_zero(); });
      CHECK(totalize_morphism(cat, compose(g, f)) == expected);
    }
  }

  TEST_CASE("totalizing a square") {
    const auto p = testing::square(2, 1, 3);
    const auto t = totalize(cat, p);
    Complex<MatCat> expect;
    expect.objects = {{0, 1}, {1, 2}, {2, 1}};
    // Height-1 cells in lexicographic order: (0,1) then (1,0).
    expect.diffs = {{0, rows({{1}, {2}})}, {1, rows({{-6, 3}})}};
    CHECK(t == expect);
    CHECK(is_complex(cat, t));
    CHECK(totalize(cat, embed_object(cat, std::size_t{4})).objects == std::map<std::int64_t, std::size_t>{{0, 4}});
  }

  TEST_CASE("complexes and inclusion") {
    CHECK(include_complex(cat, Complex<MatCat>{}).cells.empty());
    const auto c = testing::cone(2);
    const auto p = include_complex(cat, c);
    CHECK(p.width == 1);
    CHECK(p.cells.size() == 2);
    CHECK(p.cells.count(IndexVector{-1}));
    CHECK(totalize(cat, p) == c);
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
      const auto r = random_complex(rng);
      CHECK(is_complex(cat, r));
      CHECK(totalize(cat, include_complex(cat, r)) == r);
    }
  }

  TEST_CASE("canonical unit round-trips") {
    for (const auto& p : {embed_object(cat, std::size_t{2}), testing::square(1, 1, 2)}) {
      const auto [u, v] = canonical_unit(cat, p);
      CHECK(is_morphism(cat, u));
      CHECK(is_morphism(cat, v));
      CHECK(compose(v, u) == identity_map(cat, p));
      CHECK(compose(u, v) == identity_map(cat, *u.target));
    }
    const auto [u, v] = canonical_unit(cat, embed_object(cat, std::size_t{2}));
    CHECK(u.entries.begin()->second == Matrix::identity(2));
  }

  TEST_CASE("direct sums") {
    const auto p = testing::square(1, 1, 2);
    const auto q = two_term(2, 1, rows({{1, 1}}));
    CHECK(direct_sum(cat, {p, Pyramid<MatCat>{}}).sum == p);
    const auto s = direct_sum(cat, {p, q});
    CHECK(s.sum.width == 2);
    CHECK(check_axioms(cat, s.sum).empty());
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(is_morphism(cat, s.injections[i]));
      CHECK(compose(s.projections[i], s.injections[i]) == identity_map(cat, i ? q : p));
    }
    CHECK(compose(s.projections[1], s.injections[0]).entries.empty());
    CHECK(add_morphisms(compose(s.injections[0], s.projections[0]), compose(s.injections[1], s.projections[1])) ==
          identity_map(cat, s.sum));
    const auto ts = totalize(cat, s.sum), tp = totalize(cat, p), tq = totalize(cat, q);
    for (const auto& [k, x] : ts.objects)
      CHECK(x == (tp.objects.count(k) ? tp.objects.at(k) : 0) + (tq.objects.count(k) ? tq.objects.at(k) : 0));
  }

  TEST_CASE("tensor matches the index formula") {
    const auto x = two_term(2, 1, rows({{1, -1}}));
    const auto y = include_complex(cat, testing::cone(1));
    const auto z = tensor(cat, x, y);
    CHECK(z.width == 2);
    CHECK(z == tensor_oracle(x, y));
    // Cell (1, -1) has ht(pi_1) = 1, so its second-leg differential is negated.
    CHECK(*z.diff(IndexVector{1, -1}, 2) == rows({{-1}}));
    CHECK(check_axioms(cat, z).empty());

    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
      const auto a = random_pyramid(rng), b = random_pyramid(rng);
      const auto ab = tensor(cat, a, b);
      CHECK(ab == tensor_oracle(a, b));
      CHECK(check_axioms(cat, ab).empty());
    }
  }

  TEST_CASE("unit laws") {
    const auto u = unit_pyramid(cat);
    CHECK(tensor(cat, u, u) == u);
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
      const auto p = random_pyramid(rng);
      CHECK(tensor(cat, u, p) == p);
      CHECK(tensor(cat, p, u) == p);
    }
  }

  TEST_CASE("tensor of morphisms") {
    Rng rng(21);
    for (int t = 0; t < 15; ++t) {
      const auto x = random_width1(rng), x2 = random_width1(rng), x3 = random_width1(rng);
      const auto y = random_width1(rng), y2 = random_width1(rng), y3 = random_width1(rng);
      CHECK(tensor_morphisms(cat, identity_map(cat, x), identity_map(cat, y)) == identity_map(cat, tensor(cat, x, y)));
      const auto a = random_chain_map(cat, x, x2, rng), a2 = random_chain_map(cat, x2, x3, rng);
      const auto b = random_chain_map(cat, y, y2, rng), b2 = random_chain_map(cat, y2, y3, rng);
      const auto ab = tensor_morphisms(cat, a, b);
      CHECK(is_morphism(cat, ab));
      CHECK(tensor_morphisms(cat, compose(a2, a), compose(b2, b)) == compose(tensor_morphisms(cat, a2, b2), ab));
      const SelfAction<MatCat> act(cat);
      CHECK(compose(act_left_identity(act, x2, b), act_right_identity(act, a, y)) == ab);
    }
  }

  TEST_CASE("action is strict") {
    const SelfAction<MatCat> act(cat);
    Rng rng(33);
    for (int t = 0; t < 30; ++t) {
      const auto p = random_pyramid(rng, 1), p2 = random_pyramid(rng, 1), y = random_pyramid(rng);
      CHECK(pyracat::act(act, unit_pyramid(cat), y) == y);
      CHECK(pyracat::act(act, tensor(cat, p, p2), y) == pyracat::act(act, p, pyracat::act(act, p2, y)));
    }
  }

  TEST_CASE("total tensor comparison") {
    Rng rng(44);
    for (int t = 0; t < 25; ++t) {
      const auto x = random_pyramid(rng), y = random_pyramid(rng);
      const auto lhs = totalize(cat, tensor(cat, x, y));
      const auto rhs = total_tensor_complex(totalize(cat, x), totalize(cat, y));
      CHECK(is_complex(cat, rhs));
      CHECK(is_chain_isomorphism(lhs, rhs, total_tensor_iso(x, y)));
    }
    // A permutation that is not a chain map is rejected.
    const auto sq = testing::square(1, 1, 2);
    const auto x = two_term(1, 1, rows({{1}}));
    auto iso = total_tensor_iso(x, sq);
    const auto lhs = totalize(cat, tensor(cat, x, sq));
    const auto rhs = total_tensor_complex(totalize(cat, x), totalize(cat, sq));
    CHECK(is_chain_isomorphism(lhs, rhs, iso));
    iso.at(1) = iso.at(1).scaled(2);
    CHECK_FALSE(is_chain_isomorphism(lhs, rhs, iso));
  }

  TEST_CASE("json round trip") {
    const auto p = tensor(cat, testing::square(1, 1, 2), two_term(1, 2, rows({{1}, {-1}})));
    CHECK(pyramid_from_json(pyramid_to_json(p)) == p);
    const auto c = testing::cone(3);
    CHECK(complex_from_json(complex_to_json(c)) == c);
    CHECK_THROWS_AS(pyramid_from_json(nlohmann::json::parse(R"({"width": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(pyramid_from_json(nlohmann::json::parse(
                        R"({"width": 1, "cells": [{"index": [0], "object": 1}],
                            "diffs": [{"at": [0], "dir": 1, "mor": [[1]]}]})")),
                    std::invalid_argument);
  }

  TEST_CASE("random pyramids stay within bounds") {
    Rng rng(55);
    for (int t = 0; t < 200; ++t) {
      const auto p = random_pyramid(rng);
      CHECK(p.width <= 2);
      CHECK(p.cells.size() <= 6);
      CHECK(check_axioms(cat, p).empty());
    }
  }
}
