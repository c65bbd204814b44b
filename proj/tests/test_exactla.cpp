#include <doctest.h>

#include "pyracat/exactla/echelon.hpp"
#include "pyracat/exactla/kernels.hpp"
#include "pyracat/exactla/quotient.hpp"
#include "pyracat/util/rng.hpp"

using namespace pyracat;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix random_rational(std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Scalar x(mpz_class(rng.uniform(-4, 4)), mpz_class(rng.uniform(1, 3)));
      x.canonicalize();
      m(i, j) = x;
    }
  return m;
}

/// Low-rank random matrix: product of r x k and k x c factors.
Matrix random_low_rank(std::size_t r, std::size_t c, std::size_t k, Rng& rng) {
  return random_rational(r, k, rng) * random_rational(k, c, rng);
}

Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

/// Entry formula (A (x) B)(i p + k, j q + l) = A(i, j) B(k, l), B of size p x q.
Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST_SUITE("exactla") {
  TEST_CASE("rref and rank") {
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix::identity(5)) == 5);
    CHECK(rank(Matrix(0, 0)) == 0);
    const auto r = rref(from_rows({{0, 2, 4}, {1, 1, 1}}));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == from_rows({{1, 0, -1}, {0, 1, 2}}));
  }

  TEST_CASE("solve") {
    const Vector b{Scalar(3), Scalar(-1, 2)};
    CHECK(solve(Matrix::identity(2), b) == b);
    CHECK_FALSE(solve(Matrix(2, 2), b).has_value());
    CHECK(solve(from_rows({{1, 1}}), Vector{Scalar(2)}) == Vector{Scalar(2), Scalar(0)});
    CHECK_THROWS_AS(solve(Matrix::identity(3), b), std::invalid_argument);
  }

  TEST_CASE("nullspace") {
    CHECK(nullspace(from_rows({{2, 1}, {1, 1}})).empty());
    const auto z = nullspace(Matrix(2, 3));
    REQUIRE(z.size() == 3);
    CHECK(z[1] == Vector{0, 1, 0});
    CHECK(nullspace(from_rows({{1, 2}})) == std::vector<Vector>{Vector{-2, 1}});
  }

  TEST_CASE("inverse") {
    const Matrix a = from_rows({{1, 0, 1}, {1, 1, 0}, {0, 0, 1}});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(3));
    CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());
  }

  TEST_CASE("kronecker") {
    CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_rational(2, 2, rng), b = random_rational(2, 2, rng), c = random_rational(2, 2, rng);
      CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
      CHECK(kronecker(a, Matrix::identity(1)) == a);
      CHECK(kronecker(a, b) == naive_kron(a, b));
    }
    const Matrix r = random_rational(2, 3, rng), s = random_rational(3, 1, rng);
    CHECK(kronecker(r, s) == naive_kron(r, s));
  }

  TEST_CASE("rank properties on random matrices") {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
      const auto k = static_cast<std::size_t>(rng.uniform(1, 6));
      const Matrix a = random_low_rank(6, 6, k, rng);
      const Matrix b = random_rational(6, 6, rng);
      CHECK(rank(a) == rank(a.transpose()));
      CHECK(rank(a) <= k);
      CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
      for (const auto& v : nullspace(a)) CHECK((a * v) == Vector(6));
      CHECK(nullspace(a).size() + rank(a) == 6);
    }
  }

  TEST_CASE("sparse system agrees with dense solve") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
      const Matrix a = random_low_rank(5, 7, static_cast<std::size_t>(rng.uniform(1, 5)), rng);
      Vector b(5);
      for (auto& x : b) x = rng.uniform(-3, 3);
      if (rng.coin()) b = a * random_rational(7, 1, rng).col(0);
      LinearSystem sys(7);
      for (std::size_t i = 0; i < 5; ++i) {
        std::map<std::size_t, Scalar> row;
        for (std::size_t j = 0; j < 7; ++j)
          if (sgn(a(i, j)) != 0) row[j] = a(i, j);
        sys.add_equation(row, b[i]);
      }
      const auto dense = solve(a, b);
      const auto sparse = sys.solve();
      REQUIRE(dense.has_value() == sparse.has_value());
      if (sparse) CHECK(a * *sparse == b);
      CHECK(sys.rank() == rank(a));
      CHECK(sys.nullspace().size() == 7 - rank(a));
    }
  }

  TEST_CASE("quotient space") {
    // Q^3 / span(e1 + e2): dimension 2, e1 and -e2 identified.
    Matrix w(3, 1);
    w(0, 0) = 1;
    w(1, 0) = 1;
    const QuotientSpace q(3, std::nullopt, w);
    CHECK(q.dim() == 2);
    CHECK(q.sub_dim() == 1);
    CHECK(q.projection() * w == Matrix(2, 1));
    CHECK(q.projection() * q.section() == Matrix::identity(2));
    const Vector e1{1, 0, 0}, e2{0, 1, 0};
    Vector sum = q.coords(e1);
    const Vector c2 = q.coords(e2);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c2[i];
    CHECK(sum == Vector(2));
  }

  TEST_CASE("parallel kernels match serial references") {
    Rng rng(31);
    for (std::size_t n : {1u, 7u, 40u}) {
      const Matrix a = random_rational(n, n + 3, rng);
      const Matrix b = random_rational(n + 3, n, rng);
      const Matrix ref = kernels::matmul_serial(a, b);
      CHECK(ref == naive_product(a, b));
      CHECK(kernels::matmul_parallel(a, b) == ref);
      CHECK(kernels::matmul(a, b) == ref);
      CHECK(kernels::kron_parallel(a, b) == kernels::kron_serial(a, b));
      const Matrix low = random_low_rank(n + 2, n, std::max<std::size_t>(1, n / 2), rng);
      const auto rs = kernels::rref_serial(low);
      const auto rp = kernels::rref_parallel(low);
      CHECK(rs.reduced == rp.reduced);
      CHECK(rs.pivots == rp.pivots);
      CHECK(rs.rank == rank(low));
    }
    Matrix m = random_rational(9, 5, rng);
    m(3, 2) = 1;
    Matrix m2 = m;
    kernels::eliminate_column_serial(m, 3, 2);
    kernels::eliminate_column_parallel(m2, 3, 2);
    CHECK(m == m2);
    for (std::size_t i = 0; i < 9; ++i)
      if (i != 3) CHECK(sgn(m(i, 2)) == 0);
  }
}
