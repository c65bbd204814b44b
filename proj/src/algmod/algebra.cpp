#include "pyracat/algmod/algebra.hpp"

#include <stdexcept>

namespace pyracat {

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v[i] = 1;
  return v;
}

Matrix Algebra::left_matrix(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) m += left_mult[i].scaled(x[i]);
  return m;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const { return left_matrix(x) * y; }

Matrix Algebra::right_matrix(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vector col = left_matrix(basis_vector(j)) * x;
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

std::vector<Matrix> Algebra::right_mult() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(right_matrix(basis_vector(i)));
  return out;
}

Algebra algebra_from_structure_constants(std::string name, std::vector<std::string> basis, Vector unit,
                                         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& mul,
                                         std::vector<Vector> idempotents) {
  const std::size_t n = basis.size();
  if (unit.size() != n) throw std::invalid_argument("unit has wrong length");
  for (const auto& e : idempotents)
    if (e.size() != n) throw std::invalid_argument("idempotent has wrong length");
  Algebra a{std::move(name), std::move(basis), std::move(unit), std::vector<Matrix>(n, Matrix(n, n)),
            std::move(idempotents)};
  for (const auto& [i, j, k, c] : mul) {
    if (i >= n || j >= n || k >= n) throw std::invalid_argument("structure constant index out of range");
    a.left_mult[i](k, j) += c;
  }
  return a;
}

Algebra truncated_polynomial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncated_polynomial: n must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mul;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) mul.emplace_back(i, j, i + j, 1);
  Vector one(n);
  one[0] = 1;
  return algebra_from_structure_constants("k[x]/x^" + std::to_string(n), labels, one, mul, {one});
}

Algebra path_algebra_an(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_algebra_an: n must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> paths;  // (i, j), 1-based, j <= i
  for (std::size_t i = 1; i <= n; ++i) paths.emplace_back(i, i);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j < i; ++j) paths.emplace_back(i, j);
  std::vector<std::string> labels;
  for (const auto& [i, j] : paths)
    labels.push_back(i == j ? "e" + std::to_string(i) : "p" + std::to_string(i) + std::to_string(j));
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < paths.size(); ++k)
      if (paths[k] == std::pair{i, j}) return k;
    throw std::logic_error("missing path");
  };
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mul;
  for (std::size_t x = 0; x < paths.size(); ++x)
    for (std::size_t y = 0; y < paths.size(); ++y)
      if (paths[x].second == paths[y].first) mul.emplace_back(x, y, index_of(paths[x].first, paths[y].second), 1);
  const std::size_t d = paths.size();
  Vector one(d);
  std::vector<Vector> idem;
  for (std::size_t i = 0; i < n; ++i) {
    one[i] = 1;
    Vector e(d);
    e[i] = 1;
    idem.push_back(std::move(e));
  }
  return algebra_from_structure_constants("A" + std::to_string(n) + " path algebra", labels, one, mul, idem);
}

Algebra semisimple_algebra(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mul;
  Vector one(n);
  std::vector<Vector> idem;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    mul.emplace_back(i, i, i, 1);
    one[i] = 1;
    Vector e(n);
    e[i] = 1;
    idem.push_back(std::move(e));
  }
  return algebra_from_structure_constants("Q^" + std::to_string(n), labels, one, mul, idem);
}

Matrix radical_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  // Gram matrix of the trace form tr(L_{x_i x_j}).
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix l = a.left_matrix(a.multiply(a.basis_vector(i), a.basis_vector(j)));
      Scalar tr = 0;
      for (std::size_t k = 0; k < n; ++k) tr += l(k, k);
      gram(i, j) = tr;
    }
  return Matrix::from_columns(n, nullspace(gram));
}

namespace {

std::size_t span_dim(std::size_t n, const std::vector<Vector>& vs) {
  return vs.empty() ? 0 : rank(Matrix::from_columns(n, vs));
}

}  // namespace

std::vector<std::vector<std::size_t>> cartan_matrix(const Algebra& a) {
  const std::size_t m = a.num_idempotents();
  std::vector<std::vector<std::size_t>> c(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix sandwich = a.left_matrix(a.idempotents[i]) * a.right_matrix(a.idempotents[j]);
      c[i][j] = rank(sandwich);
    }
  return c;
}

AlgebraReport validate(const Algebra& a) {
  AlgebraReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.problems.push_back(std::move(msg));
  };
  const std::size_t n = a.dim();
  if (a.left_mult.size() != n || a.unit.size() != n) {
    fail("shape mismatch between basis, unit and structure constants");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = a.multiply(xy, a.basis_vector(k));
        const Vector rhs = a.multiply(a.basis_vector(i), a.multiply(a.basis_vector(j), a.basis_vector(k)));
        if (lhs != rhs) {
          fail("associativity fails on (" + a.basis[i] + ", " + a.basis[j] + ", " + a.basis[k] + ")");
          return r;
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = a.basis_vector(i);
    if (a.multiply(a.unit, x) != x || a.multiply(x, a.unit) != x) fail("unit law fails on " + a.basis[i]);
  }
  if (a.idempotents.empty()) fail("no idempotents given");
  Vector sum(n);
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
    const auto& e = a.idempotents[i];
    for (std::size_t k = 0; k < n; ++k) sum[k] += e[k];
    if (a.multiply(e, e) != e) fail("idempotent " + std::to_string(i + 1) + " is not idempotent");
    for (std::size_t j = 0; j < a.idempotents.size(); ++j)
      if (i != j && a.multiply(e, a.idempotents[j]) != Vector(n))
        fail("idempotents " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not orthogonal");
  }
  if (sum != a.unit) fail("idempotents do not sum to the unit");
  if (!r.valid) return r;

  const Matrix rad = radical_basis(a);
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
    const Matrix sandwich = a.left_matrix(a.idempotents[i]) * a.right_matrix(a.idempotents[i]);
    std::vector<Vector> erad;
    for (std::size_t c = 0; c < rad.cols(); ++c) erad.push_back(sandwich * rad.col(c));
    if (rank(sandwich) - span_dim(n, erad) != 1)
      fail("idempotent " + std::to_string(i + 1) + " is not primitive");
  }
  return r;
}

}  // namespace pyracat
