#include "pyracat/algmod/modules.hpp"

#include <stdexcept>

#include "pyracat/exactla/echelon.hpp"
#include "pyracat/exactla/quotient.hpp"
#include "pyracat/util/rng.hpp"

namespace pyracat {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vector& a, std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (sgn(a[i]) != 0) m += mats[i].scaled(a[i]);
  return m;
}

std::vector<Matrix> restrict_all(const QuotientSpace& q, const std::vector<Matrix>& ops) {
  std::vector<Matrix> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(q.induced(op));
  return out;
}

std::vector<Matrix> transposed(const std::vector<Matrix>& ops) {
  std::vector<Matrix> out;
  for (const auto& op : ops) out.push_back(op.transpose());
  return out;
}

}  // namespace

Matrix LeftModule::action(const Vector& a) const { return combine(act, a, dim); }
Matrix RightModule::action(const Vector& a) const { return combine(act, a, dim); }
Matrix Bimodule::left_action(const Vector& a) const { return combine(left, a, dim); }
Matrix Bimodule::right_action(const Vector& a) const { return combine(right, a, dim); }

Bimodule zero_bimodule(const Algebra& a) {
  return {0, std::vector<Matrix>(a.dim(), Matrix(0, 0)), std::vector<Matrix>(a.dim(), Matrix(0, 0))};
}

bool is_left_module(const Algebra& a, const LeftModule& m) {
  if (m.act.size() != a.dim()) return false;
  if (m.action(a.unit) != Matrix::identity(m.dim)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.act[i] * m.act[j] != m.action(a.multiply(a.basis_vector(i), a.basis_vector(j)))) return false;
  return true;
}

bool is_right_module(const Algebra& a, const RightModule& m) {
  if (m.act.size() != a.dim()) return false;
  if (m.action(a.unit) != Matrix::identity(m.dim)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.act[j] * m.act[i] != m.action(a.multiply(a.basis_vector(i), a.basis_vector(j)))) return false;
  return true;
}

bool is_bimodule(const Algebra& a, const Bimodule& m) {
  if (!is_left_module(a, restrict_left(m)) || !is_right_module(a, restrict_right(m))) return false;
  for (const auto& l : m.left)
    for (const auto& r : m.right)
      if (l * r != r * l) return false;
  return true;
}

LeftModule left_regular(const Algebra& a) { return {a.dim(), a.left_mult}; }
RightModule right_regular(const Algebra& a) { return {a.dim(), a.right_mult()}; }
Bimodule regular(const Algebra& a) { return {a.dim(), a.left_mult, a.right_mult()}; }

LeftModule left_projective(const Algebra& a, std::size_t i) {
  const auto q = QuotientSpace::subspace(a.right_matrix(a.idempotents.at(i)));
  return {q.dim(), restrict_all(q, a.left_mult)};
}

RightModule right_projective(const Algebra& a, std::size_t j) {
  const auto q = QuotientSpace::subspace(a.left_matrix(a.idempotents.at(j)));
  return {q.dim(), restrict_all(q, a.right_mult())};
}

LeftModule dual(const RightModule& n) { return {n.dim, transposed(n.act)}; }
RightModule dual(const LeftModule& m) { return {m.dim, transposed(m.act)}; }
Bimodule dual(const Bimodule& m) { return {m.dim, transposed(m.right), transposed(m.left)}; }

Bimodule tensor_k(const LeftModule& m, const RightModule& n) {
  Bimodule out{m.dim * n.dim, {}, {}};
  const Matrix im = Matrix::identity(m.dim);
  const Matrix in = Matrix::identity(n.dim);
  for (const auto& l : m.act) out.left.push_back(kronecker(l, in));
  for (const auto& r : n.act) out.right.push_back(kronecker(im, r));
  return out;
}

LeftModule restrict_left(const Bimodule& m) { return {m.dim, m.left}; }
RightModule restrict_right(const Bimodule& m) { return {m.dim, m.right}; }

Bimodule bimodule_f(const Algebra& a) { return tensor_k(left_regular(a), right_regular(a)); }
Bimodule bimodule_g(const Algebra& a) { return tensor_k(dual(right_regular(a)), right_regular(a)); }
Bimodule bimodule_p(const Algebra& a, std::size_t i, std::size_t j) {
  return tensor_k(left_projective(a, i), right_projective(a, j));
}
Bimodule bimodule_q(const Algebra& a, std::size_t i, std::size_t j) {
  return tensor_k(dual(right_projective(a, i)), right_projective(a, j));
}

std::vector<Matrix> intertwiners(std::size_t a_dim, std::size_t b_dim,
                                 const std::vector<std::pair<Matrix, Matrix>>& pairs) {
  // Unknown T(r, c) is variable r * a_dim + c; equation (r, c) of
  // T A - B T = 0 reads sum_k T(r,k) A(k,c) - sum_k B(r,k) T(k,c).
  LinearSystem sys(a_dim * b_dim);
  for (const auto& [am, bm] : pairs)
    for (std::size_t r = 0; r < b_dim; ++r)
      for (std::size_t c = 0; c < a_dim; ++c) {
        std::map<std::size_t, Scalar> eq;
        for (std::size_t k = 0; k < a_dim; ++k)
          if (sgn(am(k, c)) != 0) eq[r * a_dim + k] += am(k, c);
        for (std::size_t k = 0; k < b_dim; ++k)
          if (sgn(bm(r, k)) != 0) eq[k * a_dim + c] -= bm(r, k);
        std::erase_if(eq, [](const auto& kv) { return sgn(kv.second) == 0; });
        if (!eq.empty()) sys.add_equation(eq);
      }
  std::vector<Matrix> out;
  for (const auto& v : sys.nullspace()) {
    Matrix t(b_dim, a_dim);
    for (std::size_t r = 0; r < b_dim; ++r)
      for (std::size_t c = 0; c < a_dim; ++c) t(r, c) = v[r * a_dim + c];
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Matrix> hom_left(const LeftModule& m, const LeftModule& n) {
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < m.act.size(); ++i) pairs.emplace_back(m.act[i], n.act[i]);
  return intertwiners(m.dim, n.dim, pairs);
}

std::vector<Matrix> hom_right(const RightModule& m, const RightModule& n) {
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < m.act.size(); ++i) pairs.emplace_back(m.act[i], n.act[i]);
  return intertwiners(m.dim, n.dim, pairs);
}

std::vector<Matrix> hom_bimodules(const Bimodule& m, const Bimodule& n) {
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t i = 0; i < m.left.size(); ++i) pairs.emplace_back(m.left[i], n.left[i]);
  for (std::size_t i = 0; i < m.right.size(); ++i) pairs.emplace_back(m.right[i], n.right[i]);
  return intertwiners(m.dim, n.dim, pairs);
}

std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis, std::size_t dim, std::uint64_t seed) {
  if (dim == 0) return Matrix(0, 0);
  if (basis.empty()) return std::nullopt;
  auto try_combo = [&](const std::vector<long>& coeffs) -> std::optional<Matrix> {
    Matrix m(dim, dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) m += basis[k].scaled(Scalar(coeffs[k]));
    if (rank(m) == dim) return m;
    return std::nullopt;
  };
  const std::size_t n = basis.size();
  // Fixed patterns: all ones, alternating signs, 1..n, single elements.
  std::vector<std::vector<long>> patterns;
  patterns.emplace_back(n, 1);
  std::vector<long> alt(n), ramp(n);
  for (std::size_t k = 0; k < n; ++k) {
    alt[k] = k % 2 == 0 ? 1 : -1;
    ramp[k] = static_cast<long>(k) + 1;
  }
  patterns.push_back(alt);
  patterns.push_back(ramp);
  for (std::size_t k = 0; k < n && k < 8; ++k) {
    std::vector<long> e(n);
    e[k] = 1;
    patterns.push_back(std::move(e));
  }
  for (const auto& p : patterns)
    if (auto m = try_combo(p)) return m;
  Rng rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<long> c(n);
    for (auto& x : c) x = static_cast<long>(rng.uniform(-3, 3));
    if (auto m = try_combo(c)) return m;
  }
  return std::nullopt;
}

std::optional<Matrix> find_isomorphism(const Bimodule& m, const Bimodule& n) {
  if (m.dim != n.dim) return std::nullopt;
  return find_invertible(hom_bimodules(m, n), m.dim);
}

std::optional<Matrix> find_isomorphism(const LeftModule& m, const LeftModule& n) {
  if (m.dim != n.dim) return std::nullopt;
  return find_invertible(hom_left(m, n), m.dim);
}

}  // namespace pyracat
