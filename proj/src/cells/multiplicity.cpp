#include "pyracat/cells/multiplicity.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace pyracat {

namespace {

Matrix column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix scalar_matrix(const Scalar& s) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return m;
}

Scalar dot(const Vector& x, const Matrix& c, const Vector& y) {
  Scalar s = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) s += x[i] * c(i, j) * y[j];
  return s;
}

/// Positive multiple of v with coprime integer entries.
Vector primitive(const Vector& v) {
  mpz_class den = 1, num = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    den = lcm(den, mpz_class(x.get_den()));
  }
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * den;
    num = gcd(num, mpz_class(out[i].get_num()));
  }
  if (num != 0)
    for (auto& x : out) x /= num;
  return out;
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return v.size();
}

/// a with [X] = a (b^t C), given b.
std::optional<Vector> left_factor(const Matrix& x, const Vector& b, const Matrix& c) {
  Vector row(c.cols());
  for (std::size_t j = 0; j < c.cols(); ++j)
    for (std::size_t i = 0; i < c.rows(); ++i) row[j] += b[i] * c(i, j);
  const std::size_t j0 = first_nonzero(row);
  if (j0 == row.size()) return std::nullopt;
  Vector a(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) a[i] = x(i, j0) / row[j0];
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != a[i] * row[j]) return std::nullopt;
  return a;
}

/// b with b^t C proportional to the row factor of X.
std::optional<std::pair<Vector, Vector>> split(const Matrix& x, const Matrix& c) {
  const auto r = rank_one_decompose(x);
  if (!r || r->degenerate) return std::nullopt;
  const auto ct_inv = inverse(c.transpose());
  if (!ct_inv) return std::nullopt;
  Vector b = primitive(*ct_inv * r->w);
  if (const auto k = first_nonzero(b); k < b.size() && sgn(b[k]) < 0)
    for (auto& e : b) e = -e;
  auto a = left_factor(x, b, c);
  if (!a) return std::nullopt;
  return std::pair{std::move(*a), std::move(b)};
}

void census_one(std::size_t n, std::int64_t max_entry, std::uint64_t code, QuasiIdempotentCensus& out) {
  Matrix x(n, n);
  for (std::size_t k = 0; k < n * n; ++k) {
    x(k / n, k % n) = static_cast<long>(1 + static_cast<std::int64_t>(code % static_cast<std::uint64_t>(max_entry)));
    code /= static_cast<std::uint64_t>(max_entry);
  }
  ++out.examined;
  const Matrix sq = x * x;
  const Scalar d = sq(0, 0) / x(0, 0);
  if (!(sq == x.scaled(d))) return;
  ++out.solutions;
  out.max_d = std::max(out.max_d, static_cast<std::int64_t>(d.get_num().get_si()));
  if (rank(x) != 1) out.higher_rank.push_back(x);
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool matrix_less(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) return x.rows() < y.rows();
  return std::lexicographical_compare(x.data().begin(), x.data().end(), y.data().begin(), y.data().end());
}

}  // namespace

std::optional<RankOne> rank_one_decompose(const Matrix& h) {
  if (h.is_zero()) return RankOne{Vector(h.rows()), Vector(h.cols()), true};
  if (rank(h) != 1) return std::nullopt;
  std::size_t r0 = 0;
  while (h.row(r0).end() == std::find_if(h.row(r0).begin(), h.row(r0).end(), [](const Scalar& s) { return sgn(s) != 0; }))
    ++r0;
  RankOne out;
  out.w = primitive(Vector(h.row(r0).begin(), h.row(r0).end()));
  const std::size_t j0 = first_nonzero(out.w);
  out.v = Vector(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) out.v[i] = h(i, j0) / out.w[j0];
  if (sgn(out.v[first_nonzero(out.v)]) < 0) {
    for (auto& e : out.v) e = -e;
    for (auto& e : out.w) e = -e;
  }
  return out;
}

std::optional<MultVectors> mult_vectors(const ActionMatrices& m, const Scalar& d) {
  const auto f = split(m.f, m.cartan);
  const auto g = split(m.g, m.cartan);
  if (!f || !g) return std::nullopt;
  return MultVectors{f->first, f->second, g->first, g->second, m.cartan, d};
}

std::vector<IdentityCheck> verify_identities(const MultVectors& v) {
  const Matrix& c = v.cartan;
  std::vector<IdentityCheck> out;
  auto push = [&](std::string name, Matrix lhs, Matrix rhs) {
    const bool holds = lhs == rhs;
    out.push_back({std::move(name), std::move(lhs), std::move(rhs), holds});
  };
  const Scalar bca2 = dot(v.b, c, v.a_prime);
  const Scalar b2ca = dot(v.b_prime, c, v.a);
  push("d b = (b^t C a') b'", column(v.b).scaled(v.d), column(v.b_prime).scaled(bca2));
  push("d b' = (b'^t C a) b", column(v.b_prime).scaled(v.d), column(v.b).scaled(b2ca));
  push("C^t b a^t = C a' b'^t", c.transpose() * column(v.b) * column(v.a).transpose(),
       c * column(v.a_prime) * column(v.b_prime).transpose());
  const Scalar end = dot(v.a, c, v.a) * dot(v.b, c, v.b);
  push("(a^t C a)(b^t C b) = (b^t C a')(b'^t C a)", scalar_matrix(end), scalar_matrix(bca2 * b2ca));
  push("(b^t C a')(b'^t C a) = d^2", scalar_matrix(bca2 * b2ca), scalar_matrix(v.d * v.d));
  return out;
}

QuasiIdempotentReport quasi_idempotent_check(const Matrix& h, const Matrix& c, const Scalar& d) {
  QuasiIdempotentReport r;
  r.equation_holds = h * c * h == h.scaled(d);
  const Matrix hc = h * c;
  r.hc_positive = std::all_of(hc.data().begin(), hc.data().end(), [](const Scalar& s) { return sgn(s) > 0; });
  r.rank_hc = rank(hc);
  r.rank_h = rank(h);
  r.ok = !r.equation_holds || !r.hc_positive || (r.rank_hc == 1 && r.rank_h == 1);
  return r;
}

QuasiIdempotentCensus enumerate_quasi_idempotents_serial(std::size_t max_size, std::int64_t max_entry) {
  QuasiIdempotentCensus out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(max_entry), n * n);
    for (std::uint64_t code = 0; code < total; ++code) census_one(n, max_entry, code, out);
  }
  std::sort(out.higher_rank.begin(), out.higher_rank.end(), matrix_less);
  return out;
}

QuasiIdempotentCensus enumerate_quasi_idempotents_parallel(std::size_t max_size, std::int64_t max_entry) {
  QuasiIdempotentCensus out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto total = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(max_entry), n * n));
#pragma omp parallel
    {
      QuasiIdempotentCensus local;
#pragma omp for schedule(static)
      for (std::int64_t code = 0; code < total; ++code)
        census_one(n, max_entry, static_cast<std::uint64_t>(code), local);
#pragma omp critical
      {
        out.examined += local.examined;
        out.solutions += local.solutions;
        out.max_d = std::max(out.max_d, local.max_d);
        out.higher_rank.insert(out.higher_rank.end(), local.higher_rank.begin(), local.higher_rank.end());
      }
    }
  }
  std::sort(out.higher_rank.begin(), out.higher_rank.end(), matrix_less);
  return out;
}

}  // namespace pyracat
