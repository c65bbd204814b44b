#pragma once

#include <optional>

#include "pyracat/cells/representation.hpp"

namespace pyracat {

/// Vectors with [F] = a b^t C and [G] = a' b'^t C on the cell representation.
struct MultVectors {
  Vector a, b, a_prime, b_prime;
  Matrix cartan;
  Scalar d;
};

/// H = v w^t with w primitive (coprime integers) and the first nonzero
/// entry of v positive. The zero matrix gives v = w = 0 with degenerate set.
struct RankOne {
  Vector v, w;
  bool degenerate = false;
};
std::optional<RankOne> rank_one_decompose(const Matrix& h);

/// Reads a, b from [F] and a', b' from [G]; b and b' are primitive.
/// nullopt when either matrix is not rank one or C is singular.
std::optional<MultVectors> mult_vectors(const ActionMatrices& m, const Scalar& d);

/// Both sides of one identity; vectors are columns, scalars 1x1.
struct IdentityCheck {
  std::string identity;
  Matrix lhs, rhs;
  bool holds = false;
};

/// d b = (b^t C a') b', d b' = (b'^t C a) b, C^t b a^t = C a' b'^t,
/// (a^t C a)(b^t C b) = (b^t C a')(b'^t C a), and that product equals d^2.
std::vector<IdentityCheck> verify_identities(const MultVectors& v);

struct QuasiIdempotentReport {
  bool equation_holds = false;  // H C H = d H
  bool hc_positive = false;
  std::size_t rank_hc = 0;
  std::size_t rank_h = 0;
  /// Equation fails, or HC is not positive, or both ranks are 1.
  bool ok = false;
};
QuasiIdempotentReport quasi_idempotent_check(const Matrix& h, const Matrix& c, const Scalar& d);

/// Every square matrix of size 1..max_size with entries in 1..max_entry that
/// satisfies X^2 = d X for a positive integer d.
struct QuasiIdempotentCensus {
  std::size_t examined = 0;
  std::size_t solutions = 0;
  std::vector<Matrix> higher_rank;  // counterexamples, sorted
  std::int64_t max_d = 0;
};
QuasiIdempotentCensus enumerate_quasi_idempotents_serial(std::size_t max_size, std::int64_t max_entry);
QuasiIdempotentCensus enumerate_quasi_idempotents_parallel(std::size_t max_size, std::int64_t max_entry);

}  // namespace pyracat
