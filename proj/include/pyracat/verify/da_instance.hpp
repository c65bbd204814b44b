#pragma once

#include <optional>

#include "pyracat/algmod/bimod_cat.hpp"
#include "pyracat/algmod/resolution.hpp"
#include "pyracat/pyramid/homotopy.hpp"
#include "pyracat/pyramid/tensor.hpp"

namespace pyracat {

using BimodPyramid = Pyramid<BimodCat>;
using BimodMap = GradedMap<BimodCat>;

/// F = A (x) A at the origin and the resolution Q of G = A* (x) A as a
/// width-1 pyramid with Q_k at -k e_1, plus the isomorphisms used to
/// identify the degree-0 homology of each product.
struct DAInstance {
  std::shared_ptr<const BimodCat> cat;
  std::size_t length = 0;
  std::size_t copies = 0;  // d, read from the composition table
  Bimodule f, g;
  Resolution resolution;
  BimodPyramid f_pyr, q_pyr;
  BimodMap q_augmentation;  // Q_pyr -> embed(G)
  std::size_t q_axiom_violations = 0;
  bool terminated = false;
  /// F (x) G -> F^d, G (x) F -> G^d, G (x) G -> G^d (absent if not found).
  std::optional<Matrix> iso_fg, iso_gf, iso_gg;
};

/// Throws std::runtime_error when the resolution fails its exactness check.
DAInstance build_instance(const Algebra& a, std::size_t length);

/// Degree-0 f : S -> T with f d = d f and aug_T f = embed(phi) aug_S, where
/// both augmentations end in width-0 pyramids.
std::optional<BimodMap> lift_augmentation(const BimodCat& cat, const BimodMap& aug_s, const BimodMap& aug_t,
                                          const Matrix& phi);

struct ProductCheck {
  std::string lhs, rhs;
  bool lifted = false;
  bool equivalent = false;
  bool revalidated = false;
  /// Nonzero blocks of the inverse and of the two homotopies.
  std::vector<std::size_t> witness_sizes;
  std::string problem;
};

struct DAReport {
  std::vector<ProductCheck> products;
  bool ok = false;
};

/// F.Q ~ embed(F)^d, Q.F ~ Q^d and Q.Q ~ Q^d, each certified by a
/// homotopy-equivalence witness that is then re-checked by substitution.
DAReport verify_da_table(const DAInstance& inst);

}  // namespace pyracat
