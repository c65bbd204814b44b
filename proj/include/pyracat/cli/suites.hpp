#pragma once

#include <json.hpp>

#include "pyracat/algmod/algebra.hpp"
#include "pyracat/catcore/check_oracle.hpp"
#include "pyracat/cells/table.hpp"

namespace pyracat {

/// Exit codes shared by every command.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kPrecondition = 3 };

struct SuiteResult {
  nlohmann::json report;
  int exit_code = kPass;
};

/// Axiom check of one MatCat pyramid given as JSON.
SuiteResult check_pyramid_file(const nlohmann::json& j);

/// Per trial: axioms of X (x) Y and (X (x) Y) (x) Z, strict associativity,
/// both unit laws, and the total tensor comparison for (X, Y). With
/// `inject_fault` the tensor comes from FaultyMatCat.
OracleReport monoidal_trials(std::size_t trials, std::uint64_t seed, bool inject_fault);
SuiteResult monoidal_suite(std::size_t trials, std::uint64_t seed, bool inject_fault);

/// Table, associativity, coherence with the bimodule oracle, cells, action
/// matrices, apex, the identity suite and the quasi-idempotent check.
/// An invalid algebra gives kInputError.
SuiteResult algebra_suite(const Algebra& a, Flavor flavor);

/// Resolution of G, then the three product checks. A resolution that has
/// not terminated within `length` gives kPrecondition.
SuiteResult da_verify_suite(const Algebra& a, std::size_t length);

}  // namespace pyracat
