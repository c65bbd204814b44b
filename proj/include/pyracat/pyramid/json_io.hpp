#pragma once

#include <json.hpp>

#include "pyracat/catcore/matcat.hpp"
#include "pyracat/pyramid/complex.hpp"

namespace pyracat {

/// Matrices as lists of rows of "p/q" strings.
nlohmann::json matrix_to_json(const Matrix& m);
/// Accepts strings or integers as entries; `rows` x `cols` is enforced.
Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

/// {"width", "cells": [{"index", "object"}], "diffs": [{"at", "dir", "mor"}]}
/// with MatCat objects as ranks. Throws std::invalid_argument on malformed
/// input; the result is not checked against the axioms.
nlohmann::json pyramid_to_json(const Pyramid<MatCat>& p);
Pyramid<MatCat> pyramid_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const Complex<MatCat>& c);
Complex<MatCat> complex_from_json(const nlohmann::json& j);

}  // namespace pyracat
