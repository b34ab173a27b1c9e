#pragma once

#include "fieldsym/exact/gauss_rational.hpp"

#include <optional>
#include <vector>

namespace fieldsym::exact {

using Vector = std::vector<GaussRational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);

/// One solution of a c = b (free unknowns set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace fieldsym::exact
