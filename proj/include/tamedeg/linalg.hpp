#pragma once

#include <optional>
#include <vector>

#include "tamedeg/poly.hpp"

namespace tamedeg {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(const RationalMatrix& m);

/// Gauss-Jordan inverse; nullopt for singular input.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Solves A x = b exactly. Rows are scaled to integers and reduced to row
/// echelon form by fraction-free (Bareiss) elimination; free variables are
/// set to zero. nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace tamedeg
