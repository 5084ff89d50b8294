#pragma once

#include "mfdr/rational.hpp"

#include <optional>
#include <vector>

namespace mfdr {

using RatMatrix = std::vector<std::vector<Rational>>;

struct SolveResult {
    std::vector<Rational> x; // free variables set to zero
    int rank = 0;
};

// Solves A x = b exactly. nullopt when inconsistent.
std::optional<SolveResult> solve_linear(RatMatrix a, std::vector<Rational> b);

// Inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> invert_matrix(const RatMatrix& a);

} // namespace mfdr
