#pragma once

// Exact rational simplex for the small mixed equality / strict-inequality
// systems that arise when searching for binary witness structures.

#include <optional>
#include <span>

#include "postdom/rational.hpp"

namespace postdom {

struct LinearEquality {
    RationalVector coeffs;
    Rational rhs;
};

struct SlackSolution {
    RationalVector x;
    Rational slack;  // min_i c_i . x, zero when there are no strict rows
};

// Maximizes t subject to A x = b, c_i . x >= t for every strict row,
// |x_j| <= box and t >= 0. Returns nullopt when that region is empty.
// Two-phase dense tableau with Bland's rule, so it cannot cycle.
std::optional<SlackSolution> maximize_slack(std::span<const LinearEquality> equalities,
                                            std::span<const RationalVector> strict_positives, const Rational& box);

// A point with A x = b and c_i . x > 0 for every strict row, |x_j| <= box,
// or nullopt if none exists. With no strict rows, any feasible point.
std::optional<RationalVector> feasibility_solve(std::span<const LinearEquality> equalities,
                                                std::span<const RationalVector> strict_positives,
                                                const Rational& box);

}  // namespace postdom
