#pragma once

#include <cstddef>

#include "frpr/grid.hpp"

namespace frpr {

struct RankOneFactor {
    CVec vector;           // sqrt(lambda_1) * leading eigenvector, largest entry real positive
    double lambda1 = 0.0;
    double lambda2 = 0.0;  // second eigenvalue magnitude, for rank diagnostics
};

/// Dominant rank-one factor of a Hermitian n x n matrix given row-major.
RankOneFactor rank_one_factor(const CVec& hermitian, std::size_t n);

/// Multiplies v by the unimodular constant that makes its largest-modulus entry real positive.
void normalise_phase(CVec& v);

}  // namespace frpr
