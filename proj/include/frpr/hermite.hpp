#pragma once

#include <cstddef>
#include <vector>

#include "frpr/grid.hpp"

namespace frpr {

/// Largest Hermite degree accepted anywhere in the library.
inline constexpr int kMaxHermiteDegree = 64;

/// Values of h_0..h_K at t, via the normalized three-term recurrence
/// h_{k+1} = 2 sqrt(pi/(k+1)) t h_k - sqrt(k/(k+1)) h_{k-1}, h_0 = 2^{1/4} e^{-pi t^2}.
RVec hermite_functions(int max_degree, double t);

/// h_k sampled on a grid.
RVec hermite_function(int k, const Grid& grid);

/// Monomial coefficients (ascending powers) of H_0..H_N with h_k = H_k e^{-pi t^2}.
std::vector<RVec> hermite_polynomial_coeffs(int max_degree, int degree_limit = kMaxHermiteDegree);

/// Evaluates an ascending-power real polynomial.
double polyval(const RVec& coeffs, double t);

}  // namespace frpr
