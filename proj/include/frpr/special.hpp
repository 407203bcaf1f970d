#pragma once

#include <utility>

#include "frpr/grid.hpp"

namespace frpr {

/// C(x) + i S(x) = int_0^x exp(i pi u^2 / 2) du.
cplx fresnel(double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<RVec, RVec> gauss_legendre(int order);

/// int_p^q exp(i (c2 t^2 + c1 t)) dt for real c2, c1, accurate for any size of the phase.
cplx chirp_integral(double c2, double c1, double p, double q);

}  // namespace frpr
