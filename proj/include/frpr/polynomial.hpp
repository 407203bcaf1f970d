#pragma once

#include "frpr/grid.hpp"

namespace frpr {

/// Roots of sum_k c_k z^k (ascending coefficients, c_back != 0): companion-matrix
/// eigenvalues polished by Newton steps. Throws Numerical if polishing diverges.
CVec polynomial_roots(const CVec& coeffs);

/// Ascending coefficients of lead * prod (z - r).
CVec polynomial_from_roots(const CVec& roots, cplx lead);

cplx polyval(const CVec& coeffs, cplx z);

}  // namespace frpr
