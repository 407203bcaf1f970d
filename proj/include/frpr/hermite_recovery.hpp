#pragma once

#include <vector>

#include "frpr/angle.hpp"
#include "frpr/frft.hpp"
#include "frpr/models.hpp"

namespace frpr {

struct HermiteRecoveryDiagnostics {
    double t_fit_alpha = 0.0;
    double t_fit_beta = 0.0;
    double fit_residual_alpha = 0.0;  // relative L2 residual of the squared-magnitude fit
    double fit_residual_beta = 0.0;
    double leading_power = 0.0;       // fitted |c_N|^2
    double min_abs_sin = 0.0;         // smallest |sin k gamma| met in the 2x2 solves
    std::vector<int> degrees_consumed;  // polynomial degrees read, in order
    bool leading_coefficient_small = false;  // hint that the true degree is below N
};

struct HermiteRecoveryResult {
    HermiteModel model;  // c_N real positive
    HermiteRecoveryDiagnostics diagnostics;
};

/// Hermite function of degree N from |F_alpha u| and |F_beta u|.
HermiteRecoveryResult recover_hermite(const MagnitudeMeasurement& m_alpha,
                                      const MagnitudeMeasurement& m_beta, int N);

/// Real polynomial Q of degree 2N with |F u|^2 = Q(t) e^{-2 pi t^2}, fitted for |t| <= T_fit.
struct SquaredMagnitudeFit {
    RVec monomials;  // ascending
    double t_fit = 0.0;
    double residual = 0.0;
};
SquaredMagnitudeFit fit_squared_magnitude(const MagnitudeMeasurement& m, int N);

}  // namespace frpr
