#pragma once

#include <vector>

#include "frpr/frft.hpp"
#include "frpr/matrix_pencil.hpp"
#include "frpr/models.hpp"

namespace frpr {

struct GaussianRecoveryOptions {
    double overflow_cap = 1e4;  // max of e^{pi t^2 / 2} on the sampling window
    double sample_step = 0.0;   // 0: every other dual-grid sample up to the aliasing limit
    double gap_ratio = 1e4;
    /// Relative slice residual a candidate order must reach after refinement.
    double fit_tolerance = 1e-8;
    int max_iterations = 200;
    /// Seeded random node guesses tried when the pencil and continuation guesses fail.
    int restarts = 100;
    unsigned long long restart_seed = 1;
};

struct GaussianRecoveryDiagnostics {
    ExponentialSum pencil;
    std::size_t real_exponents = 0;
    double real_threshold = 0.0;
    double window = 0.0;
    double eigen_ratio = 0.0;
    double residual = 0.0;                 // relative slice residual of the accepted model
    std::vector<double> order_residuals;   // residual per candidate node count 1..N_max, NaN if it failed
    int iterations = 0;
};

struct GaussianRecoveryResult {
    GaussianMixtureModel model;  // nodes ascending, largest coefficient real positive
    GaussianRecoveryDiagnostics diagnostics;
};

GaussianRecoveryResult recover_gaussian_mixture(const MagnitudeMeasurement& m, int N_max,
                                                const GaussianRecoveryOptions& opt = {});

/// A(u)(-t sin alpha, t cos alpha) for a Gaussian mixture, in closed form.
cplx gaussian_mixture_slice(const GaussianMixtureModel& m, double alpha, double t);

}  // namespace frpr
