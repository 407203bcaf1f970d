#pragma once

#include <vector>

#include "frpr/frft.hpp"
#include "frpr/models.hpp"

namespace frpr {

struct PulseRecoveryOptions {
    double division_threshold = 1e-3;  // relative to the max modulus of the A(chi) factor in a lag window
    double rank_tolerance = 1e-4;      // lambda_2 / lambda_1 above this is a model mismatch
    /// Samples within this many dual-grid steps (times 1/sin alpha) of lag centres and
    /// window edges are left out of the fit; the slice carries truncation spikes there.
    double exclusion_steps = 64.0;
};

struct PulseRecoveryDiagnostics {
    std::vector<double> lag_residuals;  // relative residual of each trigonometric fit
    std::vector<double> lag_condition;  // condition number of each fit
    std::vector<std::size_t> lag_samples;
    double eigen_ratio = 0.0;
};

struct PulseRecoveryResult {
    PulseTrainModel model;
    PulseRecoveryDiagnostics diagnostics;
};

PulseRecoveryResult recover_pulse_train(const MagnitudeMeasurement& m, double a, double b, int k_min,
                                        int k_max, const PulseRecoveryOptions& opt = {});

}  // namespace frpr
