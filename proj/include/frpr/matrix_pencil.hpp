#pragma once

#include <cstddef>

#include "frpr/grid.hpp"

namespace frpr {

struct ExponentialSum {
    CVec exponents;   // z_k in sum lambda_k e^{z_k t}
    CVec amplitudes;  // lambda_k, referred to t = 0
    RVec singular_values;
    std::size_t order = 0;
    double gap_ratio = 0.0;
};

struct MatrixPencilOptions {
    std::size_t max_order = 16;
    double gap_ratio = 1e4;
    /// When nonzero, only orders in {1, 4, 9, ...} (perfect squares) are eligible.
    bool square_orders = false;
    /// When nonzero the order is imposed and the gap test is only reported.
    std::size_t fixed_order = 0;
};

/// Matrix-pencil identification of f(t_j) = sum lambda_k e^{z_k t_j} from uniform
/// samples t_j = t0 + j dt. Model order from the largest admissible singular-value gap;
/// throws OrderSelection (with the spectrum in the message) when no gap exceeds the ratio.
ExponentialSum matrix_pencil(const CVec& samples, double t0, double dt,
                             const MatrixPencilOptions& opt = {});

/// Least-squares amplitudes for fixed exponents (referred to t = 0).
CVec exponential_amplitudes(const CVec& samples, double t0, double dt, const CVec& exponents);

}  // namespace frpr
