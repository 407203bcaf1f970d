#pragma once

#include <optional>

namespace frpr {

/// Threshold on |sin(j gamma)| below which e^{ij gamma} counts as real.
inline constexpr double kAngleAdmissibilityTol = 1e-9;

struct AngleConstraintReport {
    double gamma = 0.0;
    std::optional<int> min_degree_blocked;  // smallest j <= N with e^{ij gamma} real
    bool admissible = true;
};

/// Two-angle Hermite admissibility: none of e^{ij gamma}, j = 1..N, may be real.
AngleConstraintReport check_angle_constraint(double gamma, int N);

/// True when alpha is within `tol` of (pi/2) Z.
bool is_quarter_turn(double alpha, double tol = 1e-9);

}  // namespace frpr
