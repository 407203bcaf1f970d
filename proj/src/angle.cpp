#include "frpr/angle.hpp"

#include <cmath>

#include "frpr/grid.hpp"

namespace frpr {

AngleConstraintReport check_angle_constraint(double gamma, int N) {
    AngleConstraintReport r;
    r.gamma = gamma;
    for (int j = 1; j <= N; ++j) {
        if (std::abs(std::sin(j * gamma)) <= kAngleAdmissibilityTol) {
            r.min_degree_blocked = j;
            r.admissible = false;
            break;
        }
    }
    return r;
}

bool is_quarter_turn(double alpha, double tol) {
    const double q = alpha / (kPi / 2.0);
    return std::abs(alpha - std::round(q) * (kPi / 2.0)) <= tol;
}

}  // namespace frpr
