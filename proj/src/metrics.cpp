#include "frpr/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "frpr/error.hpp"

namespace frpr {

double phase_invariant_distance(const Signal& u, const Signal& v) {
    if (!same_grid(u.grid, v.grid)) throw Error(ErrorKind::InvalidInput, "grid mismatch");
    // same value as sqrt(|u|^2 + |v|^2 - 2 |<u, v>|) without the cancellation near 0
    const cplx c = best_phase(u.samples, v.samples);
    double d2 = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) d2 += std::norm(u.samples[j] - c * v.samples[j]);
    return std::sqrt(d2 * u.grid.dt) / std::max(u.norm(), kDistanceFloor);
}

cplx best_phase(const CVec& u, const CVec& v) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < std::min(u.size(), v.size()); ++j) s += u[j] * std::conj(v[j]);
    const double m = std::abs(s);
    return m > 0.0 ? s / m : cplx{1.0, 0.0};
}

cplx best_phase(const Signal& u, const Signal& v) {
    if (!same_grid(u.grid, v.grid)) throw Error(ErrorKind::InvalidInput, "grid mismatch");
    return best_phase(u.samples, v.samples);
}

double aligned_coefficient_error(const CVec& est, const CVec& truth) {
    if (est.size() != truth.size()) return INFINITY;
    const cplx c = best_phase(truth, est);
    double err = 0.0;
    for (std::size_t k = 0; k < est.size(); ++k) err = std::max(err, std::abs(est[k] * c - truth[k]));
    return err;
}

}  // namespace frpr
