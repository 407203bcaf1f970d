#include "frpr/pulse_recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "frpr/ambiguity.hpp"
#include "frpr/angle.hpp"
#include "frpr/error.hpp"
#include "frpr/rank1.hpp"

namespace frpr {

PulseRecoveryResult recover_pulse_train(const MagnitudeMeasurement& m, double a, double b, int k_min, int k_max,
                                        const PulseRecoveryOptions& opt) {
    m.validate();
    if (!(a > 0.0) || !(b > 0.0) || !(b < a / 2.0)) throw Error(ErrorKind::InvalidInput, "pulse train needs 0 < b < a/2");
    if (k_max < k_min) throw Error(ErrorKind::InvalidInput, "empty coefficient range");
    const double alpha = reduce_angle(m.alpha);
    if (is_quarter_turn(alpha, kAngleAdmissibilityTol)) {
        throw Error(ErrorKind::AngleConstraint, "pulse recovery needs alpha outside (pi/2)Z");
    }
    const double s = std::sin(alpha), c = std::cos(alpha);
    const int K = k_max - k_min + 1;
    const double dtau = m.grid.dual().dt;
    const double tau_limit = 0.5 / m.grid.dt;  // slice is periodic beyond this
    const double guard = opt.exclusion_steps * dtau * std::abs(s);

    PulseRecoveryResult res;
    auto& diag = res.diagnostics;
    CVec G(static_cast<std::size_t>(K) * K, cplx{0.0, 0.0});

    for (int j = 0; j < K; ++j) {
        // x = -tau sin(alpha) runs over (a j - b, a j + b)
        const double xa = a * j - b + guard, xb = a * j + b - guard;
        double t0 = -xa / s, t1 = -xb / s;
        if (t0 > t1) std::swap(t0, t1);
        if (std::max(std::abs(t0), std::abs(t1)) >= tau_limit) {
            throw Error(ErrorKind::InvalidInput, "measurement grid too coarse for lag " + std::to_string(j));
        }
        const auto count = static_cast<std::size_t>(std::floor((t1 - t0) / dtau)) + 1;
        const CVec slice = slice_values(m, t0, dtau, count);

        std::vector<std::size_t> keep;
        std::vector<cplx> factor(count);
        double fmax = 0.0;
        for (std::size_t q = 0; q < count; ++q) {
            const double tau = t0 + q * dtau;
            const double x = -tau * s, y = tau * c;
            factor[q] = std::polar(1.0, kPi * a * j * y) * ambiguity_indicator(b, x - a * j, y);
            fmax = std::max(fmax, std::abs(factor[q]));
        }
        for (std::size_t q = 0; q < count; ++q) {
            const double x = -(t0 + q * dtau) * s;
            if (std::abs(x - a * j) < guard) continue;  // kink of A(chi) at the lag centre
            if (std::abs(factor[q]) > opt.division_threshold * fmax) keep.push_back(q);
        }
        const int nk = K - j;  // k = k_min + j .. k_max
        if (keep.size() < static_cast<std::size_t>(2 * nk)) {
            throw Error(ErrorKind::IllConditioned, "too few usable samples for lag " + std::to_string(j));
        }
        Eigen::MatrixXcd A(static_cast<Eigen::Index>(keep.size()), nk);
        Eigen::VectorXcd rhs(static_cast<Eigen::Index>(keep.size()));
        for (std::size_t r = 0; r < keep.size(); ++r) {
            const std::size_t q = keep[r];
            const double y = (t0 + q * dtau) * c;
            for (int i = 0; i < nk; ++i) {
                const int k = k_min + j + i;
                A(static_cast<Eigen::Index>(r), i) = factor[q] * std::polar(1.0, -2.0 * kPi * a * k * y);
            }
            rhs(static_cast<Eigen::Index>(r)) = slice[q];
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXcd r = svd.solve(rhs);
        const auto& sv = svd.singularValues();
        diag.lag_condition.push_back(sv(0) / std::max(sv(sv.size() - 1), 1e-300));
        diag.lag_residuals.push_back((A * r - rhs).norm() / std::max(rhs.norm(), 1e-300));
        diag.lag_samples.push_back(keep.size());
        for (int i = 0; i < nk; ++i) {
            const int row = j + i, col = i;  // G_{k, k-j} = a_k conj(a_{k-j})
            G[static_cast<std::size_t>(row) * K + col] = r(i);
            G[static_cast<std::size_t>(col) * K + row] = std::conj(r(i));
        }
    }

    const RankOneFactor f = rank_one_factor(G, static_cast<std::size_t>(K));
    diag.eigen_ratio = f.lambda2 / std::max(std::abs(f.lambda1), 1e-300);
    if (!(f.lambda1 > 0.0) || diag.eigen_ratio > opt.rank_tolerance) {
        throw Error(ErrorKind::ModelMismatch,
                    "correlation matrix is not rank one (lambda2/lambda1 = " + std::to_string(diag.eigen_ratio) + ")");
    }
    res.model.a = a;
    res.model.b = b;
    for (int i = 0; i < K; ++i) res.model.coeffs[k_min + i] = f.vector[i];
    return res;
}

}  // namespace frpr
