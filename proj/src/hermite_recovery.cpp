#include "frpr/hermite_recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frpr/error.hpp"
#include "frpr/hermite.hpp"

namespace frpr {

SquaredMagnitudeFit fit_squared_magnitude(const MagnitudeMeasurement& m, int N) {
    m.validate();
    if (N < 0 || 2 * N > kMaxHermiteDegree) throw Error(ErrorKind::DegreeLimit, "Hermite recovery degree out of range");
    const int P = 2 * N;
    const Grid& g = m.grid;
    RVec power(g.n);
    for (std::size_t j = 0; j < g.n; ++j) power[j] = m.magnitudes[j] * m.magnitudes[j];
    const double peak = *std::max_element(power.begin(), power.end());
    if (!(peak > 0.0)) throw Error(ErrorKind::ModelMismatch, "measurement is identically zero");

    // Beyond T_fit the Gaussian factor has pushed the data under the round-off floor.
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * peak;
    SquaredMagnitudeFit fit;
    for (std::size_t j = 0; j < g.n; ++j) if (power[j] > floor) fit.t_fit = std::max(fit.t_fit, std::abs(g.at(j)));

    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < g.n; ++j) if (std::abs(g.at(j)) <= fit.t_fit) rows.push_back(j);
    if (rows.size() < static_cast<std::size_t>(P + 1)) throw Error(ErrorKind::InvalidInput, "too few samples for the fit");

    // Basis h_p(sqrt 2 t) = H_p(sqrt 2 t) e^{-2 pi t^2}: orthogonal, so the LS system stays tame.
    Eigen::MatrixXd A(static_cast<Eigen::Index>(rows.size()), P + 1);
    Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const RVec h = hermite_functions(P, std::sqrt(2.0) * g.at(rows[r]));
        for (int p = 0; p <= P; ++p) A(static_cast<Eigen::Index>(r), p) = h[p];
        b(static_cast<Eigen::Index>(r)) = power[rows[r]];
    }
    const Eigen::VectorXd q = A.colPivHouseholderQr().solve(b);
    fit.residual = (A * q - b).norm() / std::max(b.norm(), 1e-300);

    const auto H = hermite_polynomial_coeffs(P);
    fit.monomials.assign(P + 1, 0.0);
    for (int p = 0; p <= P; ++p) {
        for (int k = 0; k <= p; ++k) fit.monomials[k] += q(p) * H[p][k] * std::pow(2.0, 0.5 * k);
    }
    return fit;
}

namespace {

// [t^deg] |sum_j x_j H_j|^2 over the given j range.
double known_square_coeff(const std::vector<RVec>& H, const CVec& x, int j_from, int j_to, int deg) {
    CVec s(static_cast<std::size_t>(j_to) + 1, cplx{0.0, 0.0});
    for (int j = j_from; j <= j_to; ++j) {
        for (std::size_t k = 0; k < H[j].size(); ++k) s[k] += x[j] * H[j][k];
    }
    cplx acc{0.0, 0.0};
    for (int m = 0; m <= deg; ++m) {
        const int l = deg - m;
        if (m < static_cast<int>(s.size()) && l < static_cast<int>(s.size())) acc += s[m] * std::conj(s[l]);
    }
    return acc.real();
}

// Levenberg-Marquardt on the sampled powers of both frames, started from the recursion.
// The recursion divides by sin(k gamma) and by c_N, so a small leading coefficient costs digits.
void polish(CVec& c, const MagnitudeMeasurement& ma, const MagnitudeMeasurement& mb, double ta, double tb) {
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<double>> basis;
    std::vector<double> power, frame;
    for (const auto* m : {&ma, &mb}) {
        const double tf = m == &ma ? ta : tb;
        for (std::size_t j = 0; j < m->grid.n; ++j) {
            const double t = m->grid.at(j);
            if (std::abs(t) > tf) continue;
            basis.push_back(hermite_functions(n - 1, t));
            power.push_back(m->magnitudes[j] * m->magnitudes[j]);
            frame.push_back(m->alpha);
        }
    }
    const auto rows = static_cast<Eigen::Index>(power.size());
    auto residual = [&](const CVec& x, Eigen::VectorXd& r, Eigen::MatrixXd* J) {
        r.resize(rows);
        if (J) J->resize(rows, 2 * n);
        for (Eigen::Index i = 0; i < rows; ++i) {
            cplx f{0.0, 0.0};
            CVec g(n);
            for (int k = 0; k < n; ++k) {
                g[k] = std::polar(basis[i][k], -k * frame[i]);
                f += x[k] * g[k];
            }
            r(i) = std::norm(f) - power[i];
            if (J) {
                for (int k = 0; k < n; ++k) {
                    const cplx dk = 2.0 * std::conj(f) * g[k];  // d|f|^2 = 2 Re(conj f g dx)
                    (*J)(i, 2 * k) = dk.real();
                    (*J)(i, 2 * k + 1) = -dk.imag();
                }
            }
        }
    };
    Eigen::VectorXd r, rt;
    Eigen::MatrixXd J;
    residual(c, r, &J);
    double cost = r.squaredNorm(), lambda = 1e-6;
    for (int it = 0; it < 50 && cost > 0.0; ++it) {
        const Eigen::MatrixXd JtJ = J.transpose() * J;
        const Eigen::VectorXd g = J.transpose() * r;
        Eigen::MatrixXd M = JtJ;
        M.diagonal() += lambda * (JtJ.diagonal().array() + 1e-12 * JtJ.diagonal().maxCoeff()).matrix();
        const Eigen::VectorXd step = M.ldlt().solve(-g);
        CVec trial = c;
        for (int k = 0; k < n; ++k) trial[k] += cplx{step(2 * k), step(2 * k + 1)};
        residual(trial, rt, nullptr);
        const double tc = rt.squaredNorm();
        if (tc < cost) {
            const bool done = cost - tc <= 1e-15 * cost;
            c = trial;
            cost = tc;
            lambda = std::max(lambda / 10.0, 1e-12);
            residual(c, r, &J);
            if (done) break;
        } else {
            lambda *= 10.0;
            if (lambda > 1e8) break;
        }
    }
}

}  // namespace

HermiteRecoveryResult recover_hermite(const MagnitudeMeasurement& m_alpha, const MagnitudeMeasurement& m_beta, int N) {
    if (N < 0 || N > kMaxHermiteDegree / 2) throw Error(ErrorKind::DegreeLimit, "Hermite recovery degree out of range");
    const double alpha = m_alpha.alpha, beta = m_beta.alpha;
    const double gamma = beta - alpha;
    const AngleConstraintReport rep = check_angle_constraint(gamma, N);
    if (!rep.admissible) {
        throw Error(ErrorKind::AngleConstraint,
                    "e^{i j gamma} is real for j = " + std::to_string(*rep.min_degree_blocked) +
                        " (gamma = " + std::to_string(gamma) + ", N = " + std::to_string(N) + ")");
    }
    const SquaredMagnitudeFit fa = fit_squared_magnitude(m_alpha, N);
    const SquaredMagnitudeFit fb = fit_squared_magnitude(m_beta, N);
    const auto H = hermite_polynomial_coeffs(N);
    const auto lead = [&](int j) { return H[j][j]; };

    HermiteRecoveryResult res;
    auto& diag = res.diagnostics;
    diag.t_fit_alpha = fa.t_fit;
    diag.t_fit_beta = fb.t_fit;
    diag.fit_residual_alpha = fa.residual;
    diag.fit_residual_beta = fb.residual;
    diag.min_abs_sin = 1.0;

    // d_j = c_j e^{-ij beta}; the alpha frame sees d_j e^{ij gamma}.
    CVec d(N + 1, cplx{0.0, 0.0});
    const double top = fb.monomials[2 * N] / (lead(N) * lead(N));
    diag.degrees_consumed.push_back(2 * N);
    double scale = 0.0;
    for (double v : fb.monomials) scale = std::max(scale, std::abs(v));
    if (top < 0.0) {
        if (top < -1e-6 * scale) throw Error(ErrorKind::ModelMismatch, "fitted leading power is negative");
    }
    diag.leading_power = std::max(top, 0.0);
    diag.leading_coefficient_small = diag.leading_power <= 1e-8 * std::max(scale, 1e-300);
    if (!(diag.leading_power > 0.0)) throw Error(ErrorKind::ModelMismatch, "fitted leading power vanishes; degree below N?");
    d[N] = std::sqrt(diag.leading_power);

    for (int k = 1; k <= N; ++k) {
        const int deg = 2 * N - k;
        CVec xa(N + 1);
        for (int j = 0; j <= N; ++j) xa[j] = d[j] * std::polar(1.0, j * gamma);
        const double norm = 2.0 * lead(N) * lead(N - k);
        const double p0 = (fb.monomials[deg] - known_square_coeff(H, d, N - k + 1, N, deg)) / norm;
        const double pg = (fa.monomials[deg] - known_square_coeff(H, xa, N - k + 1, N, deg)) / norm;
        const double s = std::sin(k * gamma);
        diag.min_abs_sin = std::min(diag.min_abs_sin, std::abs(s));
        if (std::abs(s) < kAngleAdmissibilityTol) throw Error(ErrorKind::IllConditioned, "|sin k gamma| below 1e-9");
        const cplx X{p0, (std::cos(k * gamma) * p0 - pg) / s};  // d_N conj(d_{N-k})
        d[N - k] = std::conj(X) / d[N];
        diag.degrees_consumed.push_back(deg);
    }

    res.model.coeffs.resize(N + 1);
    for (int j = 0; j <= N; ++j) res.model.coeffs[j] = d[j] * std::polar(1.0, j * beta);
    polish(res.model.coeffs, m_alpha, m_beta, fa.t_fit, fb.t_fit);
    const cplx rot = std::conj(res.model.coeffs[N]) / std::abs(res.model.coeffs[N]);
    for (auto& c : res.model.coeffs) c *= rot;
    return res;
}

}  // namespace frpr
