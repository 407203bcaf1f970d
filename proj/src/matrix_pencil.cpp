#include "frpr/matrix_pencil.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "frpr/error.hpp"

namespace frpr {

namespace {

bool is_square(std::size_t p) {
    const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(p))));
    return r * r == p;
}

}  // namespace

ExponentialSum matrix_pencil(const CVec& samples, double t0, double dt, const MatrixPencilOptions& opt) {
    const std::size_t M = samples.size();
    if (M < 4) throw Error(ErrorKind::InvalidInput, "matrix pencil needs at least 4 samples");
    const std::size_t L = M / 2;  // pencil parameter
    const std::size_t rows = M - L;
    Eigen::MatrixXcd Y(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(L + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c <= L; ++c) Y(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = samples[r + c];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Y, Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();

    ExponentialSum out;
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    const std::size_t pmax = std::min<std::size_t>({opt.max_order, L, static_cast<std::size_t>(sv.size()) - 1});
    if (sv(0) == 0.0) throw Error(ErrorKind::OrderSelection, "samples are identically zero");
    double best = 0.0;
    std::size_t order = 0;
    for (std::size_t p = 1; p <= pmax; ++p) {
        if (opt.square_orders && !is_square(p)) continue;
        const double next = sv(static_cast<Eigen::Index>(p));
        const double ratio = next > 0.0 ? sv(static_cast<Eigen::Index>(p - 1)) / next : std::numeric_limits<double>::infinity();
        if (ratio > best) {
            best = ratio;
            order = p;
        }
    }
    out.gap_ratio = best;
    if (opt.fixed_order > 0) {
        if (opt.fixed_order > L) throw Error(ErrorKind::InvalidInput, "pencil order exceeds the pencil parameter");
        order = opt.fixed_order;
        const double next = order < static_cast<std::size_t>(sv.size()) ? sv(static_cast<Eigen::Index>(order)) : 0.0;
        out.gap_ratio = next > 0.0 ? sv(static_cast<Eigen::Index>(order - 1)) / next : std::numeric_limits<double>::infinity();
    } else if (order == 0 || !(best > opt.gap_ratio)) {
        std::string values;
        for (Eigen::Index k = 0; k < std::min<Eigen::Index>(sv.size(), 20); ++k) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.2e", sv(k));
            values += buf;
        }
        throw Error(ErrorKind::OrderSelection,
                    "no singular-value gap above " + std::to_string(opt.gap_ratio) + " (best " + std::to_string(best) +
                        "); singular values:" + values);
    }
    out.order = order;
    const auto P = static_cast<Eigen::Index>(order);
    const Eigen::MatrixXcd V = svd.matrixV().leftCols(P);
    const auto Li = static_cast<Eigen::Index>(L);
    const Eigen::MatrixXcd V1 = V.topRows(Li).adjoint();
    const Eigen::MatrixXcd V2 = V.bottomRows(Li).adjoint();
    const Eigen::MatrixXcd Zm = V2 * V1.completeOrthogonalDecomposition().pseudoInverse();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Zm, false);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::Numerical, "pencil eigensolver failed");
    out.exponents.resize(order);
    for (std::size_t k = 0; k < order; ++k) out.exponents[k] = std::log(es.eigenvalues()(static_cast<Eigen::Index>(k))) / dt;
    out.amplitudes = exponential_amplitudes(samples, t0, dt, out.exponents);
    return out;
}

CVec exponential_amplitudes(const CVec& samples, double t0, double dt, const CVec& exponents) {
    const auto M = static_cast<Eigen::Index>(samples.size());
    const auto P = static_cast<Eigen::Index>(exponents.size());
    Eigen::MatrixXcd A(M, P);
    Eigen::VectorXcd b(M);
    Eigen::VectorXd colscale(P);
    for (Eigen::Index k = 0; k < P; ++k) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < M; ++j) {
            A(j, k) = std::exp(exponents[k] * (t0 + static_cast<double>(j) * dt));
            s = std::max(s, std::abs(A(j, k)));
        }
        colscale(k) = s > 0.0 ? s : 1.0;
        A.col(k) /= colscale(k);
    }
    for (Eigen::Index j = 0; j < M; ++j) b(j) = samples[j];
    const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
    CVec amp(exponents.size());
    for (Eigen::Index k = 0; k < P; ++k) amp[k] = x(k) / colscale(k);
    return amp;
}

}  // namespace frpr
