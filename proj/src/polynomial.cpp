#include "frpr/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "frpr/error.hpp"

namespace frpr {

cplx polyval(const CVec& coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

cplx polyder_val(const CVec& c, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
}

std::string describe(const CVec& c) {
    std::string s;
    for (const auto& z : c) s += " (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
    return s;
}

}  // namespace

CVec polynomial_roots(const CVec& coeffs) {
    if (coeffs.empty() || coeffs.back() == cplx{0.0, 0.0}) {
        throw Error(ErrorKind::InvalidInput, "polynomial needs a nonzero leading coefficient");
    }
    const std::size_t d = coeffs.size() - 1;
    if (d == 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) comp(0, static_cast<Eigen::Index>(d - 1 - k)) = -coeffs[k] / coeffs[d];
    for (std::size_t k = 1; k < d; ++k) comp(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::Numerical, "companion eigensolver failed for" + describe(coeffs));
    CVec roots(d);
    for (std::size_t k = 0; k < d; ++k) {
        cplx z = es.eigenvalues()(static_cast<Eigen::Index>(k));
        double best = std::abs(polyval(coeffs, z));
        for (int it = 0; it < 20 && best > 0.0; ++it) {
            const cplx dp = polyder_val(coeffs, z);
            if (dp == cplx{0.0, 0.0}) break;
            const cplx next = z - polyval(coeffs, z) / dp;
            const double r = std::abs(polyval(coeffs, next));
            if (!(r < best)) break;
            z = next;
            best = r;
        }
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::Numerical, "root polishing diverged for" + describe(coeffs));
        }
        roots[k] = z;
    }
    return roots;
}

CVec polynomial_from_roots(const CVec& roots, cplx lead) {
    CVec c{lead};
    for (const auto& r : roots) {
        CVec next(c.size() + 1, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace frpr
