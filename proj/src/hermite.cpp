#include "frpr/hermite.hpp"

#include <cmath>
#include <string>

#include "frpr/error.hpp"

namespace frpr {

namespace {
const double kH0 = std::pow(2.0, 0.25);

void check_degree(int degree, int limit) {
    if (degree < 0 || degree > limit) {
        throw Error(ErrorKind::DegreeLimit, "Hermite degree " + std::to_string(degree) +
                                                " outside [0, " + std::to_string(limit) + "]");
    }
}
}  // namespace

RVec hermite_functions(int max_degree, double t) {
    check_degree(max_degree, kMaxHermiteDegree);
    RVec h(static_cast<std::size_t>(max_degree) + 1);
    h[0] = kH0 * std::exp(-kPi * t * t);
    if (max_degree >= 1) h[1] = 2.0 * std::sqrt(kPi) * t * h[0];
    for (int k = 1; k < max_degree; ++k) {
        const double kk = static_cast<double>(k);
        h[k + 1] = 2.0 * std::sqrt(kPi / (kk + 1.0)) * t * h[k] - std::sqrt(kk / (kk + 1.0)) * h[k - 1];
    }
    return h;
}

RVec hermite_function(int k, const Grid& grid) {
    grid.validate();
    RVec out(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) out[j] = hermite_functions(k, grid.at(j))[k];
    return out;
}

std::vector<RVec> hermite_polynomial_coeffs(int max_degree, int degree_limit) {
    check_degree(max_degree, degree_limit);
    std::vector<RVec> H(static_cast<std::size_t>(max_degree) + 1);
    H[0] = {kH0};
    if (max_degree >= 1) H[1] = {0.0, 2.0 * std::sqrt(kPi) * kH0};
    for (int k = 1; k < max_degree; ++k) {
        const double kk = static_cast<double>(k);
        const double a = 2.0 * std::sqrt(kPi / (kk + 1.0));
        const double b = std::sqrt(kk / (kk + 1.0));
        RVec next(static_cast<std::size_t>(k) + 2, 0.0);
        for (std::size_t p = 0; p < H[k].size(); ++p) next[p + 1] += a * H[k][p];
        for (std::size_t p = 0; p < H[k - 1].size(); ++p) next[p] -= b * H[k - 1][p];
        H[k + 1] = std::move(next);
    }
    return H;
}

double polyval(const RVec& coeffs, double t) {
    double s = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * t + *it;
    return s;
}

}  // namespace frpr
