#include "frpr/models.hpp"

#include <algorithm>
#include <string>

#include "frpr/error.hpp"
#include "frpr/hermite.hpp"

namespace frpr {

void HermiteModel::validate() const {
    if (coeffs.empty()) throw Error(ErrorKind::InvalidInput, "Hermite model needs coefficients");
    if (degree() > kMaxHermiteDegree) {
        throw Error(ErrorKind::DegreeLimit, "Hermite degree " + std::to_string(degree()) + " too large");
    }
    if (degree() >= 1 && coeffs.back() == cplx{0.0, 0.0}) {
        throw Error(ErrorKind::InvalidInput, "leading Hermite coefficient is zero");
    }
}

void PulseTrainModel::validate() const {
    if (!(a > 0.0) || !(b > 0.0) || !(b < a / 2.0)) {
        throw Error(ErrorKind::InvalidInput, "pulse train needs a > 0 and 0 < b < a/2");
    }
    if (coeffs.empty()) throw Error(ErrorKind::InvalidInput, "pulse train needs coefficients");
}

int PulseTrainModel::k_min() const { return coeffs.begin()->first; }
int PulseTrainModel::k_max() const { return coeffs.rbegin()->first; }

void GaussianMixtureModel::validate() const {
    if (nodes.size() != coeffs.size() || nodes.empty()) {
        throw Error(ErrorKind::InvalidInput, "Gaussian mixture needs matching non-empty nodes/coeffs");
    }
    RVec sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::InvalidInput, "Gaussian mixture nodes must be distinct");
    }
    for (const auto& c : coeffs) {
        if (c == cplx{0.0, 0.0}) throw Error(ErrorKind::InvalidInput, "zero mixture coefficient");
    }
}

Signal evaluate_model(const HermiteModel& m, const Grid& grid) {
    m.validate();
    grid.validate();
    CVec s(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const RVec h = hermite_functions(m.degree(), grid.at(j));
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k < m.coeffs.size(); ++k) acc += m.coeffs[k] * h[k];
        s[j] = acc;
    }
    return Signal(grid, std::move(s));
}

Signal evaluate_model(const PulseTrainModel& m, const Grid& grid) {
    m.validate();
    grid.validate();
    CVec s(grid.n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double t = grid.at(j);
        for (const auto& [k, c] : m.coeffs) {
            const double lo = m.a * k;
            if (t >= lo && t < lo + m.b) s[j] += c;
        }
    }
    return Signal(grid, std::move(s));
}

Signal evaluate_model(const GaussianMixtureModel& m, const Grid& grid) {
    m.validate();
    grid.validate();
    CVec s(grid.n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < grid.n; ++j) {
        for (std::size_t k = 0; k < m.nodes.size(); ++k) s[j] += m.coeffs[k] * gaussian(grid.at(j) - m.nodes[k]);
    }
    return Signal(grid, std::move(s));
}

Signal evaluate_model(const Model& m, const Grid& grid) {
    return std::visit([&](const auto& model) { return evaluate_model(model, grid); }, m);
}

}  // namespace frpr
