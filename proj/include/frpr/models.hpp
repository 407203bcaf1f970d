#pragma once

#include <cmath>
#include <map>
#include <variant>

#include "frpr/grid.hpp"

namespace frpr {

/// sum_k c_k h_k, degree = coeffs.size() - 1.
struct HermiteModel {
    CVec coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void validate() const;
};

/// sum_k a_k chi_[a k, a k + b), 0 < b < a/2.
struct PulseTrainModel {
    double a = 1.0;
    double b = 0.25;
    std::map<int, cplx> coeffs;

    void validate() const;
    int k_min() const;
    int k_max() const;
};

/// sum_j c_j exp(-pi (t - t_j)^2).
struct GaussianMixtureModel {
    RVec nodes;
    CVec coeffs;

    void validate() const;
};

using Model = std::variant<HermiteModel, PulseTrainModel, GaussianMixtureModel>;

Signal evaluate_model(const HermiteModel& m, const Grid& grid);
Signal evaluate_model(const PulseTrainModel& m, const Grid& grid);
Signal evaluate_model(const GaussianMixtureModel& m, const Grid& grid);
Signal evaluate_model(const Model& m, const Grid& grid);

/// exp(-pi t^2).
inline double gaussian(double t) { return std::exp(-kPi * t * t); }

}  // namespace frpr
