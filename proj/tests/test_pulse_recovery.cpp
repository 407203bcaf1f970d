#include <gtest/gtest.h>

#include <random>

#include "frpr/ambiguity.hpp"
#include "frpr/error.hpp"
#include "frpr/metrics.hpp"
#include "frpr/pulse_recovery.hpp"

using namespace frpr;

namespace {

PulseTrainModel random_train(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    PulseTrainModel m;
    m.a = 1.0;
    m.b = 0.3;
    for (int k = 0; k < count; ++k) m.coeffs[k] = cplx{nd(rng), nd(rng)};
    return m;
}

CVec coeff_vector(const PulseTrainModel& m, int k_min, int k_max) {
    CVec v;
    for (int k = k_min; k <= k_max; ++k) {
        auto it = m.coeffs.find(k);
        v.push_back(it == m.coeffs.end() ? cplx{0.0, 0.0} : it->second);
    }
    return v;
}

const Grid kMeasureGrid{-1024.0, 1.0 / 32.0, 1u << 16};

}  // namespace

TEST(PulseRecovery, SinglePulse) {
    PulseTrainModel m{1.0, 0.25, {{0, {1.0, 0.0}}}};
    const auto meas = measure_model_magnitude(m, 0.9, kMeasureGrid);
    const auto r = recover_pulse_train(meas, 1.0, 0.25, 0, 0);
    EXPECT_NEAR(std::abs(r.model.coeffs.at(0) - 1.0), 0.0, 1e-6);
}

TEST(PulseRecovery, SixRandomCoefficients) {
    const PulseTrainModel m = random_train(6, 3);
    const auto meas = measure_model_magnitude(m, 0.9, kMeasureGrid);
    const auto r = recover_pulse_train(meas, 1.0, 0.3, 0, 5);
    const double err = aligned_coefficient_error(coeff_vector(r.model, 0, 5), coeff_vector(m, 0, 5));
    EXPECT_LT(err, 1e-5);
}

TEST(PulseRecovery, QuarterTurnRefused) {
    const PulseTrainModel m = random_train(3, 5);
    const auto meas = measure_model_magnitude(m, kPi / 2.0, kMeasureGrid);
    try {
        recover_pulse_train(meas, 1.0, 0.3, 0, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AngleConstraint);
    }
}

TEST(PulseRecovery, IndicatorAmbiguityClosedForm) {
    const double b = 0.4;
    PulseTrainModel m{1.0, b, {{0, {1.0, 0.0}}}};
    const Grid xs{-b, b / 20.0, 41}, ys{-10.0, 0.37, 55};
    const auto A = ambiguity(m, xs, ys);
    double err = 0.0;
    for (std::size_t ix = 0; ix < xs.n; ++ix) {
        for (std::size_t iy = 0; iy < ys.n; ++iy) {
            err = std::max(err, std::abs(A.at(ix, iy) - ambiguity_indicator(b, xs.at(ix), ys.at(iy))));
        }
    }
    EXPECT_LT(err, 1e-12);
}
