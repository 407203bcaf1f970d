#include <gtest/gtest.h>

#include <random>

#include "frpr/error.hpp"
#include "frpr/hermite_recovery.hpp"
#include "frpr/metrics.hpp"

using namespace frpr;

namespace {

HermiteModel random_model(int N, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    HermiteModel m;
    for (int k = 0; k <= N; ++k) m.coeffs.emplace_back(nd(rng), nd(rng));
    return m;
}

const Grid kGrid = Grid::symmetric(8.0, 1024);

}  // namespace

TEST(HermiteRecovery, GroundStateOnly) {
    HermiteModel m{{cplx{0.0, 1.0}}};
    const auto ma = measure_model_magnitude(m, 0.0, kGrid);
    const auto mb = measure_model_magnitude(m, 1.0, kGrid);
    const auto r = recover_hermite(ma, mb, 0);
    ASSERT_EQ(r.model.coeffs.size(), 1u);
    EXPECT_NEAR(std::abs(r.model.coeffs[0] - 1.0), 0.0, 1e-8);
}

TEST(HermiteRecovery, RandomDegreeFive) {
    const HermiteModel m = random_model(5, 7);
    const auto r = recover_hermite(measure_model_magnitude(m, 0.0, kGrid), measure_model_magnitude(m, 1.0, kGrid), 5);
    EXPECT_LT(aligned_coefficient_error(r.model.coeffs, m.coeffs), 1e-5);
    EXPECT_EQ(r.diagnostics.degrees_consumed, (std::vector<int>{10, 9, 8, 7, 6, 5}));
}

TEST(HermiteRecovery, RandomDegreeEightGeneralAngles) {
    const HermiteModel m = random_model(8, 11);
    const auto r = recover_hermite(measure_model_magnitude(m, 0.4, kGrid), measure_model_magnitude(m, 1.3, kGrid), 8);
    EXPECT_LT(aligned_coefficient_error(r.model.coeffs, m.coeffs), 1e-5);
}

TEST(HermiteRecovery, InadmissiblePairIsRefusedAndAmbiguous) {
    const int N = 2;
    const cplx c{1.0 / 3.0, 2.0 / 3.0};
    HermiteModel u{{c, 0.0, 1.0}}, v{{std::conj(c), 0.0, 1.0}};
    const double alpha = 0.0, beta = kPi / 2.0;  // e^{i j gamma} = -1
    const auto ua = measure_model_magnitude(u, alpha, kGrid), ub = measure_model_magnitude(u, beta, kGrid);
    const auto va = measure_model_magnitude(v, alpha, kGrid), vb = measure_model_magnitude(v, beta, kGrid);
    double dev = 0.0;
    for (std::size_t i = 0; i < kGrid.n; ++i) {
        dev = std::max({dev, std::abs(ua.magnitudes[i] - va.magnitudes[i]), std::abs(ub.magnitudes[i] - vb.magnitudes[i])});
    }
    EXPECT_LT(dev, 1e-8);
    EXPECT_GT(phase_invariant_distance(evaluate_model(u, kGrid), evaluate_model(v, kGrid)), 0.1);
    try {
        recover_hermite(ua, ub, N);
        FAIL() << "expected an angle-constraint error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AngleConstraint);
    }
}

TEST(AngleConstraint, Examples) {
    EXPECT_TRUE(check_angle_constraint(kPi / 2.0, 1).admissible);
    const auto r2 = check_angle_constraint(kPi / 2.0, 2);
    EXPECT_FALSE(r2.admissible);
    EXPECT_EQ(*r2.min_degree_blocked, 2);
    EXPECT_TRUE(check_angle_constraint(1.0, 20).admissible);
    EXPECT_EQ(*check_angle_constraint(kPi / 3.0, 3).min_degree_blocked, 3);
    EXPECT_TRUE(is_quarter_turn(3.0 * kPi / 2.0));
    EXPECT_FALSE(is_quarter_turn(0.9));
}
