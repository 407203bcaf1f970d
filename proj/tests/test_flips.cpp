#include <gtest/gtest.h>

#include <random>

#include "frpr/error.hpp"
#include "frpr/flips.hpp"
#include "frpr/frft.hpp"
#include "frpr/metrics.hpp"
#include "frpr/polynomial.hpp"

using namespace frpr;

namespace {

CVec random_sequence(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> nd;
    CVec u(n);
    for (auto& c : u) c = {nd(rng), nd(rng)};
    return u;
}

double seq_distance(const CVec& a, const CVec& b) {
    const Grid g{0.0, 1.0, a.size()};
    return phase_invariant_distance(Signal(g, a), Signal(g, b));
}

const Grid kFine = Grid::symmetric(4.0, 4001);

}  // namespace

TEST(Flips, EmptyMaskReturnsInput) {
    std::mt19937_64 rng(1);
    const CVec u = random_sequence(rng, 6);
    const auto set = enumerate_flips(u, 0.8, std::uint64_t{0});
    ASSERT_EQ(set.solutions.size(), 1u);
    EXPECT_LT(seq_distance(set.solutions[0], u), 1e-10);
}

TEST(Flips, LengthFourGivesEightDistinctSolutions) {
    std::mt19937_64 rng(2);
    const CVec u = random_sequence(rng, 4);
    const auto set = enumerate_flips(u, 0.8);
    ASSERT_EQ(set.flippable.size(), 3u);
    ASSERT_EQ(set.solutions.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) EXPECT_GT(seq_distance(set.solutions[i], set.solutions[j]), 1e-3);
}

TEST(Flips, MagnitudesAgreeOnFineGrid) {
    std::mt19937_64 rng(3);
    for (std::size_t n : {2u, 5u, 8u}) {
        const CVec u = random_sequence(rng, n);
        const auto set = enumerate_flips(u, 0.8, {}, 0.5);
        EXPECT_EQ(set.solutions.size(), std::size_t{1} << (n - 1));
        const RVec ref = delta_train_frft_magnitude(u, 0.8, 0.5, kFine);
        double peak = 0.0;
        for (double v : ref) peak = std::max(peak, v);
        for (const auto& v : set.solutions) {
            const RVec m = delta_train_frft_magnitude(v, 0.8, 0.5, kFine);
            double dev = 0.0;
            for (std::size_t q = 0; q < m.size(); ++q) dev = std::max(dev, std::abs(m[q] - ref[q]));
            EXPECT_LE(dev, 1e-7 * peak);
        }
    }
}

TEST(Flips, DeltaTrainMatchesNarrowPulses) {
    // unit-area pulses of width b approach the delta train as b -> 0
    const CVec u = {{1.0, 0.5}, {-0.3, 0.2}, {0.7, -1.1}};
    const double b = 1e-5;
    PulseTrainModel p;
    p.a = 1.0;
    p.b = b;
    for (int k = 0; k < 3; ++k) p.coeffs[k] = u[static_cast<std::size_t>(k)] / b;
    const Grid g = Grid::symmetric(3.0, 61);
    const Signal f = frft_pulse_train(p, 0.8, g);
    const RVec m = delta_train_frft_magnitude(u, 0.8, 1.0, g);
    for (std::size_t q = 0; q < g.n; ++q) EXPECT_NEAR(std::abs(f.samples[q]), m[q], 1e-3 * (1.0 + m[q]));
}

TEST(Flips, UnitCircleRootIsNotFlipped) {
    // (z - e^{0.3i})(z - 2) after chirping back
    const double alpha = 0.8, step = 1.0;
    const CVec poly = polynomial_from_roots({std::polar(1.0, 0.3), cplx(2.0, 0.0)}, 1.0);
    const CVec u = chirp_sequence(poly, alpha, step, -1);
    const auto set = enumerate_flips(u, alpha, {}, step);
    EXPECT_EQ(set.flippable.size(), 1u);
    EXPECT_EQ(set.solutions.size(), 2u);
}

TEST(Flips, ChirpRoundTrip) {
    std::mt19937_64 rng(4);
    const CVec u = random_sequence(rng, 7);
    const CVec v = chirp_sequence(chirp_sequence(u, 1.1, 0.3, +1), 1.1, 0.3, -1);
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_LT(std::abs(u[j] - v[j]), 1e-14);
}

TEST(Flips, Errors) {
    EXPECT_THROW(enumerate_flips(CVec(17, cplx(1.0)), 0.8), Error);
    try {
        enumerate_flips(CVec(17, cplx(1.0)), 0.8);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EnumerationCap);
    }
    EXPECT_THROW(enumerate_flips(CVec{1.0}, 0.8), Error);
    EXPECT_THROW(enumerate_flips(CVec{1.0, 2.0}, 0.8, std::uint64_t{2}), Error);
    EXPECT_THROW(enumerate_flips(CVec{1.0, 2.0}, 0.0), Error);
}
