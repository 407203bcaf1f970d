#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frpr/ambiguity.hpp"
#include "frpr/error.hpp"
#include "frpr/metrics.hpp"
#include "frpr/models.hpp"

using namespace frpr;

namespace {

const Grid kGrid = Grid::symmetric(8.0, 1024);

Signal random_hermite(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> nd;
    HermiteModel m;
    for (int k = 0; k <= degree; ++k) m.coeffs.emplace_back(nd(rng), nd(rng));
    return evaluate_model(Model{m}, kGrid);
}

cplx point(const Signal& u, const Signal& v, double x, double y) {
    return ambiguity(u, v, Grid{x, 1.0, 2}, Grid{y, 1.0, 2}).at(0, 0);
}

}  // namespace

TEST(Ambiguity, OriginIsEnergy) {
    std::mt19937_64 rng(1);
    const Signal u = random_hermite(rng, 6);
    const cplx a = point(u, u, 0.0, 0.0);
    EXPECT_NEAR(a.real(), u.norm2(), 1e-8 * u.norm2());
    EXPECT_NEAR(a.imag(), 0.0, 1e-12);
}

TEST(Ambiguity, GaussianClosedForm) {
    const Signal g = evaluate_model(Model{GaussianMixtureModel{{0.0}, {1.0}}}, kGrid);
    const auto a = ambiguity(g, g, Grid::symmetric(3.0, 24), Grid::symmetric(3.0, 20));
    for (std::size_t ix = 0; ix < a.x_axis.n; ++ix)
        for (std::size_t iy = 0; iy < a.y_axis.n; ++iy)
            EXPECT_NEAR(std::abs(a.at(ix, iy) - ambiguity_gaussian(a.x_axis.at(ix), a.y_axis.at(iy))), 0.0, 1e-7);
}

TEST(Ambiguity, IndicatorClosedForm) {
    // exact piecewise integration of the pulse against the closed form
    const PulseTrainModel m{1.0, 0.4, {{0, 1.0}}};
    const auto a = ambiguity(m, Grid{-0.4, 0.05, 17}, Grid{-9.95, 0.9, 23});
    for (std::size_t ix = 0; ix < a.x_axis.n; ++ix)
        for (std::size_t iy = 0; iy < a.y_axis.n; ++iy)
            EXPECT_NEAR(std::abs(a.at(ix, iy) - ambiguity_indicator(0.4, a.x_axis.at(ix), a.y_axis.at(iy))), 0.0, 1e-6);
    // and the sampled indicator approaches it at the grid resolution
    const Grid fine = Grid::symmetric(1.0, 1 << 14);
    const Signal u = evaluate_model(Model{m}, fine);
    EXPECT_NEAR(std::abs(point(u, u, 0.1, 1.3) - ambiguity_indicator(0.4, 0.1, 1.3)), 0.0, 2.0 * fine.dt);
}

TEST(Ambiguity, SliceAtZeroIsTransformOfPower) {
    std::mt19937_64 rng(2);
    const Signal u = random_hermite(rng, 4);
    const LineSlice s = slice_from_magnitude(measure_magnitude(u, 0.0));
    for (std::size_t j = 400; j < 624; j += 16) {
        EXPECT_NEAR(std::abs(s.values[j] - point(u, u, 0.0, s.t_axis.at(j))), 0.0, 1e-9);
    }
}

TEST(Ambiguity, GaussianSliceAnyAngle) {
    const Signal g = evaluate_model(Model{GaussianMixtureModel{{0.0}, {1.0}}}, kGrid);
    for (double alpha : {0.3, 1.0, 2.2, -0.7}) {
        const LineSlice s = slice_from_magnitude(measure_magnitude(g, alpha));
        for (std::size_t j = 0; j < s.t_axis.n; j += 7) {
            const double t = s.t_axis.at(j);
            EXPECT_NEAR(std::abs(s.values[j] - std::exp(-kPi * t * t / 2.0) / std::sqrt(2.0)), 0.0, 1e-6);
        }
    }
}

TEST(Ambiguity, KeyIdentityOnRandomHermite) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        const Signal u = random_hermite(rng, 5);
        for (double alpha : {0.4, 1.1, 2.0}) {
            const LineSlice s = slice_from_magnitude(measure_magnitude(u, alpha));
            for (std::size_t j = 448; j < 576; j += 9) {
                const double t = s.t_axis.at(j);
                const cplx ref = point(u, u, -t * std::sin(alpha), t * std::cos(alpha));
                EXPECT_NEAR(std::abs(s.values[j] - ref), 0.0, 1e-5) << alpha << " " << t;
            }
        }
    }
}

TEST(Ambiguity, RotationProperty) {
    std::mt19937_64 rng(4);
    const Signal u = random_hermite(rng, 4);
    for (double alpha : {0.5, 1.0}) {
        const Signal f = frft_chirp(u, alpha);
        for (auto [x, y] : {std::pair{0.3, -0.2}, std::pair{-1.1, 0.7}, std::pair{0.0, 1.4}}) {
            const cplx lhs = point(f, f, x, y);
            const cplx rhs = point(u, u, x * std::cos(alpha) - y * std::sin(alpha), x * std::sin(alpha) + y * std::cos(alpha));
            EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-4);
        }
    }
}

TEST(Ambiguity, NormAndPeak) {
    std::mt19937_64 rng(5);
    const Signal u = random_hermite(rng, 3), v = random_hermite(rng, 2);
    const Grid ax = Grid::symmetric(7.0, 224);
    const auto a = ambiguity(u, v, ax, ax);
    double s = 0.0;
    for (const auto& c : a.values) s += std::norm(c);
    s *= ax.dt * ax.dt;
    EXPECT_NEAR(std::sqrt(s), u.norm() * v.norm(), 1e-4 * u.norm() * v.norm());

    const auto b = ambiguity(u, u, ax, ax);
    double peak = 0.0;
    for (const auto& c : b.values) peak = std::max(peak, std::abs(c));
    EXPECT_NEAR(peak, std::abs(b.at(112, 112)), 1e-12);
}

TEST(Ambiguity, TimeFrequencyShift) {
    std::mt19937_64 rng(6);
    const Signal u = random_hermite(rng, 3), v = random_hermite(rng, 3);
    const double a = 0.25, w = 0.5, b = -0.125, eta = -0.25;
    auto shifted = [](const Signal& s, double shift, double freq) {
        CVec out(s.size());
        const long long m = std::llround(shift / s.grid.dt);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const long long q = static_cast<long long>(j) - m;
            if (q >= 0 && q < static_cast<long long>(s.size())) out[j] = s.samples[static_cast<std::size_t>(q)];
            out[j] *= std::polar(1.0, 2.0 * kPi * freq * s.grid.at(j));
        }
        return Signal(s.grid, out);
    };
    const Signal us = shifted(u, a, w), vs = shifted(v, b, eta);
    for (auto [x, y] : {std::pair{0.2, 0.1}, std::pair{-0.6, 0.9}}) {
        const cplx phase = std::polar(1.0, kPi * ((w + eta) * x + (a + b) * (w - eta - y)));
        const cplx rhs = phase * point(u, v, x - (a - b), y - (w - eta));
        EXPECT_NEAR(std::abs(point(us, vs, x, y) - rhs), 0.0, 1e-5);
    }
}

TEST(Ambiguity, SupportTruncation) {
    // u lives on [-1, 1), so lags of 2 or more see no overlap
    const Signal u = evaluate_model(Model{GaussianMixtureModel{{0.0}, {1.0}}}, Grid::symmetric(1.0, 256));
    const Grid xs{2.0, u.grid.dt, 8};
    const auto A = ambiguity(u, u, xs, Grid::symmetric(10.0, 64));
    for (const auto& c : A.values) EXPECT_LE(std::abs(c), 1e-10);
}

TEST(Inversion, GaussianAndRandomHermite) {
    const Grid xs{0.0, kGrid.dt, 2};
    const Signal h0 = evaluate_model(Model{HermiteModel{{1.0}}}, kGrid);
    const auto r0 = invert_ambiguity(ambiguity(h0, h0, xs, kGrid.dual()), kGrid);
    EXPECT_LE(phase_invariant_distance(h0, r0.signal), 1e-6);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        const Signal u = random_hermite(rng, 5);
        const auto r = invert_ambiguity(ambiguity(u, u, xs, kGrid.dual()), kGrid);
        EXPECT_LE(phase_invariant_distance(u, r.signal), 1e-5);
    }
}

TEST(Inversion, ZeroAndDisconnected) {
    const Grid g = Grid::symmetric(2.0, 128);
    const Grid xs{0.0, g.dt, 2};
    const Signal z(g, CVec(g.n));
    const auto rz = invert_ambiguity(ambiguity(z, z, xs, g.dual()), g);
    for (const auto& c : rz.signal.samples) EXPECT_EQ(c, cplx(0.0));

    // two pulses separated by a long zero run
    const Signal p = evaluate_model(Model{PulseTrainModel{1.0, 0.25, {{-1, 1.0}, {1, cplx(0.0, 1.0)}}}}, g);
    EXPECT_THROW(invert_ambiguity(ambiguity(p, p, xs, g.dual()), g), Error);
    InversionOptions opt;
    opt.allow_disconnected = true;
    const auto rp = invert_ambiguity(ambiguity(p, p, xs, g.dual()), g, opt);
    EXPECT_EQ(rp.segments.size(), 2u);
}

TEST(Inversion, RankOneFromFarRows) {
    const Grid g = Grid::symmetric(4.0, 128);
    std::mt19937_64 rng(8);
    std::normal_distribution<double> nd;
    HermiteModel m;
    for (int k = 0; k <= 3; ++k) m.coeffs.emplace_back(nd(rng), nd(rng));
    const Signal u = evaluate_model(Model{m}, g);
    const Grid xs{0.0, g.dt, g.n};
    const auto A = ambiguity(u, u, xs, g.dual());
    const Signal r = invert_ambiguity_rank1(A, g, 3.0 * g.dt);
    EXPECT_LE(phase_invariant_distance(u, r), 1e-6);
}
