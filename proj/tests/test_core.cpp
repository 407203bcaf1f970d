#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frpr/error.hpp"
#include "frpr/hermite.hpp"
#include "frpr/matrix_pencil.hpp"
#include "frpr/metrics.hpp"
#include "frpr/models.hpp"
#include "frpr/polynomial.hpp"
#include "frpr/rank1.hpp"
#include "frpr/special.hpp"

using namespace frpr;

namespace {

Signal random_signal(std::mt19937_64& rng, const Grid& g) {
    std::normal_distribution<double> nd;
    CVec s(g.n);
    for (auto& c : s) c = {nd(rng), nd(rng)};
    return Signal(g, s);
}

// Rodrigues: h_k = 2^{1/4} / sqrt(2^k k!) (-1/sqrt(2 pi))^k e^{pi t^2} d^k/dt^k e^{-2 pi t^2},
// with d^k e^{-2 pi t^2} = P_k e^{-2 pi t^2}, P_{k+1} = P_k' - 4 pi t P_k
double rodrigues(int k, double t) {
    std::vector<long double> p{1.0L};
    for (int q = 0; q < k; ++q) {
        std::vector<long double> next(p.size() + 1, 0.0L);
        for (std::size_t i = 1; i < p.size(); ++i) next[i - 1] += static_cast<long double>(i) * p[i];
        for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] -= 4.0L * static_cast<long double>(kPi) * p[i];
        p = next;
    }
    long double v = 0.0L;
    for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    long double norm = std::pow(2.0L, 0.25L) / std::sqrt(std::pow(2.0L, k) * std::tgamma(k + 1.0L));
    norm *= std::pow(-1.0L / std::sqrt(2.0L * static_cast<long double>(kPi)), static_cast<long double>(k));
    return static_cast<double>(norm * v * std::exp(-static_cast<long double>(kPi) * t * t));
}

}  // namespace

TEST(Grid, ValidationAndDual) {
    EXPECT_THROW((Grid{0.0, 0.0, 4}).validate(), Error);
    EXPECT_THROW((Grid{0.0, 1.0, 1}).validate(), Error);
    EXPECT_THROW((Grid{NAN, 1.0, 4}).validate(), Error);
    const Grid g = Grid::symmetric(8.0, 1024);
    EXPECT_DOUBLE_EQ(g.t0, -8.0);
    EXPECT_DOUBLE_EQ(g.dt, 1.0 / 64.0);
    EXPECT_DOUBLE_EQ(g.at(512), 0.0);
    const Grid d = g.dual();
    EXPECT_DOUBLE_EQ(d.dt, 1.0 / 16.0);
    EXPECT_DOUBLE_EQ(d.at(512), 0.0);
    EXPECT_THROW(Signal(g, CVec(3)), Error);
}

TEST(Models, EvaluateExamples) {
    const Grid g = Grid::symmetric(6.0, 768);
    const Signal h0 = evaluate_model(Model{HermiteModel{{1.0}}}, g);
    for (std::size_t j = 0; j < g.n; j += 37) EXPECT_NEAR(h0.samples[j].real(), std::pow(2.0, 0.25) * gaussian(g.at(j)), 1e-15);

    const Signal p = evaluate_model(Model{PulseTrainModel{1.0, 0.25, {{0, 1.0}}}}, Grid{-0.5, 0.125, 12});
    for (std::size_t j = 0; j < 12; ++j) {
        const double t = p.grid.at(j);
        EXPECT_EQ(p.samples[j], cplx(t >= 0.0 && t < 0.25 ? 1.0 : 0.0)) << t;
    }

    // integral of e^{-2 pi t^2} = 2^{-1/2} by Gauss-Legendre on [-6, 6]
    const auto [x, w] = gauss_legendre(200);
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) q += 6.0 * w[i] * std::pow(gaussian(6.0 * x[i]), 2);
    const Signal gm = evaluate_model(Model{GaussianMixtureModel{{0.0}, {1.0}}}, g);
    EXPECT_NEAR(gm.norm(), std::sqrt(q), 1e-12);
    EXPECT_NEAR(gm.norm(), std::pow(2.0, -0.25), 1e-12);
}

TEST(Models, Validation) {
    EXPECT_THROW((HermiteModel{{1.0, 0.0}}).validate(), Error);
    EXPECT_THROW((PulseTrainModel{1.0, 0.5, {{0, 1.0}}}).validate(), Error);
    EXPECT_THROW((GaussianMixtureModel{{0.1, 0.1}, {1.0, 1.0}}).validate(), Error);
    EXPECT_THROW((GaussianMixtureModel{{0.1}, {1.0, 1.0}}).validate(), Error);
    EXPECT_THROW((GaussianMixtureModel{{0.1}, {0.0}}).validate(), Error);
}

TEST(Models, LinearInCoefficients) {
    const Grid g = Grid::symmetric(3.0, 64);
    const cplx s{0.3, -1.2};
    auto check = [&](const Model& m1, const Model& m2, const Model& sum) {
        const Signal a = evaluate_model(m1, g), b = evaluate_model(m2, g), c = evaluate_model(sum, g);
        for (std::size_t j = 0; j < g.n; ++j) EXPECT_NEAR(std::abs(c.samples[j] - (a.samples[j] + s * b.samples[j])), 0.0, 1e-13);
    };
    check(HermiteModel{{1.0, 2.0, 1.0}}, HermiteModel{{0.0, 1.0, cplx(0, 1)}}, HermiteModel{{1.0, 2.0 + s, 1.0 + s * cplx(0, 1)}});
    check(PulseTrainModel{1.0, 0.3, {{0, 1.0}, {1, 2.0}}}, PulseTrainModel{1.0, 0.3, {{0, 1.0}, {1, -1.0}}},
          PulseTrainModel{1.0, 0.3, {{0, 1.0 + s}, {1, 2.0 - s}}});
    check(GaussianMixtureModel{{-0.4, 0.5}, {1.0, 2.0}}, GaussianMixtureModel{{-0.4, 0.5}, {3.0, 1.0}},
          GaussianMixtureModel{{-0.4, 0.5}, {1.0 + 3.0 * s, 2.0 + s}});
}

TEST(Hermite, PolynomialCoefficients) {
    const auto H = hermite_polynomial_coeffs(12);
    ASSERT_EQ(H.size(), 13u);
    EXPECT_DOUBLE_EQ(H[0][0], std::pow(2.0, 0.25));
    for (const auto& p : H) EXPECT_GT(p.back(), 0.0);
    for (int k = 0; k <= 10; ++k) {
        for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
            const double ref = rodrigues(k, t);
            EXPECT_NEAR(polyval(H[static_cast<std::size_t>(k)], t) * gaussian(t), ref, 1e-10) << k << " " << t;
            EXPECT_NEAR(hermite_functions(10, t)[static_cast<std::size_t>(k)], ref, 1e-10);
        }
    }
    EXPECT_THROW(hermite_polynomial_coeffs(65), Error);
}

TEST(Hermite, Orthonormal) {
    const Grid g = Grid::symmetric(8.0, 1024);
    std::vector<RVec> h;
    for (int k = 0; k <= 12; ++k) h.push_back(hermite_function(k, g));
    for (int j = 0; j <= 12; ++j) {
        for (int k = 0; k <= 12; ++k) {
            double s = 0.0;
            for (std::size_t q = 0; q < g.n; ++q) s += h[static_cast<std::size_t>(j)][q] * h[static_cast<std::size_t>(k)][q];
            EXPECT_NEAR(s * g.dt, j == k ? 1.0 : 0.0, 1e-8);
        }
    }
}

TEST(Metrics, PhaseInvariantDistance) {
    std::mt19937_64 rng(5);
    const Grid g{0.0, 0.1, 16};
    const Signal u = random_signal(rng, g);
    EXPECT_EQ(phase_invariant_distance(u, u), 0.0);
    Signal r = u;
    for (auto& c : r.samples) c *= std::polar(1.0, 2.1);
    EXPECT_LT(phase_invariant_distance(u, r), 1e-14);

    // dense phase grid oracle
    const Signal v = random_signal(rng, g);
    double best = 1e300, nu = 0.0;
    for (const auto& c : u.samples) nu += std::norm(c);
    const int M = 1000000;
    for (int m = 0; m < M; ++m) {
        const cplx c = std::polar(1.0, 2.0 * kPi * m / M);
        double s = 0.0;
        for (std::size_t j = 0; j < g.n; ++j) s += std::norm(u.samples[j] - c * v.samples[j]);
        best = std::min(best, s);
    }
    EXPECT_NEAR(phase_invariant_distance(u, v), std::sqrt(best / nu), 1e-9);

    const Signal z(g, CVec(g.n));
    EXPECT_EQ(phase_invariant_distance(z, z), 0.0);
    EXPECT_THROW(phase_invariant_distance(u, Signal(Grid{0.0, 0.2, 16}, u.samples)), Error);
}

TEST(Metrics, Pseudometric) {
    std::mt19937_64 rng(6);
    const Grid g{0.0, 0.1, 12};
    for (int trial = 0; trial < 50; ++trial) {
        const Signal a = random_signal(rng, g), b = random_signal(rng, g), c = random_signal(rng, g);
        // the closed form is normalised by the first argument; compare unnormalised distances
        auto d = [](const Signal& x, const Signal& y) { return phase_invariant_distance(x, y) * x.norm(); };
        EXPECT_NEAR(d(a, b), d(b, a), 1e-12);
        EXPECT_LE(d(a, c), d(a, b) + d(b, c) + 1e-12);
    }
}

TEST(Polynomial, RootsRoundTrip) {
    const CVec roots = {{0.5, 0.1}, {-2.0, 0.3}, {0.0, 1.0}, {1.5, -1.5}};
    const CVec p = polynomial_from_roots(roots, {2.0, -1.0});
    CVec r = polynomial_roots(p);
    ASSERT_EQ(r.size(), 4u);
    for (const auto& z : roots) {
        double best = 1e300;
        for (const auto& w : r) best = std::min(best, std::abs(z - w));
        EXPECT_LT(best, 1e-12);
    }
    EXPECT_NEAR(std::abs(polyval(p, roots[2])), 0.0, 1e-12);
}

TEST(MatrixPencil, RecoversExponentialSum) {
    const CVec z = {{-0.3, 2.0}, {-0.1, -1.0}, {0.2, 0.5}};
    const CVec lam = {{1.0, 0.0}, {0.5, -0.5}, {0.0, 0.25}};
    const double t0 = -1.0, dt = 0.05;
    CVec s(100);
    for (std::size_t q = 0; q < s.size(); ++q)
        for (std::size_t k = 0; k < 3; ++k) s[q] += lam[k] * std::exp(z[k] * (t0 + dt * static_cast<double>(q)));
    const auto r = matrix_pencil(s, t0, dt);
    ASSERT_EQ(r.order, 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < 3; ++j)
            if (std::abs(r.exponents[j] - z[k]) < std::abs(r.exponents[best] - z[k])) best = j;
        EXPECT_LT(std::abs(r.exponents[best] - z[k]), 1e-9);
        EXPECT_LT(std::abs(r.amplitudes[best] - lam[k]), 1e-9);
    }
}

TEST(RankOne, FactorOfOuterProduct) {
    const CVec v = {{1.0, 2.0}, {-0.5, 0.0}, {0.0, 3.0}};
    CVec m(9);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m[r * 3 + c] = v[r] * std::conj(v[c]);
    const auto f = rank_one_factor(m, 3);
    EXPECT_NEAR(f.lambda2, 0.0, 1e-12);
    const Grid g{0.0, 1.0, 3};
    EXPECT_LT(phase_invariant_distance(Signal(g, v), Signal(g, f.vector)), 1e-14);
}
