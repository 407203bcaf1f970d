#include <gtest/gtest.h>

#include <cmath>

#include "frpr/error.hpp"
#include "frpr/fft.hpp"
#include "frpr/frft.hpp"
#include "frpr/hermite.hpp"
#include "frpr/metrics.hpp"
#include "frpr/special.hpp"

using namespace frpr;

namespace {

Grid test_grid() { return Grid::symmetric(8.0, 512); }

Signal two_gaussians(const Grid& g) {
    CVec s(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double t = g.at(j);
        s[j] = std::exp(-kPi * (t - 0.7) * (t - 0.7)) + cplx{0.3, -0.5} * std::exp(-2.0 * kPi * (t + 1.1) * (t + 1.1));
    }
    return Signal(g, s);
}

}  // namespace

TEST(Frft, ReduceAngle) {
    EXPECT_DOUBLE_EQ(reduce_angle(0.0), 0.0);
    EXPECT_NEAR(reduce_angle(3.0 * kPi / 2.0), -kPi / 2.0, 1e-15);
    EXPECT_NEAR(reduce_angle(-kPi), kPi, 1e-15);
    EXPECT_THROW(reduce_angle(NAN), Error);
}

TEST(Frft, NormalisationIsPrincipalRoot) {
    for (double a : {0.3, 1.2, 2.9, -0.4, -2.0}) {
        const cplx want = std::sqrt(cplx{1.0, -std::cos(a) / std::sin(a)});
        EXPECT_LT(std::abs(frft_normalisation(a) - want), 1e-13) << a;
    }
}

TEST(Frft, HermiteEigenfunctions) {
    const Grid g = test_grid();
    for (int k : {0, 1, 2, 5, 9}) {
        const RVec hr = hermite_function(k, g);
        const Signal h(g, CVec(hr.begin(), hr.end()));
        for (double a : {0.4, kPi / 2.0, 2.2, -1.0, 0.0, kPi, 5e-4}) {
            const Signal f = frft_any(h, a);
            const Signal want = scaled(h, std::polar(1.0, -k * a));
            EXPECT_LT(relative_l2(f, want), 1e-10) << "k=" << k << " a=" << a;
        }
    }
}

TEST(Frft, QuarterTurnIsFourierTransform) {
    const Grid g = test_grid();
    const Signal u = two_gaussians(g);
    const CVec ft = fourier_transform(u, g);
    const Signal f = frft_chirp(u, kPi / 2.0);
    EXPECT_LT(relative_l2(f, Signal(g, ft)), 1e-12);
}

TEST(Frft, MatchesDirectQuadrature) {
    const Grid g = Grid::symmetric(6.0, 200);
    const Signal u = two_gaussians(g);
    for (double a : {0.2, 1.0, 2.5, -0.7}) {
        EXPECT_LT(relative_l2(frft_chirp(u, a), frft_quadrature_oracle(u, a, g)), 1e-11) << a;
    }
}

TEST(Frft, UnitarySemigroupAndHermiteRoute) {
    const Grid g = test_grid();
    const Signal u = two_gaussians(g);
    const double a = 0.9, b = 1.7;
    const Signal fa = frft_chirp(u, a);
    EXPECT_NEAR(fa.norm(), u.norm(), 1e-10 * u.norm());
    EXPECT_LT(relative_l2(frft_chirp(fa, b), frft_chirp(u, a + b)), 1e-9);
    const auto hr = frft_hermite(u, a, 60);
    EXPECT_LT(hr.residual, 1e-8);
    EXPECT_LT(relative_l2(hr.transform, fa), 1e-8);
}

TEST(Frft, ShiftRule) {
    const Grid g = test_grid();
    const double s = 0.6, a = 0.8;
    CVec base(g.n), moved(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        base[j] = std::exp(-kPi * g.at(j) * g.at(j));
        moved[j] = std::exp(-kPi * (g.at(j) - s) * (g.at(j) - s));
    }
    const Signal f = frft_chirp(Signal(g, moved), a);
    // Reference: the transform of h_0 is h_0 e^{0}, evaluated at xi - s cos(a).
    for (std::size_t j = 0; j < g.n; ++j) {
        const double xi = g.at(j);
        const cplx want = std::exp(-kPi * (xi - s * std::cos(a)) * (xi - s * std::cos(a))) *
                          std::polar(1.0, kPi * s * s * std::cos(a) * std::sin(a) - 2.0 * kPi * s * xi * std::sin(a));
        EXPECT_LT(std::abs(f.samples[j] - want), 1e-10);
    }
}

TEST(Frft, NearSingularRejectedByChirpRoute) {
    const Grid g = test_grid();
    EXPECT_THROW(frft_chirp(two_gaussians(g), 1e-4), Error);
    EXPECT_NO_THROW(frft_any(two_gaussians(g), 1e-4));
}

TEST(Frft, PulseTrainAnalyticMatchesFineQuadrature) {
    PulseTrainModel m;
    m.a = 1.0;
    m.b = 0.3;
    m.coeffs = {{-1, {0.5, 0.2}}, {0, {1.0, 0.0}}, {2, {-0.4, 0.7}}};
    const Grid out = Grid::symmetric(4.0, 64);
    for (double a : {0.7, kPi / 2.0, 1.5707, 2.4, -1.1}) {
        const Signal f = frft_pulse_train(m, a, out);
        const double s = std::sin(a), cot = std::cos(a) / s;
        const auto [x, w] = gauss_legendre(40);
        for (std::size_t j = 0; j < out.n; j += 7) {
            const double xi = out.at(j);
            cplx acc{0.0, 0.0};
            for (const auto& [k, c] : m.coeffs) {
                const int panels = 400;
                const double h = m.b / panels;
                for (int p = 0; p < panels; ++p) {
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        const double t = k * m.a + (p + 0.5 + 0.5 * x[i]) * h;
                        acc += c * 0.5 * h * w[i] * std::polar(1.0, kPi * cot * t * t - 2.0 * kPi * t * xi / s);
                    }
                }
            }
            const cplx want = std::sqrt(cplx{1.0, -cot}) * std::polar(1.0, kPi * cot * xi * xi) * acc;
            EXPECT_LT(std::abs(f.samples[j] - want), 1e-12) << a << " " << xi;
        }
    }
}

TEST(Frft, NoiseIsDeterministicAndClipped) {
    const Grid g = test_grid();
    const Signal u = two_gaussians(g);
    const auto m1 = measure_magnitude(u, 0.5, 0.01, 42);
    const auto m2 = measure_magnitude(u, 0.5, 0.01, 42);
    EXPECT_EQ(m1.magnitudes, m2.magnitudes);
    for (double v : m1.magnitudes) EXPECT_GE(v, 0.0);
}

TEST(Special, FresnelValues) {
    // Reference values of C and S.
    EXPECT_NEAR(fresnel(1.0).real(), 0.7798934003768228, 1e-14);
    EXPECT_NEAR(fresnel(1.0).imag(), 0.4382591473903548, 1e-14);
    EXPECT_NEAR(fresnel(2.5).real(), 0.4574130096417711, 1e-14);
    EXPECT_NEAR(fresnel(2.5).imag(), 0.6191817558195929, 1e-14);
    EXPECT_NEAR(fresnel(-2.5).imag(), -0.6191817558195929, 1e-14);
}
