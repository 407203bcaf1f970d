#include <gtest/gtest.h>

#include <cmath>

#include "frpr/ambiguity.hpp"
#include "frpr/error.hpp"
#include "frpr/metrics.hpp"
#include "frpr/sampling.hpp"
#include "frpr/special.hpp"

using namespace frpr;

namespace {

Signal truncated_gaussian(std::size_t n) {
    const Grid g = Grid::symmetric(1.0, n);
    CVec s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = std::exp(-kPi * g.at(j) * g.at(j));
    return Signal(g, s);
}

// two real bumps inside [-0.8, 0.8]
Signal two_bumps(std::size_t n) {
    const Grid g = Grid::symmetric(1.0, n);
    CVec s(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = g.at(j);
        auto bump = [](double x) { return std::abs(x) < 1.0 ? std::pow(1.0 - x * x, 2) : 0.0; };
        s[j] = bump((t + 0.4) / 0.4) + 0.6 * bump((t - 0.45) / 0.35);
    }
    return Signal(g, s);
}

double fejer(double y, double sigma) {
    const double w = kPi * sigma * y;
    const double s = std::abs(w) < 1e-12 ? 1.0 : std::sin(w) / w;
    return s * s;
}

double relative_sup(const CVec& a, const CVec& b) {
    double d = 0.0, m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        d = std::max(d, std::abs(a[j] - b[j]));
        m = std::max(m, std::abs(b[j]));
    }
    return d / m;
}

}  // namespace

TEST(Schedule, BasicAngles) {
    const auto s = build_schedule(ScheduleKind::Basic, 1.0, {}, 64);
    EXPECT_NEAR(s.alpha(1), kPi / 4.0, 1e-15);
    EXPECT_DOUBLE_EQ(s.alpha(0), kPi / 2.0);
    for (int k = 1; k < 64; ++k) EXPECT_LT(s.alpha(k + 1), s.alpha(k));
    EXPECT_NEAR(s.alpha(-3), -s.alpha(3), 1e-15);
    EXPECT_DOUBLE_EQ(s.measurement_angle(5), -s.alpha(5));
}

TEST(Schedule, OversampledLinesHitTheRowLattice) {
    // the k-th line must be y = k x / b^2 for the rows to be sampled at h_x k / 2
    const auto s = build_schedule(ScheduleKind::Oversampled, 1.0, 1.5, 8);
    for (int k = 1; k <= 8; ++k) EXPECT_NEAR(1.0 / std::tan(s.alpha(k)), k / 2.25, 1e-12);
    EXPECT_NEAR(s.alpha(2), std::atan(2.25 / 2.0), 1e-15);
    EXPECT_THROW(build_schedule(ScheduleKind::Oversampled, 1.0, 0.9, 8), Error);
    EXPECT_THROW(build_schedule(ScheduleKind::Oversampled, 1.0, std::nullopt, 8), Error);
}

TEST(Schedule, NyquistTangency) {
    const auto s = build_schedule(ScheduleKind::Basic, 1.0, {}, 4);
    int equal = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = 2.0 * i / 999.0;
        const double v = s.row_step(x) * s.row_band(x);
        EXPECT_LE(v, 1.0 + 1e-12);
        if (std::abs(v - 1.0) < 1e-9) ++equal;
    }
    // x = a is not on this grid; the maximum sits next to it
    EXPECT_EQ(equal, 0);
    EXPECT_NEAR(s.row_step(1.0) * s.row_band(1.0), 1.0, 1e-15);
}

TEST(Kernel, BumpIntegralAndTransform) {
    const auto [x, w] = gauss_legendre(64);
    for (int j : {2, 4}) {
        double integral = 0.0;
        for (std::size_t q = 0; q < x.size(); ++q) integral += w[q] * bump_kernel(x[q], j);
        EXPECT_NEAR(integral, 1.0, 1e-13);
        for (double z : {0.0, 0.1, 0.7, 2.3, 9.1}) {
            double ft = 0.0;
            for (std::size_t q = 0; q < x.size(); ++q) ft += w[q] * bump_kernel(x[q], j) * std::cos(2.0 * kPi * x[q] * z);
            EXPECT_NEAR(bump_kernel_ft(z, j), ft, 1e-12) << "z = " << z;
        }
    }
    EXPECT_EQ(bump_kernel(1.0), 0.0);
}

TEST(Kernel, TauValues) {
    const auto k = KernelSpec::make(2.0, 0.25);
    EXPECT_DOUBLE_EQ(k.tau_plus, 3.0);
    EXPECT_DOUBLE_EQ(k.tau_minus, 1.0);
    EXPECT_THROW(KernelSpec::make(2.0, 0.6), Error);
    EXPECT_TRUE(KernelSpec::sinc(0.5).pure_sinc());
}

TEST(Shannon, WhittakerSeriesOnFejerKernel) {
    const double sigma = 1.0, h = 1.0 / sigma;
    std::vector<RowSample> s;
    for (int k = -2000; k <= 2000; ++k) s.push_back({h * k / 2.0, fejer(h * k / 2.0, sigma)});
    const Grid g = Grid::symmetric(10.0, 401);
    const CVec r = shannon_reconstruct_row(s, KernelSpec::sinc(h), g);
    double err = 0.0;
    for (std::size_t q = 100; q < 300; ++q) err = std::max(err, std::abs(r[q] - fejer(g.at(q), sigma)));
    EXPECT_LE(err, 1e-6);
}

TEST(Shannon, SmoothKernelTruncatesBetter) {
    const double sigma = 1.0, h = 1.0 / (2.0 * sigma);
    std::vector<RowSample> s;
    for (int k = -40; k <= 40; ++k) s.push_back({h * k / 2.0, fejer(h * k / 2.0, sigma)});
    const Grid g = Grid::symmetric(3.0, 121);
    auto error = [&](const KernelSpec& spec) {
        const CVec r = shannon_reconstruct_row(s, spec, g);
        double e = 0.0;
        for (std::size_t q = 30; q < 90; ++q) e = std::max(e, std::abs(r[q] - fejer(g.at(q), sigma)));
        return e;
    };
    const double e_sinc = error(KernelSpec::sinc(h));
    const double e_bump = error(KernelSpec::make(sigma, h));
    EXPECT_LT(e_bump, e_sinc);
}

TEST(Shannon, ZeroSamplesGiveZero) {
    std::vector<RowSample> s;
    for (int k = -5; k <= 5; ++k) s.push_back({0.25 * k, cplx{0.0, 0.0}});
    for (const auto& v : shannon_reconstruct_row(s, KernelSpec::sinc(0.5), Grid::symmetric(2.0, 17))) EXPECT_EQ(v, cplx(0.0));
    std::vector<RowSample> off{{0.1, 1.0}};
    EXPECT_THROW(shannon_reconstruct_row(off, KernelSpec::sinc(0.5), Grid::symmetric(2.0, 17)), Error);
}

TEST(SampledRecovery, SampleIdentity) {
    const Signal u = truncated_gaussian(128);
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 6);
    const auto ms = measure_schedule(u, sch);
    for (int k : {-6, -2, 0, 1, 5}) {
        for (int m : {2, 8, 40, 100}) {
            const double x = m * u.grid.dt, y = k * sch.line_slope() * x;
            const auto direct = ambiguity(u, u, Grid{x, 1.0, 2}, Grid{y, 1.0, 2});
            const double s = std::sin(sch.alpha(k));
            const cplx v = slice_values(ms[static_cast<std::size_t>(k + 6)], x / s, 1.0, 1)[0];
            EXPECT_NEAR(std::abs(v - direct.at(0, 0)), 0.0, 1e-4) << "k " << k << " m " << m;
        }
    }
}

TEST(SampledRecovery, AmbiguityMatchesDirect) {
    const Signal u = truncated_gaussian(256);
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 64);
    const auto ms = measure_schedule(u, sch);
    const Grid xs{0.25, 0.25, 9};  // up to x = 2.25
    const Grid ys = Grid::symmetric(16.0, 129);
    const auto rec = reconstruct_ambiguity(ms, sch, xs, ys);
    const auto direct = ambiguity(u, u, xs, ys);
    EXPECT_LE(relative_sup(rec.grid.values, direct.values), 1e-3);
    for (std::size_t ix = 0; ix < xs.n; ++ix) {
        if (xs.at(ix) < 2.0) continue;
        EXPECT_TRUE(rec.rows[ix].zero_by_support);
        for (std::size_t iy = 0; iy < ys.n; ++iy) EXPECT_EQ(rec.grid.at(ix, iy), cplx(0.0));
    }
}

TEST(SampledRecovery, TruncatedGaussianRoundTrip) {
    const Signal u = truncated_gaussian(256);
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 64);
    const auto r = recover_signal(measure_schedule(u, sch), sch, u.grid);
    EXPECT_LE(phase_invariant_distance(u, r.signal), 1e-3);
}

TEST(SampledRecovery, OversampledTruncatesLess) {
    // compared where both schedules have samples: half the oversampled row extent
    for (const Signal& u : {truncated_gaussian(256), two_bumps(256)}) {
        const auto basic = build_schedule(ScheduleKind::Basic, 1.0, {}, 32);
        const auto over = build_schedule(ScheduleKind::Oversampled, 1.0, 1.5, 32);
        const double slope = 0.5 * 32 * over.line_slope();
        const double e_basic = windowed_ambiguity_error(u, measure_schedule(u, basic), basic, slope);
        const double e_over = windowed_ambiguity_error(u, measure_schedule(u, over), over, slope);
        EXPECT_LE(e_over, 0.5 * e_basic);
    }
}

TEST(SampledRecovery, TruncationShrinksWithKMax) {
    const Signal u = two_bumps(256);
    double last = 1e300;
    for (int k : {8, 16, 32, 64}) {
        const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, k);
        const double e = windowed_ambiguity_error(u, measure_schedule(u, sch), sch, 2.0);
        EXPECT_LE(e, last) << "k_max " << k;
        last = e;
    }
}

TEST(SampledRecovery, TwoBumpsRoundTrip) {
    const Signal u = two_bumps(256);
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 64);
    EXPECT_LE(phase_invariant_distance(u, recover_signal(measure_schedule(u, sch), sch, u.grid).signal), 1e-2);
}

TEST(SampledRecovery, ZeroSignal) {
    const Signal u(Grid::symmetric(1.0, 64), CVec(64, cplx{0.0, 0.0}));
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 8);
    const auto r = recover_signal(measure_schedule(u, sch), sch, u.grid);
    for (const auto& v : r.signal.samples) EXPECT_EQ(std::abs(v), 0.0);
}

TEST(SampledRecovery, ThreadCountDoesNotChangeResult) {
    const Signal u = two_bumps(128);
    const auto sch = build_schedule(ScheduleKind::Oversampled, 1.0, 1.5, 16);
    const auto ms = measure_schedule(u, sch);
    ReconstructionOptions o1, o4;
    o4.threads = 4;
    const Grid xs{0.0, u.grid.dt, u.grid.n};
    const auto a = reconstruct_ambiguity(ms, sch, xs, u.grid.dual(), o1);
    const auto b = reconstruct_ambiguity(ms, sch, xs, u.grid.dual(), o4);
    ASSERT_EQ(a.grid.values.size(), b.grid.values.size());
    for (std::size_t q = 0; q < a.grid.values.size(); ++q) ASSERT_EQ(a.grid.values[q], b.grid.values[q]);
}

TEST(SampledRecovery, ScheduleMismatch) {
    const Signal u = truncated_gaussian(64);
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 4);
    auto ms = measure_schedule(u, sch);
    ms.pop_back();
    EXPECT_THROW(reconstruct_ambiguity(ms, sch, Grid{0.0, 0.1, 4}, Grid::symmetric(1.0, 8)), Error);
}
