#include "frpr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "frpr/error.hpp"
#include "frpr/rank1.hpp"

namespace frpr {

namespace {

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

// bump exponent: (1 - xi^2)^nu is C^{nu-1} at +-1
double bump_power(int smoothness) { return static_cast<double>(smoothness) + 1.0; }

template <class F>
void parallel_rows(std::size_t rows, unsigned threads, F&& work) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
    if (threads == 1) {
        for (std::size_t r = 0; r < rows; ++r) work(r);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t r = t; r < rows; r += threads) work(r);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

double AngleSchedule::line_slope() const {
    return kind == ScheduleKind::Basic ? 1.0 / (a * a) : 1.0 / (b * b);
}

double AngleSchedule::row_band(double x) const { return std::max(0.0, a - std::abs(x) / 2.0); }

AngleSchedule build_schedule(ScheduleKind kind, double a, std::optional<double> b, int k_max) {
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorKind::InvalidInput, "support half-width a must be positive");
    if (k_max < 0 || k_max > 100000) throw Error(ErrorKind::InvalidInput, "k_max must be in 0..100000");
    AngleSchedule s;
    s.kind = kind;
    s.a = a;
    s.k_max = k_max;
    double scale = a * a;
    if (kind == ScheduleKind::Oversampled) {
        if (!b || !(*b > a) || !std::isfinite(*b)) {
            throw Error(ErrorKind::Schedule, "oversampling needs b > a");
        }
        s.b = *b;
        scale = s.b * s.b;
    }
    // line y = x cot(alpha_k) = k x / scale
    for (int k = -k_max; k <= k_max; ++k) {
        s.angles.push_back(k == 0 ? kPi / 2.0 : std::atan(scale / static_cast<double>(k)));
    }
    return s;
}

KernelSpec KernelSpec::make(double sigma, double h, int smoothness) {
    if (!(sigma > 0.0) || !(h > 0.0)) throw Error(ErrorKind::InvalidInput, "kernel needs sigma > 0 and h > 0");
    if (h * sigma > 1.0 + 1e-12) throw Error(ErrorKind::InvalidInput, "undersampled: h sigma > 1");
    if (smoothness < 0 || smoothness > 30) throw Error(ErrorKind::InvalidInput, "kernel smoothness must be in 0..30");
    KernelSpec k;
    k.sigma = sigma;
    k.h = h;
    k.smoothness = smoothness;
    k.tau_plus = (1.0 + sigma * h) / (2.0 * h);
    k.tau_minus = std::max(0.0, (1.0 - sigma * h) / (2.0 * h));
    return k;
}

KernelSpec KernelSpec::sinc(double h) {
    if (!(h > 0.0)) throw Error(ErrorKind::InvalidInput, "kernel needs h > 0");
    KernelSpec k;
    k.sigma = 1.0 / h;
    k.h = h;
    k.tau_plus = 1.0 / h;
    k.tau_minus = 0.0;
    return k;
}

double bump_kernel(double xi, int smoothness) {
    if (std::abs(xi) >= 1.0) return 0.0;
    const double nu = bump_power(smoothness);
    // int_{-1}^{1} (1 - xi^2)^nu = sqrt(pi) Gamma(nu + 1) / Gamma(nu + 3/2)
    const double norm = std::exp(std::lgamma(nu + 1.5) - std::lgamma(nu + 1.0)) / std::sqrt(kPi);
    return norm * std::pow(1.0 - xi * xi, nu);
}

double bump_kernel_ft(double z, int smoothness) {
    const double nu = bump_power(smoothness);
    const double order = nu + 0.5;
    const double w = kPi * std::abs(z);
    // Gamma(nu + 3/2) (pi z)^{-nu - 1/2} J_{nu + 1/2}(2 pi z), by its series near 0
    if (w < 0.5) {
        double term = 1.0, sum = 1.0;
        for (int m = 1; m < 12; ++m) {
            term *= -w * w / (static_cast<double>(m) * (static_cast<double>(m) + order));
            sum += term;
        }
        return sum;
    }
    return std::exp(std::lgamma(order + 1.0) - order * std::log(w)) * std::cyl_bessel_j(order, 2.0 * w);
}

CVec shannon_reconstruct_row(const std::vector<RowSample>& samples, const KernelSpec& spec, const Grid& y_eval) {
    y_eval.validate();
    if (spec.h * spec.sigma > 1.0 + 1e-12) throw Error(ErrorKind::InvalidInput, "undersampled: h sigma > 1");
    const double half = spec.h / 2.0;
    for (const auto& s : samples) {
        const double k = s.y / half;
        if (std::abs(k - std::round(k)) > 1e-7) throw Error(ErrorKind::InvalidInput, "samples must sit at h k / 2");
    }
    CVec out(y_eval.n, cplx{0.0, 0.0});
    const double pre = spec.h * spec.tau_plus;
    for (std::size_t q = 0; q < y_eval.n; ++q) {
        const double y = y_eval.at(q);
        cplx acc{0.0, 0.0};
        for (const auto& s : samples) {
            if (s.value == cplx(0.0)) continue;
            const double d = y - s.y;
            double w = sinc(2.0 * kPi * spec.tau_plus * d);
            if (!spec.pure_sinc()) w *= bump_kernel_ft(spec.tau_minus * d, spec.smoothness);
            acc += s.value * w;
        }
        out[q] = pre * acc;
    }
    return out;
}

AmbiguityReconstruction reconstruct_ambiguity(const std::vector<MagnitudeMeasurement>& measurements,
                                              const AngleSchedule& schedule, const Grid& x_axis,
                                              const Grid& y_axis, const ReconstructionOptions& opt) {
    x_axis.validate();
    y_axis.validate();
    const int K = schedule.k_max;
    if (measurements.size() != static_cast<std::size_t>(2 * K + 1)) {
        throw Error(ErrorKind::Schedule, "expected " + std::to_string(2 * K + 1) + " measurements");
    }
    for (int k = -K; k <= K; ++k) {
        const auto& m = measurements[static_cast<std::size_t>(k + K)];
        m.validate();
        if (std::abs(reduce_angle(m.alpha - schedule.measurement_angle(k))) > 1e-9) {
            throw Error(ErrorKind::Schedule, "measurement " + std::to_string(k) + " is not at the schedule angle");
        }
    }
    const double slope = schedule.line_slope();

    // samples[k][ix] = A(u)(x, k slope x) = FT[|F_{-alpha_k} u|^2](x / sin alpha_k)
    std::vector<CVec> samples(measurements.size());
    for (int k = -K; k <= K; ++k) {
        const double s = std::sin(schedule.alpha(k));
        samples[static_cast<std::size_t>(k + K)] =
            slice_values(measurements[static_cast<std::size_t>(k + K)], x_axis.t0 / s, x_axis.dt / s, x_axis.n);
    }

    AmbiguityReconstruction rec;
    rec.grid = AmbiguityGrid{x_axis, y_axis, CVec(x_axis.n * y_axis.n, cplx{0.0, 0.0})};
    rec.rows.resize(x_axis.n);
    const double x_min = x_axis.dt / 4.0;
    // truncation is judged against the largest sample anywhere, so faint rows are not penalised
    double peak = 0.0;
    for (std::size_t ix = 0; ix < x_axis.n; ++ix) {
        const double x = std::abs(x_axis.at(ix));
        if (x < x_min || x >= 2.0 * schedule.a) continue;
        for (const auto& row : samples) peak = std::max(peak, std::abs(row[ix]));
    }
    parallel_rows(x_axis.n, opt.threads, [&](std::size_t ix) {
        const double x = x_axis.at(ix);
        RowReport& rep = rec.rows[ix];
        rep.x = x;
        if (std::abs(x) >= 2.0 * schedule.a) {
            rep.zero_by_support = true;
            rep.trusted = true;
            return;
        }
        if (std::abs(x) < x_min) return;  // every sampling line meets this row at y = 0 only
        const double h = schedule.row_step(std::abs(x));
        const KernelSpec spec = schedule.kind == ScheduleKind::Oversampled && opt.smooth_kernel
                                    ? KernelSpec::make(schedule.row_band(x), h)
                                    : KernelSpec::sinc(h);
        std::vector<RowSample> row;
        for (int k = -K; k <= K; ++k) {
            row.push_back({static_cast<double>(k) * slope * x, samples[static_cast<std::size_t>(k + K)][ix]});
        }
        const double edge = std::max(std::abs(row.front().value), std::abs(row.back().value));
        rep.truncation = peak > 0.0 ? edge / peak : 0.0;
        rep.trusted = rep.truncation <= opt.trust_truncation;
        const CVec vals = shannon_reconstruct_row(row, spec, y_axis);
        std::copy(vals.begin(), vals.end(), rec.grid.values.begin() + static_cast<std::ptrdiff_t>(ix * y_axis.n));
    });

    if (opt.compare_display && schedule.kind == ScheduleKind::Oversampled) {
        // The closed oversampling display, taken literally, against the generic assembly.
        const double b = schedule.b;
        double worst = 0.0, scale = 0.0;
        for (std::size_t ix = 0; ix < x_axis.n; ++ix) {
            const double x = x_axis.at(ix);
            if (!(x > x_min) || x >= 2.0 * schedule.a) continue;
            CVec psi;
            for (int k = -K; k <= K; ++k) {
                const double al = schedule.alpha(k);
                const double arg = -x * std::sin(al) + x * x * k * std::cos(al) / (b * b);
                psi.push_back(slice_values(measurements[static_cast<std::size_t>(k + K)], arg, 1.0, 1)[0]);
            }
            for (std::size_t iy = 0; iy < y_axis.n; ++iy) {
                const double y = y_axis.at(iy);
                cplx acc{0.0, 0.0};
                for (int k = -K; k <= K; ++k) {
                    const double d = y - x * k / (b * b);
                    acc += psi[static_cast<std::size_t>(k + K)] *
                           bump_kernel_ft((b * b - 2.0 * x * b) / (4.0 * x) * d) *
                           sinc((b * b + 2.0 * x * b) / (4.0 * x) * d);
                }
                acc *= (b + 2.0 * x) / (2.0 * b);
                worst = std::max(worst, std::abs(acc - rec.grid.at(ix, iy)));
                scale = std::max(scale, std::abs(rec.grid.at(ix, iy)));
            }
        }
        rec.display_mismatch = scale > 0.0 ? worst / scale : 0.0;
        rec.display_note = rec.display_mismatch > 1e-3
                               ? "closed display disagrees with the generic oversampling series"
                               : "closed display agrees with the generic oversampling series";
    }
    return rec;
}

SignalRecovery recover_signal(const std::vector<MagnitudeMeasurement>& measurements, const AngleSchedule& schedule,
                              const Grid& target, const ReconstructionOptions& opt) {
    target.validate();
    SignalRecovery out;
    const Grid x_axis{0.0, target.dt, target.n};
    out.ambiguity = reconstruct_ambiguity(measurements, schedule, x_axis, target.dual(), opt);
    // rank-one completion from every trusted row; the rest of the matrix is filled in
    std::vector<char> use(x_axis.n, 0);
    out.min_trusted_x = 2.0 * schedule.a;
    for (std::size_t ix = 1; ix < x_axis.n; ++ix) {
        const auto& r = out.ambiguity.rows[ix];
        if (!r.trusted || r.zero_by_support) continue;
        use[ix] = 1;
        out.min_trusted_x = std::min(out.min_trusted_x, r.x);
    }
    if (std::find(use.begin(), use.end(), 1) == use.end()) {
        throw Error(ErrorKind::IllConditioned, "no trusted ambiguity rows");
    }
    out.signal = invert_ambiguity_rank1(out.ambiguity.grid, target, out.min_trusted_x, 200, use);
    return out;
}

double windowed_ambiguity_error(const Signal& u, const std::vector<MagnitudeMeasurement>& measurements,
                                const AngleSchedule& schedule, double y_slope, const ReconstructionOptions& opt) {
    if (!(y_slope > 0.0)) throw Error(ErrorKind::InvalidInput, "y_slope must be positive");
    double worst = 0.0, peak = 0.0;
    for (int i = 2; i <= 14; ++i) {
        const double x = schedule.a * i / 8.0;
        const Grid xs{x, 1.0, 2};
        const Grid ys{-y_slope * x, y_slope * x / 100.0, 201};
        const auto rec = reconstruct_ambiguity(measurements, schedule, xs, ys, opt);
        const auto ref = ambiguity(u, u, xs, ys);
        for (std::size_t j = 0; j < ys.n; ++j) {
            worst = std::max(worst, std::abs(rec.grid.at(0, j) - ref.at(0, j)));
            peak = std::max(peak, std::abs(ref.at(0, j)));
        }
    }
    return peak > 0.0 ? worst / peak : worst;
}

std::vector<MagnitudeMeasurement> measure_schedule(const Signal& u, const AngleSchedule& schedule,
                                                   double noise_sigma, std::uint64_t seed) {
    u.grid.validate();
    std::vector<MagnitudeMeasurement> out;
    // |F_alpha u|^2 of the sampled signal is periodic in xi with period |sin alpha| / dt;
    // one period at twice the signal length holds every lag exactly.
    const std::size_t n = 2 * u.size();
    for (int k = -schedule.k_max; k <= schedule.k_max; ++k) {
        const double alpha = schedule.measurement_angle(k);
        const double period = std::abs(std::sin(alpha)) / u.grid.dt;
        const Grid g{-period / 2.0, period / static_cast<double>(n), n};
        const Signal f = frft_chirp(u, alpha, g);
        MagnitudeMeasurement m;
        m.alpha = alpha;
        m.grid = g;
        m.magnitudes.resize(n);
        for (std::size_t j = 0; j < n; ++j) m.magnitudes[j] = std::abs(f.samples[j]);
        if (noise_sigma > 0.0) apply_magnitude_noise(m, noise_sigma, seed + static_cast<std::uint64_t>(k + schedule.k_max));
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace frpr
