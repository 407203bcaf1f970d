#include "frpr/ambiguity.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "frpr/error.hpp"
#include "frpr/fft.hpp"
#include "frpr/rank1.hpp"
#include "frpr/special.hpp"

namespace frpr {

CVec AmbiguityGrid::row(std::size_t ix) const {
    return CVec(values.begin() + static_cast<std::ptrdiff_t>(ix * y_axis.n),
                values.begin() + static_cast<std::ptrdiff_t>((ix + 1) * y_axis.n));
}

AmbiguityGrid ambiguity(const Signal& u, const Signal& v, const Grid& x_axis, const Grid& y_axis) {
    if (!same_grid(u.grid, v.grid)) throw Error(ErrorKind::InvalidInput, "ambiguity needs u and v on one grid");
    x_axis.validate();
    y_axis.validate();
    const Grid& g = u.grid;
    const std::size_t n = g.n;
    AmbiguityGrid a{x_axis, y_axis, CVec(x_axis.n * y_axis.n)};
    // s = t - x/2: sum_l u(t_l + x) conj v(t_l) e^{-2 pi i y (t_l + x/2)}, zero outside the grid
    for (std::size_t ix = 0; ix < x_axis.n; ++ix) {
        const double x = x_axis.at(ix);
        const double lag = x / g.dt;
        const double r = std::round(lag);
        CVec up(n, cplx{0.0, 0.0});
        if (std::abs(lag - r) < 1e-9) {
            const long long m = static_cast<long long>(r);
            for (std::size_t j = 0; j < n; ++j) {
                const long long q = static_cast<long long>(j) + m;
                if (q >= 0 && q < static_cast<long long>(n)) up[j] = u.samples[static_cast<std::size_t>(q)];
            }
        } else {
            const std::size_t pad = static_cast<std::size_t>(std::ceil(std::abs(lag))) + 1;
            CVec w(n + 2 * pad, cplx{0.0, 0.0});
            std::copy(u.samples.begin(), u.samples.end(), w.begin() + static_cast<std::ptrdiff_t>(pad));
            const CVec sh = bandlimited_shift(w, lag);
            std::copy(sh.begin() + static_cast<std::ptrdiff_t>(pad), sh.begin() + static_cast<std::ptrdiff_t>(pad + n), up.begin());
        }
        CVec prod(n);
        for (std::size_t j = 0; j < n; ++j) prod[j] = up[j] * std::conj(v.samples[j]);
        const CVec row = zoom_dft(prod, g.t0 + x / 2.0, g.dt, y_axis.t0, y_axis.dt, y_axis.n, -1);
        for (std::size_t iy = 0; iy < y_axis.n; ++iy) a.at(ix, iy) = g.dt * row[iy];
    }
    return a;
}

AmbiguityGrid ambiguity(const PulseTrainModel& m, const Grid& x_axis, const Grid& y_axis) {
    m.validate();
    x_axis.validate();
    y_axis.validate();
    AmbiguityGrid a{x_axis, y_axis, CVec(x_axis.n * y_axis.n, cplx{0.0, 0.0})};
    for (std::size_t ix = 0; ix < x_axis.n; ++ix) {
        const double x = x_axis.at(ix);
        for (const auto& [k, ck] : m.coeffs) {
            for (const auto& [l, cl] : m.coeffs) {
                // t + x/2 in [ak, ak+b) and t - x/2 in [al, al+b)
                const double p = std::max(m.a * k - x / 2.0, m.a * l + x / 2.0);
                const double q = std::min(m.a * k + m.b - x / 2.0, m.a * l + m.b + x / 2.0);
                if (q <= p) continue;
                const cplx w = ck * std::conj(cl);
                for (std::size_t iy = 0; iy < y_axis.n; ++iy) {
                    a.at(ix, iy) += w * chirp_integral(0.0, -2.0 * kPi * y_axis.at(iy), p, q);
                }
            }
        }
    }
    return a;
}

cplx ambiguity_gaussian(double x, double y) {
    return {std::exp(-kPi * (x * x + y * y) / 2.0) / std::sqrt(2.0), 0.0};
}

cplx ambiguity_indicator(double b, double x, double y) {
    const double w = b - std::abs(x);
    if (w <= 0.0) return {0.0, 0.0};
    const double amp = std::abs(kPi * y * w) < 1e-8 ? w : std::sin(kPi * y * w) / (kPi * y);
    return std::polar(amp, -kPi * b * y);
}

CVec slice_values(const MagnitudeMeasurement& m, double tau0, double dtau, std::size_t count) {
    m.validate();
    CVec power(m.grid.n);
    for (std::size_t j = 0; j < m.grid.n; ++j) power[j] = m.magnitudes[j] * m.magnitudes[j];
    CVec s = zoom_dft(power, m.grid.t0, m.grid.dt, tau0, dtau, count, -1);
    for (auto& z : s) z *= m.grid.dt;
    return s;
}

LineSlice slice_from_magnitude(const MagnitudeMeasurement& m) {
    const Grid d = m.grid.dual();
    return LineSlice{m.alpha, d, slice_values(m, d.t0, d.dt, d.n)};
}

namespace {

std::optional<std::size_t> find_row(const Grid& x_axis, double x) {
    const double f = (x - x_axis.t0) / x_axis.dt;
    const double r = std::round(f);
    if (std::abs(f - r) > 1e-6 || r < 0.0 || r >= static_cast<double>(x_axis.n)) return std::nullopt;
    return static_cast<std::size_t>(r);
}

// u(t + x/2) conj u(t - x/2) at t = t0 + x/2 + j dt: element (j + m, j) of u u^*.
CVec lag_products(const AmbiguityGrid& a, std::size_t ix, const Grid& target) {
    const double x = a.x_axis.at(ix);
    const Grid mid{target.t0 + x / 2.0, target.dt, target.n};
    return inverse_fourier_transform(a.row(ix), a.y_axis, mid);
}

}  // namespace

InversionResult invert_ambiguity(const AmbiguityGrid& a, const Grid& target, const InversionOptions& opt) {
    target.validate();
    const auto row0 = find_row(a.x_axis, 0.0);
    if (!row0) throw Error(ErrorKind::InvalidInput, "ambiguity x axis must contain 0");
    const std::size_t n = target.n;
    const CVec power = lag_products(a, *row0, target);
    RVec mag(n);
    for (std::size_t j = 0; j < n; ++j) mag[j] = std::sqrt(std::max(0.0, power[j].real()));
    const std::size_t peak = static_cast<std::size_t>(std::max_element(mag.begin(), mag.end()) - mag.begin());
    InversionResult res{Signal(target, CVec(n, cplx{0.0, 0.0})), {}};
    if (!(mag[peak] > 0.0)) return res;

    const double thr = opt.zero_threshold * mag[peak];
    std::vector<bool> live(n);
    for (std::size_t j = 0; j < n; ++j) live[j] = mag[j] > thr;

    // Phase links: link[m][j] = arg(u_{j+m} conj u_j), from the row x = m dt.
    std::vector<std::optional<CVec>> links(static_cast<std::size_t>(opt.max_gap) + 2);
    auto link = [&](std::size_t m) -> const CVec* {
        if (m >= links.size()) return nullptr;
        if (!links[m]) {
            const auto ix = find_row(a.x_axis, static_cast<double>(m) * target.dt);
            if (!ix) return nullptr;
            links[m] = lag_products(a, *ix, target);
        }
        return &*links[m];
    };

    // Live samples grouped into segments; gaps up to max_gap are bridged by longer lags.
    std::vector<std::size_t> live_idx;
    for (std::size_t j = 0; j < n; ++j) if (live[j]) live_idx.push_back(j);
    std::vector<std::vector<std::size_t>> segs{{live_idx.front()}};
    for (std::size_t q = 1; q < live_idx.size(); ++q) {
        const std::size_t prev = live_idx[q - 1], cur = live_idx[q];
        const std::size_t lag = cur - prev;
        if (lag <= static_cast<std::size_t>(opt.max_gap) + 1 && link(lag)) {
            segs.back().push_back(cur);
        } else {
            segs.push_back({cur});
        }
    }
    if (segs.size() > 1 && !opt.allow_disconnected) {
        std::string list;
        for (const auto& s : segs) list += " [" + std::to_string(s.front()) + "," + std::to_string(s.back() + 1) + ")";
        throw Error(ErrorKind::DisconnectedSupport, "numerical support is disconnected:" + list);
    }

    RVec phase(n, 0.0);
    CVec& out = res.signal.samples;
    for (const auto& seg : segs) {
        std::size_t anchor = 0;
        for (std::size_t q = 0; q < seg.size(); ++q) if (mag[seg[q]] > mag[seg[anchor]]) anchor = q;
        phase[seg[anchor]] = 0.0;
        for (std::size_t q = anchor + 1; q < seg.size(); ++q) {
            const std::size_t j0 = seg[q - 1], j1 = seg[q];
            phase[j1] = phase[j0] + std::arg((*link(j1 - j0))[j0]);
        }
        for (std::size_t q = anchor; q-- > 0;) {
            const std::size_t j0 = seg[q], j1 = seg[q + 1];
            phase[j0] = phase[j1] - std::arg((*link(j1 - j0))[j0]);
        }
        // Samples inside bridged gaps take linearly interpolated phases.
        for (std::size_t q = 0; q + 1 < seg.size(); ++q) {
            const std::size_t j0 = seg[q], j1 = seg[q + 1];
            for (std::size_t j = j0 + 1; j < j1; ++j) {
                const double f = static_cast<double>(j - j0) / static_cast<double>(j1 - j0);
                phase[j] = (1.0 - f) * phase[j0] + f * phase[j1];
            }
        }
        for (std::size_t j = seg.front(); j <= seg.back(); ++j) out[j] = std::polar(mag[j], phase[j]);
        res.segments.emplace_back(seg.front(), seg.back() + 1);
    }
    return res;
}

Signal invert_ambiguity_rank1(const AmbiguityGrid& a, const Grid& target, double min_abs_x, int iterations,
                              const std::vector<char>& use_row) {
    target.validate();
    const std::size_t n = target.n;
    const double ratio = a.x_axis.dt / target.dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-6 || std::round(ratio) < 1.0) {
        throw Error(ErrorKind::InvalidInput, "ambiguity x step must be a multiple of the target step");
    }
    CVec mat(n * n, cplx{0.0, 0.0});
    std::vector<char> known(n * n, 0);
    if (!use_row.empty() && use_row.size() != a.x_axis.n) {
        throw Error(ErrorKind::InvalidInput, "use_row needs one flag per ambiguity row");
    }
    for (std::size_t ix = 0; ix < a.x_axis.n; ++ix) {
        const double x = a.x_axis.at(ix);
        if (std::abs(x) < min_abs_x - 1e-12) continue;
        if (!use_row.empty() && !use_row[ix]) continue;
        const long long lag = std::llround(x / target.dt);
        if (lag < 0 || static_cast<std::size_t>(lag) >= n) continue;  // x < 0 rows are the conjugate transpose
        const CVec prod = lag_products(a, ix, target);
        for (std::size_t j = 0; j + static_cast<std::size_t>(lag) < n; ++j) {
            const std::size_t r = j + static_cast<std::size_t>(lag);
            mat[r * n + j] = prod[j];
            mat[j * n + r] = std::conj(prod[j]);
            known[r * n + j] = known[j * n + r] = 1;
        }
    }
    // Alternating projection: fill the unknown band with the current rank-one estimate.
    RankOneFactor f = rank_one_factor(mat, n);
    for (int it = 0; it < iterations; ++it) {
        double change = 0.0, scale = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (known[r * n + c]) continue;
                const cplx v = f.vector[r] * std::conj(f.vector[c]);
                change = std::max(change, std::abs(v - mat[r * n + c]));
                scale = std::max(scale, std::abs(v));
                mat[r * n + c] = v;
            }
        }
        f = rank_one_factor(mat, n);
        if (change <= 1e-14 * std::max(scale, 1e-300)) break;
    }
    return Signal(target, f.vector);
}

}  // namespace frpr
