#include "frpr/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace frpr {

namespace {

// FFTW planning is not thread-safe; executing a plan on new arrays is.
std::mutex g_plan_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto* buf = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    cache.emplace(key, p);
    return p;
}

void fft_inplace(CVec& v, int sign) {
    if (v.empty()) return;
    auto* data = reinterpret_cast<fftw_complex*>(v.data());
    fftw_execute_dft(plan_for(v.size(), sign), data, data);
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// exp(sign * i * pi * beta * m^2) with the argument reduced in extended precision.
cplx quadratic_phase(long double beta, long double m, int sign) {
    long double x = 0.5L * beta * m * m;  // in turns
    x -= std::floor(x);
    const double ang = static_cast<double>(2.0L * 3.141592653589793238462643383279503L * x);
    return {std::cos(ang), sign * std::sin(ang)};
}

cplx turn_phase(long double turns, int sign) {
    turns -= std::floor(turns);
    const double ang = static_cast<double>(2.0L * 3.141592653589793238462643383279503L * turns);
    return {std::cos(ang), sign * std::sin(ang)};
}

}  // namespace

CVec dft(const CVec& in, int sign) {
    CVec out = in;
    fft_inplace(out, sign);
    return out;
}

CVec zoom_dft(const CVec& g, double t0, double dt, double nu0, double dnu, std::size_t m, int sign) {
    const std::size_t n = g.size();
    CVec out(m, cplx{0.0, 0.0});
    if (n == 0 || m == 0) return out;

    // exponent = (t0 + k dt)(nu0 + j dnu) = t0 nu0 + t0 dnu j + dt nu0 k + dt dnu k j
    const long double lt0 = t0, ldt = dt, lnu0 = nu0, ldnu = dnu;
    const long double beta = ldt * ldnu;

    CVec a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = g[k] * turn_phase(ldt * lnu0 * k, sign);

    CVec core;
    const long double bn = beta * static_cast<long double>(n);
    if (m == n && std::abs(static_cast<double>(bn - 1.0L)) < 1e-13) {
        core = a;
        fft_inplace(core, sign);
    } else {
        // k j = (k^2 + j^2 - (j - k)^2) / 2
        const std::size_t L = next_pow2(n + m - 1);
        CVec x(L, cplx{0.0, 0.0});
        CVec w(L, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * quadratic_phase(beta, k, sign);
        for (std::size_t j = 0; j < m; ++j) w[j] = quadratic_phase(beta, j, -sign);
        for (std::size_t k = 1; k < n; ++k) w[L - k] = quadratic_phase(beta, k, -sign);
        fft_inplace(x, -1);
        fft_inplace(w, -1);
        for (std::size_t i = 0; i < L; ++i) x[i] *= w[i];
        fft_inplace(x, +1);
        core.resize(m);
        const double inv = 1.0 / static_cast<double>(L);
        for (std::size_t j = 0; j < m; ++j) core[j] = x[j] * inv * quadratic_phase(beta, j, sign);
    }
    for (std::size_t j = 0; j < m; ++j) out[j] = core[j] * turn_phase(lt0 * lnu0 + lt0 * ldnu * j, sign);
    return out;
}

CVec fourier_transform(const Signal& u, const Grid& out) {
    CVec s = zoom_dft(u.samples, u.grid.t0, u.grid.dt, out.t0, out.dt, out.n, -1);
    for (auto& z : s) z *= u.grid.dt;
    return s;
}

CVec inverse_fourier_transform(const CVec& spectrum, const Grid& freq, const Grid& out) {
    CVec s = zoom_dft(spectrum, freq.t0, freq.dt, out.t0, out.dt, out.n, +1);
    for (auto& z : s) z *= freq.dt;
    return s;
}

CVec bandlimited_shift(const CVec& u, double shift) {
    const std::size_t n = u.size();
    if (shift == 0.0 || n == 0) return u;
    CVec spec = dft(u, -1);
    for (std::size_t k = 0; k < n; ++k) {
        const long long kk = (k <= n / 2) ? static_cast<long long>(k) : static_cast<long long>(k) - static_cast<long long>(n);
        const double ang = 2.0 * kPi * static_cast<double>(kk) * shift / static_cast<double>(n);
        if (n % 2 == 0 && k == n / 2) {
            spec[k] *= std::cos(ang);  // split Nyquist bin keeps real input real
        } else {
            spec[k] *= cplx{std::cos(ang), std::sin(ang)};
        }
    }
    CVec out = dft(spec, +1);
    for (auto& z : out) z /= static_cast<double>(n);
    return out;
}

}  // namespace frpr
