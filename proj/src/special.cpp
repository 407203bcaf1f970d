#include "frpr/special.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace frpr {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279503L;

// exp(i pi x^2 / 2), argument reduced in extended precision.
cplx half_pi_square_phase(long double ax) {
    long double turns = 0.25L * ax * ax;
    turns -= std::floor(turns);
    const double ang = static_cast<double>(2.0L * kPiL * turns);
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

cplx fresnel(double x) {
    constexpr int kMaxIt = 200;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    constexpr double kXMin = 1.5;
    const double ax = std::abs(x);
    double c = 0.0, s = 0.0;
    if (ax < 1e-150) {
        c = ax;
    } else if (ax <= kXMin) {
        // Power series, alternating between the C and S partial sums.
        double sum = 0.0, sums = 0.0, sumc = ax, sign = 1.0;
        const double fact = 0.5 * kPi * ax * ax;
        bool odd = true;
        double term = ax;
        int n = 3;
        for (int k = 1; k <= kMaxIt; ++k) {
            term *= fact / k;
            sum += sign * term / n;
            const double test = std::abs(sum) * kEps;
            if (odd) {
                sign = -sign;
                sums = sum;
                sum = sumc;
            } else {
                sumc = sum;
                sum = sums;
            }
            if (term < test) break;
            odd = !odd;
            n += 2;
        }
        s = sums;
        c = sumc;
    } else {
        // Continued fraction for the complementary error function (modified Lentz).
        const double pix2 = kPi * ax * ax;
        cplx b{1.0, -pix2};
        cplx cc{1e300, 0.0};
        cplx d = 1.0 / b;
        cplx h = d;
        int n = -1;
        for (int k = 2; k <= kMaxIt; ++k) {
            n += 2;
            const double a = -static_cast<double>(n) * (n + 1);
            b += 4.0;
            d = 1.0 / (a * d + b);
            cc = b + a / cc;
            const cplx del = cc * d;
            h *= del;
            if (std::abs(del.real() - 1.0) + std::abs(del.imag()) <= kEps) break;
        }
        h *= cplx{ax, -ax};
        const cplx cs = cplx{0.5, 0.5} * (1.0 - half_pi_square_phase(ax) * h);
        c = cs.real();
        s = cs.imag();
    }
    if (x < 0.0) {
        c = -c;
        s = -s;
    }
    return {c, s};
}

std::pair<RVec, RVec> gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, std::pair<RVec, RVec>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;

    RVec x(order), w(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[order - 1 - i] = z;
        w[i] = w[order - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return cache.emplace(order, std::make_pair(x, w)).first->second;
}

namespace {

cplx phase1(double c2, double c1, double t) {
    const double ph = c2 * t * t + c1 * t;
    return {std::cos(ph), std::sin(ph)};
}

// (e^{i w} - 1) / (i w)
cplx expm1_ratio(double w) {
    if (std::abs(w) < 1e-4) {
        const cplx iw{0.0, w};
        return 1.0 + iw / 2.0 + iw * iw / 6.0 + iw * iw * iw / 24.0;
    }
    return (cplx{std::cos(w), std::sin(w)} - 1.0) / cplx{0.0, w};
}

}  // namespace

cplx chirp_integral(double c2, double c1, double p, double q) {
    if (q <= p) return {0.0, 0.0};
    const double span = q - p;
    const double tmax = std::max(std::abs(p), std::abs(q));
    if (std::abs(c2) * tmax * tmax < 1e-12) {
        return phase1(0.0, c1, p) * expm1_ratio(c1 * span) * span;
    }
    const double variation = std::max(std::abs(2.0 * c2 * p + c1), std::abs(2.0 * c2 * q + c1)) * span;
    // Fresnel route loses accuracy when the completed square is pushed far out (c2 -> 0).
    const double u_far = (std::abs(c1) / (2.0 * std::abs(c2)) + tmax) * std::sqrt(2.0 * std::abs(c2) / kPi);
    if (variation < 50.0 || u_far > 1e4) {
        const auto& [x, w] = gauss_legendre(20);
        const int panels = 1 + static_cast<int>(variation / 6.0);
        const double h = span / panels;
        cplx sum{0.0, 0.0};
        for (int k = 0; k < panels; ++k) {
            const double mid = p + (k + 0.5) * h;
            for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * phase1(c2, c1, mid + 0.5 * h * x[i]);
        }
        return sum * (0.5 * h);
    }
    // c2 t^2 + c1 t = c2 (t + shift)^2 - c1^2 / (4 c2)
    const long double lc2 = std::abs(c2);
    const long double shift = static_cast<long double>(c1) / (2.0L * c2);
    const long double scale = std::sqrt(2.0L * lc2 / kPiL);
    const double up = static_cast<double>((p + shift) * scale);
    const double uq = static_cast<double>((q + shift) * scale);
    cplx f = (fresnel(uq) - fresnel(up)) / static_cast<double>(scale);
    if (c2 < 0.0) f = std::conj(f);
    long double turns = -static_cast<long double>(c1) * c1 / (4.0L * c2) / (2.0L * kPiL);
    turns -= std::floor(turns);
    const double ang = static_cast<double>(2.0L * kPiL * turns);
    return f * cplx{std::cos(ang), std::sin(ang)};
}

}  // namespace frpr
