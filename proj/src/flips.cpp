#include "frpr/flips.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "frpr/error.hpp"
#include "frpr/frft.hpp"
#include "frpr/polynomial.hpp"

namespace frpr {

namespace {

std::string describe(const CVec& p) {
    std::string s;
    char buf[64];
    for (const auto& c : p) {
        std::snprintf(buf, sizeof buf, " (%.17g, %.17g)", c.real(), c.imag());
        s += buf;
    }
    return s;
}

double cotangent(double alpha) {
    const double a = reduce_angle(alpha);
    if (std::abs(std::sin(a)) < kAngleFloor) {
        throw Error(ErrorKind::NearSingularAngle, "zero flipping needs sin(alpha) away from 0");
    }
    return std::cos(a) / std::sin(a);
}

}  // namespace

CVec chirp_sequence(const CVec& u, double alpha, double step, int sign) {
    const double cot = cotangent(alpha);
    CVec out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double t = static_cast<double>(j) * step;
        out[j] = std::polar(1.0, sign * kPi * cot * t * t) * u[j];
    }
    return out;
}

FlipSolutionSet enumerate_flips(const CVec& u, double alpha, std::optional<std::uint64_t> mask, double step) {
    if (u.size() < 2) throw Error(ErrorKind::InvalidInput, "zero flipping needs a sequence of length >= 2");
    if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorKind::InvalidInput, "step must be positive");
    for (const auto& c : u) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw Error(ErrorKind::InvalidInput, "non-finite sample");
    }
    if (!mask && u.size() > kMaxFlipLength) {
        throw Error(ErrorKind::EnumerationCap, "enumerating every flip is limited to length " +
                                                   std::to_string(kMaxFlipLength));
    }

    FlipSolutionSet set;
    set.base = u;
    set.alpha = alpha;
    set.step = step;

    // trailing zeros only shorten the polynomial
    CVec poly = chirp_sequence(u, alpha, step, +1);
    std::size_t deg = poly.size();
    while (deg > 0 && poly[deg - 1] == cplx(0.0)) --deg;
    if (deg == 0) throw Error(ErrorKind::InvalidInput, "sequence is identically zero");
    poly.resize(deg);
    const cplx lead = poly.back();
    if (deg > 1) {
        try {
            set.roots = polynomial_roots(poly);
        } catch (const Error& e) {
            throw Error(ErrorKind::Numerical, std::string(e.what()) + "; polynomial:" + describe(poly));
        }
    }
    for (std::size_t k = 0; k < set.roots.size(); ++k) {
        const double r = std::abs(set.roots[k]);
        // roots at the origin would flip to infinity
        if (r < 1e-12) continue;
        if (std::abs(r - 1.0) > kUnitCircleTol) set.flippable.push_back(k);
    }

    const std::size_t m = set.flippable.size();
    if (mask) {
        if (m < 64 && (*mask >> m) != 0) {
            throw Error(ErrorKind::InvalidInput, "mask selects roots beyond the " + std::to_string(m) + " flippable ones");
        }
        set.masks.push_back(*mask);
    } else {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) set.masks.push_back(b);
    }

    for (std::uint64_t b : set.masks) {
        CVec roots = set.roots;
        cplx c = lead;
        // (z - r) -> (conj(r) z - 1) keeps the modulus on |z| = 1
        for (std::size_t i = 0; i < m; ++i) {
            if (!((b >> i) & 1u)) continue;
            cplx& r = roots[set.flippable[i]];
            c *= std::conj(r);
            r = 1.0 / std::conj(r);
        }
        CVec v = polynomial_from_roots(roots, c);
        v.resize(u.size(), cplx(0.0));
        set.solutions.push_back(chirp_sequence(v, alpha, step, -1));
    }
    return set;
}

RVec delta_train_frft_magnitude(const CVec& u, double alpha, double step, const Grid& out) {
    out.validate();
    const double a = reduce_angle(alpha);
    const double s = std::sin(a);
    const CVec ua = chirp_sequence(u, a, step, +1);
    const double amp = 1.0 / std::sqrt(std::abs(s));
    RVec mag(out.n);
    for (std::size_t q = 0; q < out.n; ++q) {
        const double w = -2.0 * kPi * step * out.at(q) / s;
        cplx acc = 0.0;
        for (std::size_t j = ua.size(); j-- > 0;) acc = acc * std::polar(1.0, w) + ua[j];
        mag[q] = amp * std::abs(acc);
    }
    return mag;
}

}  // namespace frpr
