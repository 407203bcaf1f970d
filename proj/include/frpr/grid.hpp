#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace frpr {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using RVec = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform grid t0 + j*dt, j = 0..n-1.
struct Grid {
    double t0 = 0.0;
    double dt = 1.0;
    std::size_t n = 0;

    double at(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
    double back() const { return at(n - 1); }

    /// Throws InvalidInput unless dt > 0, n >= 2 and all fields finite.
    void validate() const;

    /// [-T, T) with n points, so that t = 0 sits at index n/2 for even n.
    static Grid symmetric(double half_width, std::size_t n);

    /// Dual (FFT) grid: step 1/(n dt), centred the same way as symmetric().
    Grid dual() const;

    bool operator==(const Grid&) const = default;
};

/// True when the grids agree to a relative 1e-12 on every field.
bool same_grid(const Grid& a, const Grid& b);

struct Signal {
    Grid grid;
    CVec samples;

    Signal() = default;
    Signal(Grid g, CVec s);

    std::size_t size() const { return samples.size(); }
    double norm() const;  // sqrt(dt * sum |s|^2)
    double norm2() const;
};

/// dt * sum u conj(v); grids must match.
cplx inner(const Signal& u, const Signal& v);

Signal scaled(const Signal& u, cplx c);
Signal operator+(const Signal& a, const Signal& b);
Signal operator-(const Signal& a, const Signal& b);

/// Literal L2 distance ||a - b|| / max(||a||, eps).
double relative_l2(const Signal& a, const Signal& b);
double max_abs(const CVec& v);

}  // namespace frpr
