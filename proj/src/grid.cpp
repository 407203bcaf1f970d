#include "frpr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frpr/error.hpp"

namespace frpr {

void Grid::validate() const {
    if (!std::isfinite(t0) || !std::isfinite(dt) || !(dt > 0.0) || n < 2) {
        throw Error(ErrorKind::InvalidInput, "invalid grid: t0=" + std::to_string(t0) +
                                                 " dt=" + std::to_string(dt) +
                                                 " n=" + std::to_string(n));
    }
}

Grid Grid::symmetric(double half_width, std::size_t n) {
    Grid g{-half_width, 2.0 * half_width / static_cast<double>(n), n};
    g.validate();
    return g;
}

Grid Grid::dual() const {
    const double step = 1.0 / (static_cast<double>(n) * dt);
    return Grid{-static_cast<double>(n / 2) * step, step, n};
}

namespace {
bool close(double a, double b, double scale) {
    return std::abs(a - b) <= 1e-12 * std::max(scale, 1e-300);
}
}  // namespace

bool same_grid(const Grid& a, const Grid& b) {
    const double scale = std::max({std::abs(a.t0), std::abs(b.t0), a.dt * a.n, b.dt * b.n});
    return a.n == b.n && close(a.dt, b.dt, a.dt) && close(a.t0, b.t0, scale);
}

Signal::Signal(Grid g, CVec s) : grid(g), samples(std::move(s)) {
    grid.validate();
    if (samples.size() != grid.n) {
        throw Error(ErrorKind::InvalidInput, "signal length " + std::to_string(samples.size()) +
                                                 " does not match grid size " +
                                                 std::to_string(grid.n));
    }
}

double Signal::norm2() const {
    double s = 0.0;
    for (const auto& z : samples) s += std::norm(z);
    return s * grid.dt;
}

double Signal::norm() const { return std::sqrt(norm2()); }

namespace {
void require_same(const Signal& u, const Signal& v) {
    if (!same_grid(u.grid, v.grid)) throw Error(ErrorKind::InvalidInput, "grid mismatch");
}
}  // namespace

cplx inner(const Signal& u, const Signal& v) {
    require_same(u, v);
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < u.size(); ++j) s += u.samples[j] * std::conj(v.samples[j]);
    return s * u.grid.dt;
}

Signal scaled(const Signal& u, cplx c) {
    Signal out = u;
    for (auto& z : out.samples) z *= c;
    return out;
}

Signal operator+(const Signal& a, const Signal& b) {
    require_same(a, b);
    Signal out = a;
    for (std::size_t j = 0; j < out.size(); ++j) out.samples[j] += b.samples[j];
    return out;
}

Signal operator-(const Signal& a, const Signal& b) {
    require_same(a, b);
    Signal out = a;
    for (std::size_t j = 0; j < out.size(); ++j) out.samples[j] -= b.samples[j];
    return out;
}

double relative_l2(const Signal& a, const Signal& b) {
    return (a - b).norm() / std::max(a.norm(), 1e-300);
}

double max_abs(const CVec& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace frpr
