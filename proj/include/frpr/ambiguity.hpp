#pragma once

#include <vector>

#include "frpr/frft.hpp"
#include "frpr/grid.hpp"
#include "frpr/models.hpp"

namespace frpr {

/// A(u, v)(x, y) sampled on x_axis x y_axis, row-major (one row per x).
struct AmbiguityGrid {
    Grid x_axis;
    Grid y_axis;
    CVec values;

    cplx& at(std::size_t ix, std::size_t iy) { return values[ix * y_axis.n + iy]; }
    const cplx& at(std::size_t ix, std::size_t iy) const { return values[ix * y_axis.n + iy]; }
    CVec row(std::size_t ix) const;
};

/// A(u)(-t sin alpha, t cos alpha) on t_axis.
struct LineSlice {
    double alpha = 0.0;
    Grid t_axis;
    CVec values;
};

/// int u(t + x/2) conj(v(t - x/2)) e^{-2 pi i t y} dt, evaluated as
/// sum_l u(t_l + x) conj v(t_l) e^{-2 pi i y (t_l + x/2)} dt with u zero off the grid.
/// Lags that are not multiples of dt use band-limited interpolation on a zero-padded copy.
/// `u` and `v` must share a grid.
AmbiguityGrid ambiguity(const Signal& u, const Signal& v, const Grid& x_axis, const Grid& y_axis);

/// Exact ambiguity of a pulse train (piecewise-constant integrand integrated in closed form).
AmbiguityGrid ambiguity(const PulseTrainModel& m, const Grid& x_axis, const Grid& y_axis);

/// Closed forms used as references.
cplx ambiguity_gaussian(double x, double y);              // A(e^{-pi t^2})
cplx ambiguity_indicator(double b, double x, double y);   // A(chi_[0,b))

/// FT[|F_alpha u|^2] on the dual grid of the measurement.
LineSlice slice_from_magnitude(const MagnitudeMeasurement& m);

/// FT[|F_alpha u|^2](tau_j), tau_j = tau0 + j dtau: exact evaluation of the discrete
/// transform at arbitrary affine points.
CVec slice_values(const MagnitudeMeasurement& m, double tau0, double dtau, std::size_t count);

struct InversionOptions {
    double zero_threshold = 1e-6;  // relative to max |u|
    int max_gap = 3;               // samples
    bool allow_disconnected = false;
};

struct InversionResult {
    Signal signal;
    /// [begin, end) index ranges of connected numerical support; each carries its own phase.
    std::vector<std::pair<std::size_t, std::size_t>> segments;
};

/// Recovers u (up to global phase) from its ambiguity: |u|^2 from the x = 0 row, phases
/// chained from the largest sample through the x = dt row evaluated at midpoints.
/// The x axis must contain 0 and the target step `target.dt`.
InversionResult invert_ambiguity(const AmbiguityGrid& a, const Grid& target,
                                 const InversionOptions& opt = {});

/// Recovers u from rows |x| >= min_abs_x only: the rank-one matrix u(s) conj u(r) is
/// filled from the rows, its missing entries completed through rank-one consistency, and
/// the leading eigenvector returned. The x axis step must be a multiple of target.dt.
/// A non-empty use_row (one flag per x row) drops the unflagged rows as well.
Signal invert_ambiguity_rank1(const AmbiguityGrid& a, const Grid& target, double min_abs_x,
                              int iterations = 200, const std::vector<char>& use_row = {});

}  // namespace frpr
