#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frpr/ambiguity.hpp"
#include "frpr/frft.hpp"

namespace frpr {

enum class ScheduleKind { Basic, Oversampled };

/// Sampling lines y = k c x, |k| <= k_max, of the ambiguity plane, and the FrFT angles that
/// realise them. Basic: c = 1/a^2 (gamma = 2/a^2); oversampled: c = 1/b^2.
struct AngleSchedule {
    ScheduleKind kind = ScheduleKind::Basic;
    double a = 1.0;
    double b = 0.0;  // oversampled only
    int k_max = 0;
    RVec angles;     // alpha_k for k = -k_max..k_max (index k + k_max); alpha_0 = pi/2

    double line_slope() const;             // c above
    double alpha(int k) const { return angles[static_cast<std::size_t>(k + k_max)]; }
    /// Angle at which the k-th magnitude is measured: -alpha_k.
    double measurement_angle(int k) const { return -alpha(k); }
    /// Step h_x of the sampling series in row x.
    double row_step(double x) const { return 2.0 * line_slope() * x; }
    /// Band half-width of row x: the autocorrelation product lives in [-(a - |x|/2), a - |x|/2].
    double row_band(double x) const;
};

AngleSchedule build_schedule(ScheduleKind kind, double a, std::optional<double> b, int k_max);

/// Oversampling kernel data for one row.
struct KernelSpec {
    double sigma = 1.0;
    double h = 1.0;
    int smoothness = 4;
    double tau_plus = 1.0;
    double tau_minus = 0.0;

    static KernelSpec make(double sigma, double h, int smoothness = 4);
    /// Force the pure-sinc series (tau_minus = 0, band tau_plus = 1/h).
    static KernelSpec sinc(double h);
    bool pure_sinc() const { return tau_minus == 0.0; }
};

/// Smooth even bump supported in [-1, 1] with unit integral, C^j at the endpoints.
double bump_kernel(double xi, int smoothness = 4);
/// Its Fourier transform int bump(xi) e^{-2 pi i xi z} d xi (real, even).
double bump_kernel_ft(double z, int smoothness = 4);

struct RowSample {
    double y;
    cplx value;
};

/// phi(y) = h tau_+ sum_k phi(y_k) bump^(tau_-(y - y_k)) sinc(2 pi tau_+ (y - y_k)).
/// (Reduces to the Whittaker series when h sigma = 1.)
CVec shannon_reconstruct_row(const std::vector<RowSample>& samples, const KernelSpec& spec,
                             const Grid& y_eval);

struct RowReport {
    double x = 0.0;
    double truncation = 0.0;  // edge samples relative to the largest sample over all rows
    bool zero_by_support = false;
    bool trusted = false;
};

struct AmbiguityReconstruction {
    AmbiguityGrid grid;
    std::vector<RowReport> rows;
    double display_mismatch = 0.0;  // oversampled only: generic assembly vs the closed display
    std::string display_note;
};

struct ReconstructionOptions {
    double trust_truncation = 1e-3;
    bool smooth_kernel = true;  // oversampled schedule: use the bump kernel
    bool compare_display = false;
    unsigned threads = 1;  // rows are split across threads; results do not depend on it
};

/// measurements[k + k_max] must be taken at schedule.measurement_angle(k).
AmbiguityReconstruction reconstruct_ambiguity(const std::vector<MagnitudeMeasurement>& measurements,
                                              const AngleSchedule& schedule, const Grid& x_axis,
                                              const Grid& y_axis,
                                              const ReconstructionOptions& opt = {});

struct SignalRecovery {
    Signal signal;
    AmbiguityReconstruction ambiguity;
    double min_trusted_x = 0.0;
};

/// reconstruct_ambiguity on rows x = m * target.dt, then rank-one inversion from the trusted rows.
SignalRecovery recover_signal(const std::vector<MagnitudeMeasurement>& measurements,
                              const AngleSchedule& schedule, const Grid& target,
                              const ReconstructionOptions& opt = {});

/// Sup |reconstructed - direct ambiguity| / sup |direct| over rows x = a/4 .. 7a/4 (step a/8)
/// and |y| <= y_slope * x, i.e. inside the sampled part of each row.
double windowed_ambiguity_error(const Signal& u, const std::vector<MagnitudeMeasurement>& measurements,
                                const AngleSchedule& schedule, double y_slope,
                                const ReconstructionOptions& opt = {});

/// Generates noiseless (or noisy) measurements of u at every schedule angle.
std::vector<MagnitudeMeasurement> measure_schedule(const Signal& u, const AngleSchedule& schedule,
                                                   double noise_sigma = 0.0, std::uint64_t seed = 0);

}  // namespace frpr
