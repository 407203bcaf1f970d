#pragma once

#include <cstdint>

#include "frpr/grid.hpp"
#include "frpr/models.hpp"

namespace frpr {

/// Below this |sin alpha| the chirp route refuses (the 1/sin alpha dilation explodes).
inline constexpr double kAngleFloor = 1e-3;

/// alpha mod 2 pi, in (-pi, pi].
double reduce_angle(double alpha);

/// Square root of 1 - i cot(alpha) used as the kernel normalisation; alpha in (-pi, pi] \ {0, pi}.
cplx frft_normalisation(double alpha);

struct FrftPlan {
    Grid grid_in;
    Grid grid_out;
    double alpha = 0.0;  // reduced
    cplx c_alpha{1.0, 0.0};

    enum class Kind { Identity, Reflection, Chirp } kind = Kind::Chirp;

    static FrftPlan make(const Grid& in, const Grid& out, double alpha);
};

/// F_alpha u by chirp multiplication, zoom DFT at xi/sin(alpha), chirp, scale.
/// The output lives on the input grid.
Signal frft_chirp(const Signal& u, double alpha);
Signal frft_chirp(const Signal& u, double alpha, const Grid& out);

/// Like frft_chirp, but angles within kAngleFloor of 0 or pi are computed as
/// F_{alpha - pi/2} F_{pi/2}, so every angle is accepted.
Signal frft_any(const Signal& u, double alpha);

struct HermiteFrftResult {
    Signal transform;
    CVec coefficients;  // <u, h_k> before the e^{-ik alpha} rotation
    double residual = 0.0;  // || u - projection ||
};

/// Projects onto h_0..h_K, multiplies coefficient k by e^{-ik alpha}, resynthesises.
HermiteFrftResult frft_hermite(const Signal& u, double alpha, int max_degree);

/// O(n^2) direct Riemann sum of the defining integral; test oracle only.
Signal frft_quadrature_oracle(const Signal& u, double alpha, const Grid& out);

/// Exact F_alpha of a pulse train (Fresnel integrals, Gauss-Legendre near alpha = pi/2).
Signal frft_pulse_train(const PulseTrainModel& m, double alpha, const Grid& out);

struct MagnitudeMeasurement {
    double alpha = 0.0;
    Grid grid;
    RVec magnitudes;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// |F_alpha u| plus N(0, sigma^2) noise clipped at zero; deterministic in the seed.
MagnitudeMeasurement measure_magnitude(const Signal& u, double alpha, double noise_sigma = 0.0,
                                       std::uint64_t seed = 0);

/// Same, from the exact transform of a model (pulse trains use frft_pulse_train,
/// other classes are sampled on `grid` and go through the chirp route).
MagnitudeMeasurement measure_model_magnitude(const Model& m, double alpha, const Grid& grid,
                                             double noise_sigma = 0.0, std::uint64_t seed = 0);

/// Adds the noise model of measure_magnitude to a noiseless magnitude vector.
void apply_magnitude_noise(MagnitudeMeasurement& m, double noise_sigma, std::uint64_t seed);

}  // namespace frpr
