#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frpr/grid.hpp"

namespace frpr {

/// Masks are enumerated exhaustively only up to this sequence length.
inline constexpr std::size_t kMaxFlipLength = 16;

/// Roots closer than this (relative) to the unit circle are not flipped.
inline constexpr double kUnitCircleTol = 1e-9;

struct FlipSolutionSet {
    CVec base;
    double alpha = 0.0;
    double step = 1.0;
    CVec roots;                        // roots of the chirped z-transform polynomial
    std::vector<std::size_t> flippable;  // indices into roots, off the unit circle
    std::vector<std::uint64_t> masks;  // bit i flips roots[flippable[i]]
    std::vector<CVec> solutions;
};

/// e^{i pi cot(alpha) (j step)^2} u[j]: the discrete chirp that the FrFT applies.
CVec chirp_sequence(const CVec& u, double alpha, double step, int sign = +1);

/// Zero-flipping solutions of |F_alpha v| = |F_alpha u| for a finite sequence.
/// With no mask every subset of the off-circle roots is enumerated.
FlipSolutionSet enumerate_flips(const CVec& u, double alpha, std::optional<std::uint64_t> mask = {},
                                double step = 1.0);

/// A sequence viewed as a delta train sum u[j] delta(t - j step) has
/// F_alpha(xi) = c_alpha e^{i pi cot xi^2} sum_j u_alpha[j] e^{-2 pi i j step xi / sin alpha};
/// returns |F_alpha| on `out`.
RVec delta_train_frft_magnitude(const CVec& u, double alpha, double step, const Grid& out);

}  // namespace frpr
