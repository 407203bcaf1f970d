#pragma once

#include <cstddef>

#include "frpr/grid.hpp"

namespace frpr {

/// In-place style DFT: out_j = sum_k in_k exp(sign 2 pi i jk/n). Unnormalized.
CVec dft(const CVec& in, int sign);

/// Evaluates S_j = sum_k g_k exp(sign 2 pi i (t0 + k dt)(nu0 + j dnu)), j = 0..m-1,
/// with Bluestein's chirp-z factorisation (O((n+m) log(n+m))). When the output
/// lattice is the exact dual of the input one, a plain FFT is used instead.
CVec zoom_dft(const CVec& g, double t0, double dt, double nu0, double dnu, std::size_t m, int sign);

/// Riemann-sum continuous Fourier transform  int u(t) e^{-2 pi i t nu} dt  onto `out`.
CVec fourier_transform(const Signal& u, const Grid& out);

/// int U(nu) e^{+2 pi i t nu} dnu on `out`, where U is sampled on `freq`.
CVec inverse_fourier_transform(const CVec& spectrum, const Grid& freq, const Grid& out);

/// Periodic band-limited interpolation: w_j = u(t_j + shift * dt).
CVec bandlimited_shift(const CVec& u, double shift);

}  // namespace frpr
