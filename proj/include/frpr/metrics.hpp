#pragma once

#include "frpr/grid.hpp"

namespace frpr {

inline constexpr double kDistanceFloor = 1e-300;

/// min over |c| = 1 of ||u - c v|| / max(||u||, eps), in closed form.
double phase_invariant_distance(const Signal& u, const Signal& v);

/// Unimodular c minimising ||u - c v||.
cplx best_phase(const Signal& u, const Signal& v);
cplx best_phase(const CVec& u, const CVec& v);

/// max_k |est_k c - truth_k| with c the unimodular factor best aligning est to truth.
double aligned_coefficient_error(const CVec& est, const CVec& truth);

}  // namespace frpr
