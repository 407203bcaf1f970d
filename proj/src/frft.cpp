#include "frpr/frft.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "frpr/error.hpp"
#include "frpr/fft.hpp"
#include "frpr/hermite.hpp"
#include "frpr/special.hpp"

namespace frpr {

double reduce_angle(double alpha) {
    if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidInput, "angle is not finite");
    double r = std::remainder(alpha, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

cplx frft_normalisation(double alpha) {
    const double a = reduce_angle(alpha);
    const double s = std::sin(a);
    if (s == 0.0) throw Error(ErrorKind::NearSingularAngle, "normalisation undefined at multiples of pi");
    const double sgn = s > 0.0 ? 1.0 : -1.0;
    return std::polar(1.0 / std::sqrt(std::abs(s)), 0.5 * (a - sgn * kPi / 2.0));
}

namespace {

bool is_exact_zero(double a) { return a == 0.0; }
bool is_exact_pi(double a) { return a == kPi; }

// Index map t_j -> -t_j when the grid is symmetric about the origin.
std::optional<std::size_t> mirror_index(const Grid& g, std::size_t j) {
    const double centred = g.t0 + 0.5 * (g.n - 1) * g.dt;
    if (std::abs(centred) <= 1e-12 * g.dt * g.n) return g.n - 1 - j;
    const double half = g.t0 + 0.5 * g.n * g.dt;
    if (std::abs(half) <= 1e-12 * g.dt * g.n) return (g.n - j) % g.n;
    return std::nullopt;
}

}  // namespace

FrftPlan FrftPlan::make(const Grid& in, const Grid& out, double alpha) {
    in.validate();
    out.validate();
    FrftPlan p;
    p.grid_in = in;
    p.grid_out = out;
    p.alpha = reduce_angle(alpha);
    if (is_exact_zero(p.alpha)) {
        p.kind = Kind::Identity;
    } else if (is_exact_pi(p.alpha)) {
        p.kind = Kind::Reflection;
    } else {
        if (std::abs(std::sin(p.alpha)) < kAngleFloor) {
            throw Error(ErrorKind::NearSingularAngle,
                        "|sin alpha| = " + std::to_string(std::abs(std::sin(p.alpha))) + " below the chirp floor");
        }
        p.kind = Kind::Chirp;
        p.c_alpha = frft_normalisation(p.alpha);
    }
    if (p.kind != Kind::Chirp) {
        if (!(in == out)) throw Error(ErrorKind::InvalidInput, "alpha in {0, pi} needs the output grid equal to the input grid");
        if (p.kind == Kind::Reflection && !mirror_index(in, 0)) {
            throw Error(ErrorKind::InvalidInput, "reflection needs a grid symmetric about the origin");
        }
    }
    return p;
}

Signal frft_chirp(const Signal& u, double alpha) { return frft_chirp(u, alpha, u.grid); }

Signal frft_chirp(const Signal& u, double alpha, const Grid& out) {
    const FrftPlan plan = FrftPlan::make(u.grid, out, alpha);
    if (plan.kind == FrftPlan::Kind::Identity) return u;
    if (plan.kind == FrftPlan::Kind::Reflection) {
        CVec r(u.grid.n);
        for (std::size_t j = 0; j < u.grid.n; ++j) r[j] = u.samples[*mirror_index(u.grid, j)];
        return Signal(out, std::move(r));
    }
    const double s = std::sin(plan.alpha);
    const double cot = std::cos(plan.alpha) / s;
    const Grid& g = u.grid;
    CVec pre(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        const double t = g.at(k);
        pre[k] = u.samples[k] * std::polar(1.0, kPi * cot * t * t);
    }
    CVec core = zoom_dft(pre, g.t0, g.dt, out.t0 / s, out.dt / s, out.n, -1);
    CVec res(out.n);
    for (std::size_t j = 0; j < out.n; ++j) {
        const double xi = out.at(j);
        res[j] = plan.c_alpha * g.dt * std::polar(1.0, kPi * cot * xi * xi) * core[j];
    }
    return Signal(out, std::move(res));
}

Signal frft_any(const Signal& u, double alpha) {
    const double a = reduce_angle(alpha);
    if (is_exact_zero(a) || is_exact_pi(a) || std::abs(std::sin(a)) >= kAngleFloor) return frft_chirp(u, a);
    return frft_chirp(frft_chirp(u, kPi / 2.0), a - kPi / 2.0);
}

HermiteFrftResult frft_hermite(const Signal& u, double alpha, int max_degree) {
    if (max_degree < 0 || max_degree > kMaxHermiteDegree) {
        throw Error(ErrorKind::DegreeLimit, "Hermite FrFT degree out of range");
    }
    const Grid& g = u.grid;
    HermiteFrftResult r;
    r.coefficients.assign(max_degree + 1, cplx{0.0, 0.0});
    std::vector<RVec> basis(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        basis[j] = hermite_functions(max_degree, g.at(j));
        for (int k = 0; k <= max_degree; ++k) r.coefficients[k] += g.dt * u.samples[j] * basis[j][k];
    }
    CVec rotated(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) rotated[k] = r.coefficients[k] * std::polar(1.0, -k * alpha);
    CVec out(g.n, cplx{0.0, 0.0});
    double resid2 = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) {
        cplx proj{0.0, 0.0};
        for (int k = 0; k <= max_degree; ++k) {
            out[j] += rotated[k] * basis[j][k];
            proj += r.coefficients[k] * basis[j][k];
        }
        resid2 += std::norm(u.samples[j] - proj) * g.dt;
    }
    r.residual = std::sqrt(resid2);
    r.transform = Signal(g, std::move(out));
    return r;
}

Signal frft_quadrature_oracle(const Signal& u, double alpha, const Grid& out) {
    const double a = reduce_angle(alpha);
    const double s = std::sin(a);
    if (std::abs(s) < kAngleFloor) throw Error(ErrorKind::NearSingularAngle, "oracle needs |sin alpha| >= floor");
    const double cot = std::cos(a) / s;
    const cplx c = std::sqrt(cplx{1.0, -cot});
    const Grid& g = u.grid;
    CVec res(out.n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < out.n; ++j) {
        const double xi = out.at(j);
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k < g.n; ++k) {
            const double t = g.at(k);
            acc += u.samples[k] * std::polar(1.0, kPi * cot * (xi * xi + t * t) - 2.0 * kPi * t * xi / s);
        }
        res[j] = c * g.dt * acc;
    }
    return Signal(out, std::move(res));
}

Signal frft_pulse_train(const PulseTrainModel& m, double alpha, const Grid& out) {
    m.validate();
    out.validate();
    const double a = reduce_angle(alpha);
    if (is_exact_zero(a)) return evaluate_model(m, out);
    if (is_exact_pi(a)) {
        CVec r(out.n, cplx{0.0, 0.0});
        for (std::size_t j = 0; j < out.n; ++j) {
            const double t = -out.at(j);
            for (const auto& [k, c] : m.coeffs) {
                if (t >= m.a * k && t < m.a * k + m.b) r[j] += c;
            }
        }
        return Signal(out, std::move(r));
    }
    const double s = std::sin(a);
    if (std::abs(s) < kAngleFloor) throw Error(ErrorKind::NearSingularAngle, "pulse transform needs |sin alpha| >= floor");
    const double cot = std::cos(a) / s;
    const cplx c = frft_normalisation(a);
    CVec res(out.n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < out.n; ++j) {
        const double xi = out.at(j);
        const double c1 = -2.0 * kPi * xi / s;
        cplx acc{0.0, 0.0};
        for (const auto& [k, coeff] : m.coeffs) {
            acc += coeff * chirp_integral(kPi * cot, c1, m.a * k, m.a * k + m.b);
        }
        res[j] = c * std::polar(1.0, kPi * cot * xi * xi) * acc;
    }
    return Signal(out, std::move(res));
}

void MagnitudeMeasurement::validate() const {
    grid.validate();
    if (magnitudes.size() != grid.n) throw Error(ErrorKind::InvalidInput, "measurement size does not match its grid");
    if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidInput, "measurement angle is not finite");
    for (double v : magnitudes) {
        if (!std::isfinite(v) || v < 0.0) throw Error(ErrorKind::InvalidInput, "magnitudes must be finite and >= 0");
    }
    if (noise_sigma < 0.0) throw Error(ErrorKind::InvalidInput, "negative noise level");
}

void apply_magnitude_noise(MagnitudeMeasurement& m, double noise_sigma, std::uint64_t seed) {
    if (noise_sigma < 0.0) throw Error(ErrorKind::InvalidInput, "negative noise level");
    m.noise_sigma = noise_sigma;
    m.seed = seed;
    if (noise_sigma == 0.0) return;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, noise_sigma);
    for (double& v : m.magnitudes) v = std::max(0.0, v + dist(rng));
}

namespace {

MagnitudeMeasurement from_transform(const Signal& f, double alpha, double sigma, std::uint64_t seed) {
    MagnitudeMeasurement m;
    m.alpha = alpha;
    m.grid = f.grid;
    m.magnitudes.resize(f.grid.n);
    for (std::size_t j = 0; j < f.grid.n; ++j) m.magnitudes[j] = std::abs(f.samples[j]);
    apply_magnitude_noise(m, sigma, seed);
    return m;
}

}  // namespace

MagnitudeMeasurement measure_magnitude(const Signal& u, double alpha, double noise_sigma, std::uint64_t seed) {
    return from_transform(frft_any(u, alpha), alpha, noise_sigma, seed);
}

MagnitudeMeasurement measure_model_magnitude(const Model& model, double alpha, const Grid& grid, double noise_sigma,
                                             std::uint64_t seed) {
    if (const auto* p = std::get_if<PulseTrainModel>(&model)) {
        return from_transform(frft_pulse_train(*p, alpha, grid), alpha, noise_sigma, seed);
    }
    const Signal u = std::visit([&](const auto& m) { return evaluate_model(m, grid); }, model);
    return measure_magnitude(u, alpha, noise_sigma, seed);
}

}  // namespace frpr
