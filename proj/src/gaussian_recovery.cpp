#include "frpr/gaussian_recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "frpr/ambiguity.hpp"
#include "frpr/angle.hpp"
#include "frpr/error.hpp"
#include "frpr/rank1.hpp"

namespace frpr {

cplx gaussian_mixture_slice(const GaussianMixtureModel& m, double alpha, double t) {
    const double s = std::sin(alpha), c = std::cos(alpha);
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < m.nodes.size(); ++j) {
        for (std::size_t k = 0; k < m.nodes.size(); ++k) {
            const double d = m.nodes[j] - m.nodes[k];
            const cplx z{-kPi * s * d, -kPi * c * (m.nodes[j] + m.nodes[k])};
            acc += m.coeffs[j] * std::conj(m.coeffs[k]) * std::exp(-kPi * d * d / 2.0 + z * t);
        }
    }
    return acc * std::exp(-kPi * t * t / 2.0) / std::sqrt(2.0);
}

namespace {

// Slice samples on a uniform tau grid, each row scaled by weight (value already scaled).
struct SliceData {
    RVec tau;
    RVec weight;
    CVec value;
    double norm = 0.0;
};

SliceData make_slice_data(const MagnitudeMeasurement& m, double half_width, std::size_t count, double beta) {
    SliceData d;
    const double dq = 2.0 * half_width / static_cast<double>(count - 1);
    d.value = slice_values(m, -half_width, dq, count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = -half_width + static_cast<double>(k) * dq;
        d.tau.push_back(t);
        d.weight.push_back(std::exp(beta * t * t));
        d.value[k] *= d.weight.back();
        d.norm += std::norm(d.value[k]);
    }
    d.norm = std::sqrt(d.norm);
    return d;
}

double slice_residual(const GaussianMixtureModel& m, double alpha, const SliceData& d, Eigen::VectorXd* r = nullptr) {
    if (r) r->resize(static_cast<Eigen::Index>(2 * d.tau.size()));
    double acc = 0.0;
    for (std::size_t q = 0; q < d.tau.size(); ++q) {
        const cplx e = d.weight[q] * gaussian_mixture_slice(m, alpha, d.tau[q]) - d.value[q];
        acc += std::norm(e);
        if (r) {
            (*r)(static_cast<Eigen::Index>(2 * q)) = e.real();
            (*r)(static_cast<Eigen::Index>(2 * q + 1)) = e.imag();
        }
    }
    return std::sqrt(acc) / std::max(d.norm, 1e-300);
}

// Residual and, when asked, its Jacobian.
using Problem = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&, Eigen::MatrixXd*)>;

// Powell dogleg trust region. Levenberg-Marquardt stalls in the curved valleys
// that overlapping Gaussians produce; the dogleg path does not.
Eigen::VectorXd dogleg(const Problem& f, Eigen::VectorXd p, int max_iter, double stop_norm, int& iters) {
    Eigen::VectorXd r, rt;
    Eigen::MatrixXd J;
    f(p, r, &J);
    double cost = 0.5 * r.squaredNorm();
    double radius = 0.1 * std::max(1.0, p.norm());
    iters = 0;
    for (int it = 0; it < max_iter; ++it) {
        ++iters;
        if (std::sqrt(2.0 * cost) <= stop_norm || radius < 1e-15 * std::max(1.0, p.norm())) break;
        const Eigen::VectorXd g = J.transpose() * r;
        const Eigen::VectorXd gn = J.completeOrthogonalDecomposition().solve(-r);
        const Eigen::VectorXd Jg = J * g;
        const double jg2 = Jg.squaredNorm();
        const Eigen::VectorXd sd = jg2 > 0.0 ? Eigen::VectorXd(-(g.squaredNorm() / jg2) * g) : Eigen::VectorXd(-g);
        Eigen::VectorXd step;
        if (gn.norm() <= radius) {
            step = gn;
        } else if (sd.norm() >= radius) {
            step = radius * sd / sd.norm();
        } else {
            const Eigen::VectorXd d = gn - sd;
            const double A = d.squaredNorm(), B = 2.0 * sd.dot(d), C = sd.squaredNorm() - radius * radius;
            step = sd + ((-B + std::sqrt(B * B - 4.0 * A * C)) / (2.0 * A)) * d;
        }
        const Eigen::VectorXd Js = J * step;
        const double predicted = -(g.dot(step) + 0.5 * Js.squaredNorm());
        f(p + step, rt, nullptr);
        const double ct = 0.5 * rt.squaredNorm();
        const double rho = predicted > 0.0 && std::isfinite(ct) ? (cost - ct) / predicted : -1.0;
        if (rho < 0.25) {
            radius *= 0.25;
        } else if (rho > 0.75 && step.norm() > 0.99 * radius) {
            radius *= 2.0;
        }
        if (rho > 1e-4) {
            p += step;
            f(p, r, &J);
            cost = 0.5 * r.squaredNorm();
        }
    }
    return p;
}

void stack(const Eigen::VectorXcd& e, Eigen::Ref<Eigen::VectorXd> out) {
    for (Eigen::Index q = 0; q < e.size(); ++q) {
        out(2 * q) = e(q).real();
        out(2 * q + 1) = e(q).imag();
    }
}

// Column j*N + k holds 2^{-1/2} e^{-pi (tau^2 + d^2)/2 + z_jk tau}; D1 and D2 are its
// derivatives with respect to t_j and t_k.
struct Basis {
    Eigen::MatrixXcd B, D1, D2;
};

Basis slice_basis(const RVec& nodes, double s, double c, const SliceData& d, bool derivatives) {
    const std::size_t N = nodes.size();
    const auto Q = static_cast<Eigen::Index>(d.tau.size());
    const auto P = static_cast<Eigen::Index>(N * N);
    Basis b;
    b.B.resize(Q, P);
    if (derivatives) {
        b.D1.resize(Q, P);
        b.D2.resize(Q, P);
    }
    const cplx w1{-kPi * s, -kPi * c}, w2{kPi * s, -kPi * c};
    // tau is uniform, so each column follows v_{q+1} = v_q e^{z h} e^{-pi (2 tau_q h + h^2)/2}
    const double h = Q > 1 ? d.tau[1] - d.tau[0] : 0.0;
    RVec gauss_step(static_cast<std::size_t>(Q));
    for (std::size_t q = 0; q < gauss_step.size(); ++q) gauss_step[q] = std::exp(-kPi * (2.0 * d.tau[q] * h + h * h) / 2.0);
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t k = 0; k < N; ++k) {
            const auto col = static_cast<Eigen::Index>(j * N + k);
            const double dd = nodes[j] - nodes[k];
            const cplx z{-kPi * s * dd, -kPi * c * (nodes[j] + nodes[k])};
            const double t0 = d.tau[0];
            cplx v = std::exp(-kPi * (t0 * t0 + dd * dd) / 2.0 + z * t0) / std::sqrt(2.0);
            const bool direct = std::abs(v) < 1e-280;
            const cplx ratio = std::exp(z * h);
            for (Eigen::Index q = 0; q < Q; ++q) {
                const double t = d.tau[static_cast<std::size_t>(q)];
                if (direct) v = std::exp(-kPi * (t * t + dd * dd) / 2.0 + z * t) / std::sqrt(2.0);
                b.B(q, col) = v;
                if (derivatives) {
                    b.D1(q, col) = (-kPi * dd + w1 * t) * v;
                    b.D2(q, col) = (kPi * dd + w2 * t) * v;
                }
                if (!direct) v *= ratio * gauss_step[static_cast<std::size_t>(q)];
            }
        }
    }
    for (Eigen::Index q = 0; q < Q; ++q) {
        const double w = d.weight[static_cast<std::size_t>(q)];
        b.B.row(q) *= w;
        if (derivatives) {
            b.D1.row(q) *= w;
            b.D2.row(q) *= w;
        }
    }
    return b;
}

// d(B X)/d t_m
Eigen::VectorXcd node_derivative(const Basis& b, const Eigen::VectorXcd& X, std::size_t N, std::size_t m) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(b.B.rows());
    for (std::size_t k = 0; k < N; ++k) {
        v += b.D1.col(static_cast<Eigen::Index>(m * N + k)) * X(static_cast<Eigen::Index>(m * N + k));
        v += b.D2.col(static_cast<Eigen::Index>(k * N + m)) * X(static_cast<Eigen::Index>(k * N + m));
    }
    return v;
}

Eigen::VectorXcd data_vector(const SliceData& d) {
    Eigen::VectorXcd y(static_cast<Eigen::Index>(d.tau.size()));
    for (std::size_t q = 0; q < d.tau.size(); ++q) y(static_cast<Eigen::Index>(q)) = d.value[q];
    return y;
}

GaussianMixtureModel unpack(const Eigen::VectorXd& p, std::size_t N, std::size_t ref) {
    GaussianMixtureModel m;
    Eigen::Index q = static_cast<Eigen::Index>(2 * N);
    for (std::size_t j = 0; j < N; ++j) {
        m.nodes.push_back(p(static_cast<Eigen::Index>(j)));
        const double im = j == ref ? 0.0 : p(q++);
        m.coeffs.emplace_back(p(static_cast<Eigen::Index>(N + j)), im);
    }
    return m;
}

// Trust-region refinement of (nodes, Re c, Im c) against the raw slice samples.
GaussianMixtureModel refine(GaussianMixtureModel m, double s, double c, const SliceData& d, int max_iter, int& iters) {
    const std::size_t N = m.nodes.size();
    normalise_phase(m.coeffs);
    std::size_t ref = 0;
    for (std::size_t j = 1; j < N; ++j) if (std::abs(m.coeffs[j]) > std::abs(m.coeffs[ref])) ref = j;
    Eigen::VectorXd p(static_cast<Eigen::Index>(3 * N - 1));
    Eigen::Index q = static_cast<Eigen::Index>(2 * N);
    for (std::size_t j = 0; j < N; ++j) {
        p(static_cast<Eigen::Index>(j)) = m.nodes[j];
        p(static_cast<Eigen::Index>(N + j)) = m.coeffs[j].real();
        if (j != ref) p(q++) = m.coeffs[j].imag();
    }
    const Eigen::VectorXcd y = data_vector(d);
    const Problem f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd* J) {
        const GaussianMixtureModel g = unpack(x, N, ref);
        const Basis b = slice_basis(g.nodes, s, c, d, J != nullptr);
        Eigen::VectorXcd X(static_cast<Eigen::Index>(N * N));
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k) X(static_cast<Eigen::Index>(j * N + k)) = g.coeffs[j] * std::conj(g.coeffs[k]);
        r.resize(2 * y.size());
        stack(b.B * X - y, r);
        if (!J) return;
        J->resize(r.size(), x.size());
        Eigen::Index col = 2 * static_cast<Eigen::Index>(N);
        for (std::size_t m = 0; m < N; ++m) {
            stack(node_derivative(b, X, N, m), J->col(static_cast<Eigen::Index>(m)));
            // d/d c_m and d/d conj(c_m) parts of sum_jk c_j conj(c_k) B_jk
            Eigen::VectorXcd u = Eigen::VectorXcd::Zero(y.size()), w = Eigen::VectorXcd::Zero(y.size());
            for (std::size_t k = 0; k < N; ++k) {
                u += b.B.col(static_cast<Eigen::Index>(m * N + k)) * std::conj(g.coeffs[k]);
                w += b.B.col(static_cast<Eigen::Index>(k * N + m)) * g.coeffs[k];
            }
            stack(u + w, J->col(static_cast<Eigen::Index>(N + m)));
            if (m != ref) stack(cplx(0.0, 1.0) * (u - w), J->col(col++));
        }
    };
    p = dogleg(f, p, max_iter, 1e-15 * d.norm, iters);
    return unpack(p, N, ref);
}

struct Projection {
    Eigen::VectorXcd X;  // c_j conj(c_k), row-major
    double cost = 0.0;
};

Projection project(const RVec& nodes, double s, double c, const SliceData& d) {
    const Basis b = slice_basis(nodes, s, c, d, false);
    const Eigen::VectorXcd y = data_vector(d);
    Projection p;
    p.X = b.B.colPivHouseholderQr().solve(y);
    p.cost = (b.B * p.X - y).norm() / std::max(d.norm, 1e-300);
    return p;
}

// Variable projection: trust region over the nodes alone, the bilinear
// amplitudes being eliminated by linear least squares at every step
// (Kaufman's Jacobian).
RVec refine_nodes(RVec nodes, double s, double c, const SliceData& d, int max_iter) {
    const std::size_t N = nodes.size();
    const Eigen::VectorXcd y = data_vector(d);
    const Problem f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd* J) {
        const Basis b = slice_basis(RVec(x.data(), x.data() + x.size()), s, c, d, J != nullptr);
        const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(b.B);
        const Eigen::VectorXcd X = qr.solve(y);
        r.resize(2 * y.size());
        stack(b.B * X - y, r);
        if (!J) return;
        const Eigen::MatrixXcd Qt = qr.householderQ() * Eigen::MatrixXcd::Identity(b.B.rows(), b.B.cols());
        J->resize(r.size(), x.size());
        for (std::size_t m = 0; m < N; ++m) {
            const Eigen::VectorXcd v = node_derivative(b, X, N, m);
            stack(v - Qt * (Qt.adjoint() * v), J->col(static_cast<Eigen::Index>(m)));
        }
    };
    Eigen::VectorXd p = Eigen::Map<Eigen::VectorXd>(nodes.data(), static_cast<Eigen::Index>(N));
    int iters = 0;
    p = dogleg(f, p, max_iter, 1e-15 * d.norm, iters);
    return RVec(p.data(), p.data() + p.size());
}

}  // namespace

GaussianRecoveryResult recover_gaussian_mixture(const MagnitudeMeasurement& m, int N_max,
                                                const GaussianRecoveryOptions& opt) {
    m.validate();
    if (N_max < 1 || N_max > 8) throw Error(ErrorKind::InvalidInput, "N_max must be in 1..8");
    const double alpha = reduce_angle(m.alpha);
    if (is_quarter_turn(alpha, kAngleAdmissibilityTol)) {
        throw Error(ErrorKind::AngleConstraint, "Gaussian recovery needs alpha outside (pi/2)Z");
    }
    const double s = std::sin(alpha), c = std::cos(alpha);
    const double tau_limit = 0.5 / m.grid.dt;

    GaussianRecoveryResult res;
    auto& diag = res.diagnostics;
    // e^{pi t^2/2} <= cap on |t| <= window
    diag.window = std::min(std::sqrt(2.0 * std::log(opt.overflow_cap) / kPi), tau_limit);
    // Imaginary parts of the exponents are bounded by 2 pi |cos alpha| max|t_j|.
    const double node_bound = std::max(std::abs(m.grid.t0), std::abs(m.grid.back()));
    const double alias_step = 1.0 / (2.0 * std::abs(c) * node_bound + 1e-300);
    double step = opt.sample_step > 0.0 ? opt.sample_step : 2.0 * diag.window / 95.0;
    step = std::min(step, 0.5 * alias_step);
    const auto count = static_cast<std::size_t>(std::floor(2.0 * diag.window / step)) + 1;
    const double t0 = -0.5 * step * static_cast<double>(count - 1);

    const CVec slice = slice_values(m, t0, step, count);
    CVec G(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double t = t0 + j * step;
        G[j] = std::sqrt(2.0) * std::exp(kPi * t * t / 2.0) * slice[j];
    }

    // Refinement uses the slice itself, where no exponential weight amplifies errors.
    // The node search first runs on a shorter window weighted by e^{tau^2}: the growth
    // that separates the exponents then counts, which removes spurious minima near
    // the true nodes. The weight stays below 1e6 so slice roundoff is not amplified.
    const SliceData data = make_slice_data(m, std::min(6.0, 0.9 * tau_limit), 401, 0.0);
    const double wide = std::min(std::sqrt(std::log(1e6)), 0.9 * tau_limit);
    const SliceData weighted = make_slice_data(m, wide, 249, 1.0);
    if (!(data.norm > 0.0)) throw Error(ErrorKind::ModelMismatch, "slice is identically zero");

    std::string failures;
    RVec previous;
    for (int n = 1; n <= N_max; ++n) {
        const std::size_t N = static_cast<std::size_t>(n);
        try {
            MatrixPencilOptions po;
            po.max_order = N * N;
            po.gap_ratio = opt.gap_ratio;
            po.fixed_order = N * N;
            ExponentialSum es = matrix_pencil(G, t0, step, po);

            // Each exponent z_jk encodes the ordered pair (t_j, t_k); the pooled pair
            // coordinates fall into N clusters, one per node.
            // Spurious pencil roots carry negligible energy on the window and are dropped.
            std::vector<std::pair<double, double>> pool;  // (coordinate, weight)
            RVec weight(es.exponents.size());
            double wmax = 0.0;
            for (std::size_t k = 0; k < es.exponents.size(); ++k) {
                const cplx z = es.exponents[k];
                weight[k] = std::abs(es.amplitudes[k]) * std::exp(std::abs(z.real()) * diag.window);
                if (std::isfinite(weight[k])) wmax = std::max(wmax, weight[k]);
            }
            for (std::size_t k = 0; k < es.exponents.size(); ++k) {
                if (!std::isfinite(weight[k]) || weight[k] < 1e-8 * wmax) continue;
                const cplx z = es.exponents[k];
                const double sum = -z.imag() / (kPi * c), diff = -z.real() / (kPi * s);
                for (double t : {0.5 * (sum + diff), 0.5 * (sum - diff)}) {
                    if (std::abs(t) <= node_bound) pool.emplace_back(t, weight[k]);
                }
            }
            if (pool.size() < N) throw Error(ErrorKind::OrderSelection, "too few usable pencil exponents");
            std::sort(pool.begin(), pool.end());
            std::vector<std::size_t> cuts(pool.size() - 1);
            std::iota(cuts.begin(), cuts.end(), 0);
            std::sort(cuts.begin(), cuts.end(), [&](std::size_t x, std::size_t y) {
                return pool[x + 1].first - pool[x].first > pool[y + 1].first - pool[y].first;
            });
            cuts.resize(N - 1);
            std::sort(cuts.begin(), cuts.end());
            RVec nodes;
            std::size_t from = 0;
            for (std::size_t q = 0; q <= cuts.size(); ++q) {
                const std::size_t to = q < cuts.size() ? cuts[q] + 1 : pool.size();
                double num = 0.0, den = 0.0;
                for (std::size_t k = from; k < to; ++k) {
                    num += pool[k].first * pool[k].second;
                    den += pool[k].second;
                }
                nodes.push_back(den > 0.0 ? num / den : pool[from].first);
                from = to;
            }

            // Full fit from a node guess: VarPro on the nodes, rank-one split of the
            // bilinear amplitudes, then every parameter together.
            RankOneFactor f;
            int iters = 0;
            RVec vp_nodes, vp_best;
            auto finish = [&](RVec guess, GaussianMixtureModel& out, RankOneFactor& fo, int& it) {
                guess = refine_nodes(guess, s, c, weighted, opt.max_iterations);
                std::sort(guess.begin(), guess.end());
                vp_nodes = guess;
                const Projection proj = project(guess, s, c, weighted);
                CVec R(N * N);
                for (std::size_t q = 0; q < N * N; ++q) R[q] = proj.X(static_cast<Eigen::Index>(q));
                fo = rank_one_factor(R, N);
                int it_w = 0;
                out = refine(GaussianMixtureModel{guess, fo.vector}, s, c, weighted, opt.max_iterations, it_w);
                out = refine(out, s, c, data, opt.max_iterations, it);
                it += it_w;
                const double rr = slice_residual(out, alpha, data);
                return rr;
            };
            GaussianMixtureModel fit;
            double best = finish(nodes, fit, f, iters);
            vp_best = vp_nodes;
            if (previous.size() + 1 == N && !(best <= opt.fit_tolerance)) {
                // Continuation from the (N-1)-node fit plus one scanned node.
                const double lo = std::max(-node_bound, pool.front().first - 0.5);
                const double hi = std::min(node_bound, pool.back().first + 0.5);
                RVec cand = previous;
                cand.push_back(lo);
                std::vector<std::pair<double, double>> scan;  // (cost, node)
                for (double t = lo; t <= hi; t += 0.02) {
                    cand.back() = t;
                    scan.emplace_back(project(cand, s, c, weighted).cost, t);
                }
                // local minima of the scan, cheapest first
                std::vector<std::pair<double, double>> minima;
                for (std::size_t k = 0; k < scan.size(); ++k) {
                    const bool left = k == 0 || scan[k].first <= scan[k - 1].first;
                    const bool right = k + 1 == scan.size() || scan[k].first <= scan[k + 1].first;
                    if (left && right) minima.push_back(scan[k]);
                }
                std::sort(minima.begin(), minima.end());
                if (minima.size() > 3) minima.resize(3);
                for (const auto& mn : minima) {
                    cand.back() = mn.second;
                    GaussianMixtureModel g;
                    RankOneFactor fg;
                    int ig = 0;
                    const double rg = finish(cand, g, fg, ig);
                    if (rg < best) {
                        best = rg;
                        fit = g;
                        f = fg;
                        iters = ig;
                        vp_best = vp_nodes;
                    }
                    if (best <= opt.fit_tolerance) break;
                }
            }
            if (!(best <= opt.fit_tolerance) && opt.restarts > 0) {
                // Random guesses over the span of the pencil pair coordinates. Only those whose
                // node-only fit already explains the slice go on to the full refinement.
                std::mt19937_64 rng(opt.restart_seed + 7919u * N);
                std::vector<RVec> tried;
                std::uniform_real_distribution<double> span(std::max(-node_bound, pool.front().first - 0.5),
                                                            std::min(node_bound, pool.back().first + 0.5));
                for (int k = 0; k < opt.restarts && !(best <= opt.fit_tolerance); ++k) {
                    RVec guess(N);
                    for (auto& t : guess) t = span(rng);
                    guess = refine_nodes(guess, s, c, weighted, std::min(opt.max_iterations, 100));
                    if (!(project(guess, s, c, weighted).cost <= 100.0 * opt.fit_tolerance)) continue;
                    std::sort(guess.begin(), guess.end());
                    bool seen = false;
                    for (const auto& t : tried) {
                        double dist = 0.0;
                        for (std::size_t q = 0; q < N; ++q) dist = std::max(dist, std::abs(t[q] - guess[q]));
                        seen = seen || dist < 1e-3;
                    }
                    if (seen) continue;
                    tried.push_back(guess);
                    GaussianMixtureModel g;
                    RankOneFactor fg;
                    int ig = 0;
                    const double rg = finish(guess, g, fg, ig);
                    if (rg < best) {
                        best = rg;
                        fit = g;
                        f = fg;
                        iters = ig;
                        vp_best = vp_nodes;
                    }
                }
            }
            previous = vp_best;
            const double resid = slice_residual(fit, alpha, data);
            diag.order_residuals.push_back(resid);
            if (!(resid <= opt.fit_tolerance)) continue;

            // nodes ascending, coefficients following them
            std::vector<std::size_t> ord(N);
            std::iota(ord.begin(), ord.end(), 0);
            std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return fit.nodes[x] < fit.nodes[y]; });
            for (std::size_t k = 0; k < N; ++k) {
                res.model.nodes.push_back(fit.nodes[ord[k]]);
                res.model.coeffs.push_back(fit.coeffs[ord[k]]);
            }
            normalise_phase(res.model.coeffs);
            double zmax = 0.0;
            for (const auto& e : es.exponents) zmax = std::max(zmax, std::abs(e));
            diag.real_threshold = 1e-6 * std::max(zmax, 1.0);
            diag.real_exponents = 0;
            for (const auto& e : es.exponents) if (std::abs(e.real()) <= diag.real_threshold) ++diag.real_exponents;
            diag.pencil = std::move(es);
            diag.eigen_ratio = f.lambda2 / std::max(std::abs(f.lambda1), 1e-300);
            diag.residual = resid;
            diag.iterations = iters;
            res.model.validate();
            return res;
        } catch (const Error& e) {
            diag.order_residuals.push_back(std::nan(""));
            failures += " N=" + std::to_string(n) + ": " + e.what() + ";";
        }
    }
    std::string list;
    for (double r : diag.order_residuals) list += " " + std::to_string(r);
    throw Error(ErrorKind::OrderSelection, "no mixture of at most " + std::to_string(N_max) +
                                               " Gaussians fits the slice; residuals:" + list + failures);
}

}  // namespace frpr
