#include "frpr/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <thread>

#include "frpr/ambiguity.hpp"
#include "frpr/error.hpp"
#include "frpr/flips.hpp"
#include "frpr/frft.hpp"
#include "frpr/gaussian_recovery.hpp"
#include "frpr/hermite.hpp"
#include "frpr/hermite_recovery.hpp"
#include "frpr/metrics.hpp"
#include "frpr/pulse_recovery.hpp"
#include "frpr/sampling.hpp"

namespace frpr {

namespace {

// FNV-1a over the bit patterns of everything a check computes
struct Digest {
    std::uint64_t h = 1469598103934665603ull;
    void bytes(const void* p, std::size_t n) {
        const auto* c = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= c[i];
            h *= 1099511628211ull;
        }
    }
    void add(double v) { bytes(&v, sizeof v); }
    void add(const cplx& z) {
        add(z.real());
        add(z.imag());
    }
    void add(const CVec& v) {
        for (const auto& z : v) add(z);
    }
    void add(const RVec& v) {
        for (double x : v) add(x);
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string sci(double v) { return fmt("%.2e", v); }

const Grid kWide = Grid::symmetric(8.0, 1024);

CVec complex_normal(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> nd;
    CVec v(n);
    for (auto& c : v) c = {nd(rng), nd(rng)};
    return v;
}

HermiteModel random_hermite(std::mt19937_64& rng, int degree) {
    return HermiteModel{complex_normal(rng, static_cast<std::size_t>(degree) + 1)};
}

double sup_dev(const RVec& a, const RVec& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
    return d;
}

double peak(const RVec& a) { return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end()); }

// each check fills pass/detail and feeds the digest
using Check = std::function<void(std::uint64_t seed, CriterionResult&, Digest&)>;

void operator_laws(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ua(0.2, 1.4);
    std::uniform_int_distribution<int> ud(0, 10);
    double unit = 0.0, semi = 0.0, eig = 0.0;
    bool identity = true;
    for (int trial = 0; trial < 20; ++trial) {
        const Signal u = evaluate_model(Model{random_hermite(rng, ud(rng))}, kWide);
        const double a = ua(rng), b = ua(rng);
        const Signal fa = frft_chirp(u, a);
        unit = std::max(unit, std::abs(fa.norm() / u.norm() - 1.0));
        const Signal fab = frft_chirp(fa, b);
        semi = std::max(semi, relative_l2(fab, frft_chirp(u, a + b)));
        const Signal f0 = frft_any(u, 0.0);
        identity = identity && f0.samples == u.samples;
        dg.add(fa.samples);
        dg.add(fab.samples);
        if (trial == 0) {
            for (int k = 0; k <= 10; ++k) {
                const RVec hr = hermite_function(k, kWide);
                const Signal h(kWide, CVec(hr.begin(), hr.end()));
                for (double al : {a, b, kPi / 2.0, -0.6}) {
                    const Signal f = frft_any(h, al);
                    eig = std::max(eig, relative_l2(f, scaled(h, std::polar(1.0, -k * al))));
                    dg.add(f.samples);
                }
            }
        }
    }
    r.pass = unit <= 1e-5 && semi <= 1e-5 && identity && eig <= 1e-6;
    r.detail = "unitarity " + sci(unit) + ", semigroup " + sci(semi) + ", F_0 = id " +
               (identity ? "exact" : "NOT exact") + ", eigenrelation (k <= 10) " + sci(eig);
}

void oracle_equivalence(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ud(0, 8);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Signal u = evaluate_model(Model{random_hermite(rng, ud(rng))}, kWide);
        for (double a : {0.3, 0.7, 1.2, kPi / 2.0}) {
            const Signal f = frft_chirp(u, a);
            worst = std::max(worst, relative_l2(f, frft_quadrature_oracle(u, a, kWide)));
            dg.add(f.samples);
        }
    }
    r.pass = worst <= 1e-7;
    r.detail = "chirp route vs quadrature, worst relative L2 " + sci(worst);
}

void key_identity(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ud(1, 8);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Signal u = evaluate_model(Model{random_hermite(rng, ud(rng))}, kWide);
        for (double a : {0.3, 0.9, 1.6, 2.4}) {
            const LineSlice s = slice_from_magnitude(measure_magnitude(u, a));
            double dev = 0.0, top = 0.0;
            for (std::size_t j = 0; j < s.t_axis.n; j += 4) {
                const double t = s.t_axis.at(j);
                if (std::abs(t) > 4.0) continue;
                const double x = -t * std::sin(a), y = t * std::cos(a);
                const cplx ref = ambiguity(u, u, Grid{x, 1.0, 2}, Grid{y, 1.0, 2}).at(0, 0);
                dev = std::max(dev, std::abs(s.values[j] - ref));
                top = std::max(top, std::abs(ref));
                dg.add(ref);
            }
            worst = std::max(worst, dev / top);
            dg.add(s.values);
        }
    }
    r.pass = worst <= 1e-4;
    r.detail = "slice vs direct ambiguity, worst relative sup " + sci(worst);
}

void closed_forms(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    const Signal g = evaluate_model(Model{GaussianMixtureModel{{0.0}, {1.0}}}, kWide);
    const Grid ax = Grid::symmetric(3.0, 48);
    const auto A = ambiguity(g, g, ax, ax);
    double eg = 0.0;
    for (std::size_t ix = 0; ix < ax.n; ++ix)
        for (std::size_t iy = 0; iy < ax.n; ++iy)
            eg = std::max(eg, std::abs(A.at(ix, iy) - ambiguity_gaussian(ax.at(ix), ax.at(iy))));
    dg.add(A.values);

    const double b = 0.4;
    const auto P = ambiguity(PulseTrainModel{1.0, b, {{0, 1.0}}}, Grid{-b, b / 40.0, 81}, Grid{-12.0, 0.13, 185});
    double ei = 0.0;
    for (std::size_t ix = 0; ix < P.x_axis.n; ++ix)
        for (std::size_t iy = 0; iy < P.y_axis.n; ++iy)
            ei = std::max(ei, std::abs(P.at(ix, iy) - ambiguity_indicator(b, P.x_axis.at(ix), P.y_axis.at(iy))));
    dg.add(P.values);

    std::mt19937_64 rng(seed);
    double e0 = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const Signal u = evaluate_model(Model{random_hermite(rng, 2 * trial)}, kWide);
        const cplx a0 = ambiguity(u, u, Grid{0.0, 1.0, 2}, Grid{0.0, 1.0, 2}).at(0, 0);
        e0 = std::max(e0, std::abs(a0 - u.norm2()) / u.norm2());
        dg.add(a0);
    }
    r.pass = eg <= 1e-7 && ei <= 1e-6 && e0 <= 1e-8;
    r.detail = "Gaussian " + sci(eg) + ", indicator (|x| <= b) " + sci(ei) + ", A(0,0) vs energy " + sci(e0);
}

void hermite_round_trip(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ud(0, 8);
    double worst = 0.0;
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int N = ud(rng);
        const HermiteModel m = random_hermite(rng, N);
        try {
            const auto res = recover_hermite(measure_model_magnitude(m, 0.0, kWide), measure_model_magnitude(m, 1.0, kWide), N);
            worst = std::max(worst, aligned_coefficient_error(res.model.coeffs, m.coeffs));
            dg.add(res.model.coeffs);
        } catch (const Error&) {
            ++failures;
        }
    }
    // e^{2 i gamma} = -1 with gamma = pi/2: c and conj(c) in front of h_0 are indistinguishable
    const cplx c{1.0 / 3.0, 2.0 / 3.0};
    const HermiteModel u{{c, 0.0, 1.0}}, v{{std::conj(c), 0.0, 1.0}};
    double agree = 0.0;
    for (double a : {0.0, kPi / 2.0}) {
        agree = std::max(agree, sup_dev(measure_model_magnitude(u, a, kWide).magnitudes,
                                        measure_model_magnitude(v, a, kWide).magnitudes));
    }
    const double dist = phase_invariant_distance(evaluate_model(u, kWide), evaluate_model(v, kWide));
    dg.add(agree);
    dg.add(dist);
    r.pass = failures == 0 && worst <= 1e-5 && agree <= 1e-8 && dist > 0.1;
    r.detail = "50 instances, worst coefficient error " + sci(worst) + ", failures " + std::to_string(failures) +
               "; counterexample agreement " + sci(agree) + ", distance " + fmt("%.3f", dist);
}

void pulse_round_trip(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    const Grid mg{-1024.0, 1.0 / 32.0, 1u << 16};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ud(1, 8);
    double worst = 0.0;
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int count = ud(rng);
        const CVec c = complex_normal(rng, static_cast<std::size_t>(count));
        PulseTrainModel m{1.0, 0.3, {}};
        for (int k = 0; k < count; ++k) m.coeffs[k] = c[static_cast<std::size_t>(k)];
        try {
            const auto res = recover_pulse_train(measure_model_magnitude(m, 0.9, mg), 1.0, 0.3, 0, count - 1);
            CVec est;
            for (int k = 0; k < count; ++k) est.push_back(res.model.coeffs.count(k) ? res.model.coeffs.at(k) : cplx{});
            worst = std::max(worst, aligned_coefficient_error(est, c));
            dg.add(est);
        } catch (const Error&) {
            ++failures;
        }
    }
    // quarter turn: refusal, and the conjugate reversal a_k -> conj(a_{K-k}) as an in-class twin
    PulseTrainModel u{1.0, 0.3, {{0, {1.0, 0.5}}, {1, {-0.7, 0.2}}, {2, {0.3, -1.1}}}}, v = u;
    for (int k = 0; k <= 2; ++k) v.coeffs[k] = std::conj(u.coeffs.at(2 - k));
    const auto mu = measure_model_magnitude(u, kPi / 2.0, mg), mv = measure_model_magnitude(v, kPi / 2.0, mg);
    bool refused = false;
    try {
        recover_pulse_train(mu, 1.0, 0.3, 0, 2);
    } catch (const Error& e) {
        refused = e.kind() == ErrorKind::AngleConstraint;
    }
    const double agree = sup_dev(mu.magnitudes, mv.magnitudes) / peak(mu.magnitudes);
    const Grid tg = Grid::symmetric(4.0, 2048);
    const double dist = phase_invariant_distance(evaluate_model(u, tg), evaluate_model(v, tg));
    dg.add(agree);
    dg.add(dist);
    r.pass = failures == 0 && worst <= 1e-5 && refused && agree <= 1e-7 && dist > 0.1;
    r.detail = "50 instances, worst coefficient error " + sci(worst) + ", failures " + std::to_string(failures) +
               "; quarter turn " + (refused ? "refused" : "NOT refused") + ", twin agreement " + sci(agree) +
               ", twin distance " + fmt("%.3f", dist);
}

void gaussian_round_trip(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> un(1, 4);
    std::uniform_real_distribution<double> ut(-1.0, 1.0);
    double node = 0.0, coef = 0.0;
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int N = un(rng);
        GaussianMixtureModel m;
        while (static_cast<int>(m.nodes.size()) < N) {
            const double t = ut(rng);
            bool ok = true;
            for (double q : m.nodes) ok = ok && std::abs(q - t) > 0.2;
            if (ok) m.nodes.push_back(t);
        }
        std::sort(m.nodes.begin(), m.nodes.end());
        m.coeffs = complex_normal(rng, static_cast<std::size_t>(N));
        try {
            const auto res = recover_gaussian_mixture(measure_model_magnitude(m, 1.0, kWide), 4);
            if (res.model.nodes.size() != m.nodes.size()) {
                ++failures;
                continue;
            }
            double e = 0.0;
            for (std::size_t j = 0; j < m.nodes.size(); ++j) e = std::max(e, std::abs(res.model.nodes[j] - m.nodes[j]));
            node = std::max(node, e);
            coef = std::max(coef, aligned_coefficient_error(res.model.coeffs, m.coeffs));
            dg.add(res.model.nodes);
            dg.add(res.model.coeffs);
        } catch (const Error&) {
            ++failures;
        }
    }
    r.pass = failures == 0 && node <= 1e-6 && coef <= 1e-4;
    r.detail = "50 instances (1..4 nodes), worst node error " + sci(node) + ", coefficient error " + sci(coef) +
               ", failures " + std::to_string(failures);
}

void zero_flipping(std::uint64_t seed, CriterionResult& r, Digest& dg) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ul(2, 8);
    const double alpha = 0.8, step = 0.5;
    const Grid fine = Grid::symmetric(4.0, 4001);
    double dev = 0.0, closest = 1e300;
    std::size_t solutions = 0;
    bool complete = true;
    for (int trial = 0; trial < 20; ++trial) {
        const CVec u = complex_normal(rng, static_cast<std::size_t>(ul(rng)));
        const auto set = enumerate_flips(u, alpha, {}, step);
        complete = complete && set.solutions.size() == (std::size_t{1} << set.flippable.size());
        solutions += set.solutions.size();
        const RVec ref = delta_train_frft_magnitude(u, alpha, step, fine);
        const Grid sg{0.0, step, u.size()};
        for (std::size_t i = 0; i < set.solutions.size(); ++i) {
            dev = std::max(dev, sup_dev(delta_train_frft_magnitude(set.solutions[i], alpha, step, fine), ref) / peak(ref));
            dg.add(set.solutions[i]);
            for (std::size_t j = i + 1; j < set.solutions.size(); ++j) {
                closest = std::min(closest, phase_invariant_distance(Signal(sg, set.solutions[i]), Signal(sg, set.solutions[j])));
            }
        }
    }
    r.pass = complete && dev <= 1e-7 && closest > 1e-3;
    r.detail = std::to_string(solutions) + " solutions, magnitude deviation " + sci(dev) + ", closest pair " + sci(closest);
}

Signal truncated_gaussian() {
    const Grid g = Grid::symmetric(1.0, 256);
    CVec s(g.n);
    for (std::size_t j = 0; j < g.n; ++j) s[j] = gaussian(g.at(j));
    return Signal(g, s);
}

void sampled_recovery(std::uint64_t, CriterionResult& r, Digest& dg) {
    const Signal u = truncated_gaussian();
    const auto sch = build_schedule(ScheduleKind::Basic, 1.0, {}, 64);
    const auto res = recover_signal(measure_schedule(u, sch), sch, u.grid);
    const double dist = phase_invariant_distance(u, res.signal);
    dg.add(res.signal.samples);

    // h_x sigma_x = 1 - (x - a)^2 / a^2
    const double a = sch.a, step = 2.0 * a / 1000.0;
    double above = 0.0, off_identity = 0.0;
    bool equality_only_at_a = true;
    for (int i = 0; i < 1000; ++i) {
        const double x = step * i;
        const double v = sch.row_step(x) * sch.row_band(x);
        above = std::max(above, v - 1.0);
        off_identity = std::max(off_identity, std::abs(v - (1.0 - (x - a) * (x - a) / (a * a))));
        if (std::abs(v - 1.0) <= 1e-12 && std::abs(x - a) > step) equality_only_at_a = false;
        dg.add(v);
    }
    const bool at_a = std::abs(sch.row_step(a) * sch.row_band(a) - 1.0) <= 1e-15;
    r.pass = dist <= 1e-3 && above <= 0.0 && off_identity <= 1e-15 && equality_only_at_a && at_a;
    r.detail = "distance " + sci(dist) + " (rows from x = " + fmt("%.4f", res.min_trusted_x) +
               "); Nyquist max excess " + sci(std::max(above, 0.0)) + ", equality " +
               (equality_only_at_a && at_a ? "only at x = a" : "ELSEWHERE");
}

void oversampled(std::uint64_t, CriterionResult& r, Digest& dg) {
    const Signal u = truncated_gaussian();
    const auto basic = build_schedule(ScheduleKind::Basic, 1.0, {}, 32);
    const auto over = build_schedule(ScheduleKind::Oversampled, 1.0, 1.5, 32);
    const auto m_over = measure_schedule(u, over);
    // both schedules have samples on |y| <= 16 x / b^2
    const double slope = 0.5 * 32 * over.line_slope();
    const double e_basic = windowed_ambiguity_error(u, measure_schedule(u, basic), basic, slope);
    const double e_over = windowed_ambiguity_error(u, m_over, over, slope);
    ReconstructionOptions o;
    o.compare_display = true;
    const auto rec = reconstruct_ambiguity(m_over, over, Grid{0.25, 0.25, 7}, Grid::symmetric(6.0, 48), o);
    dg.add(e_basic);
    dg.add(e_over);
    dg.add(rec.grid.values);
    r.pass = e_over <= 0.5 * e_basic;
    r.detail = "truncation error basic " + sci(e_basic) + ", oversampled " + sci(e_over) + " (ratio " +
               sci(e_over / e_basic) + "); display check: " + rec.display_note + " (" + sci(rec.display_mismatch) + ")";
}

struct Entry {
    int id;
    const char* name;
    Check check;
    double budget;  // seconds, 0 = none
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {1, "frft operator laws", operator_laws, 10.0},
        {2, "chirp route vs quadrature oracle", oracle_equivalence, 30.0},
        {3, "key identity", key_identity, 0.0},
        {4, "closed-form ambiguities", closed_forms, 0.0},
        {5, "hermite recovery", hermite_round_trip, 60.0},
        {6, "pulse-train recovery", pulse_round_trip, 0.0},
        {7, "gaussian mixture recovery", gaussian_round_trip, 0.0},
        {8, "zero flipping", zero_flipping, 0.0},
        {9, "sampled reconstruction", sampled_recovery, 120.0},
        {10, "oversampled schedule", oversampled, 0.0},
    };
    return e;
}

CriterionResult run_one(const Entry& e, std::uint64_t seed) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    Digest dg;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        e.check(seed + 1000003ull * static_cast<std::uint64_t>(e.id), r, dg);
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget > 0.0 && r.seconds >= e.budget) {
        r.pass = false;
        r.detail += "; over the " + fmt("%.0f", e.budget) + " s budget";
    }
    r.digest = dg.h;
    return r;
}

std::vector<CriterionResult> run_all(const std::vector<const Entry*>& todo, std::uint64_t seed, unsigned threads) {
    std::vector<CriterionResult> out(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) out[i] = run_one(*todo[i], seed);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt) {
    auto wanted = [&](int id) { return opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), id) != opt.only.end(); };
    const bool determinism = wanted(11);
    std::vector<const Entry*> todo;
    for (const auto& e : entries()) {
        if (wanted(e.id) || determinism) todo.push_back(&e);
    }
    std::vector<CriterionResult> first = run_all(todo, opt.seed, opt.threads);
    std::vector<CriterionResult> out;
    for (const auto& r : first) {
        if (wanted(r.id)) out.push_back(r);
    }
    if (determinism) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<CriterionResult> again = run_all(todo, opt.seed, opt.threads);
        CriterionResult d;
        d.id = 11;
        d.name = "determinism";
        std::string differing;
        Digest dg;
        for (std::size_t i = 0; i < first.size(); ++i) {
            dg.bytes(&first[i].digest, sizeof first[i].digest);
            if (first[i].digest != again[i].digest || first[i].detail != again[i].detail) {
                differing += " " + std::to_string(first[i].id);
            }
        }
        d.pass = differing.empty();
        d.detail = d.pass ? "criteria 1-10 rerun with the same seed: identical digests"
                          : "differing reruns:" + differing;
        d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        d.digest = dg.h;
        out.push_back(d);
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "criterion %2d %s  %-34s (%6.1f s)  ", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.seconds);
    return head + r.detail;
}

}  // namespace frpr
