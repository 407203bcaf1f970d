// frpr: generate signals, simulate FrFT magnitude measurements and recover signals from them.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frpr/ambiguity.hpp"
#include "frpr/error.hpp"
#include "frpr/flips.hpp"
#include "frpr/gaussian_recovery.hpp"
#include "frpr/hermite_recovery.hpp"
#include "frpr/io.hpp"
#include "frpr/metrics.hpp"
#include "frpr/pulse_recovery.hpp"
#include "frpr/sampling.hpp"
#include "frpr/selftest.hpp"

using namespace frpr;
using io::json;

namespace {

struct Globals {
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    double tol = 1e-6;
    unsigned threads = 1;
};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(ErrorKind::InvalidInput, "not a number: \"" + s + "\"");
    return v;
}

// "1/64" or "0.015625"
double parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_real(s);
    return parse_real(trim(s.substr(0, slash))) / parse_real(trim(s.substr(slash + 1)));
}

// radians, or multiples of pi: "pi/4", "-3pi/2", "2*pi/3"
double parse_angle(std::string s) {
    s = trim(s);
    const auto at = s.find("pi");
    if (at == std::string::npos) return parse_real(s);
    std::string num = trim(s.substr(0, at));
    if (!num.empty() && num.back() == '*') num = trim(num.substr(0, num.size() - 1));
    double p = 1.0;
    if (num == "-") p = -1.0;
    else if (!num.empty() && num != "+") p = parse_real(num);
    std::string rest = trim(s.substr(at + 2));
    double q = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') throw Error(ErrorKind::InvalidInput, "cannot parse angle \"" + s + "\"");
        q = parse_real(trim(rest.substr(1)));
    }
    return p * kPi / q;
}

std::vector<double> parse_angles(const std::string& s) {
    std::vector<double> a;
    for (const auto& t : split(s, ',')) a.push_back(parse_angle(t));
    return a;
}

// "1", "-2.5", "2i", "-i", "1+2i", "0.5-0.25i"
cplx parse_complex(std::string s) {
    s = trim(s);
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty complex value");
    if (s.back() != 'i') return {parse_real(s), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    auto imag_part = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (split_at == std::string::npos) return {0.0, imag_part(body)};
    return {parse_real(body.substr(0, split_at)), imag_part(body.substr(split_at))};
}

CVec parse_complex_list(const std::string& s) {
    CVec v;
    for (const auto& t : split(s, ',')) v.push_back(parse_complex(t));
    return v;
}

// "t0:dt:n", dt may be a ratio
Grid parse_grid(const std::string& s) {
    const auto f = split(s, ':');
    if (f.size() != 3) throw Error(ErrorKind::InvalidInput, "grid must be t0:dt:n");
    const double n = parse_real(f[2]);
    if (n < 2 || n != std::floor(n)) throw Error(ErrorKind::InvalidInput, "grid n must be an integer >= 2");
    Grid g{parse_real(f[0]), parse_ratio(f[1]), static_cast<std::size_t>(n)};
    g.validate();
    return g;
}

// "a=1,b=0.3" style key/value lists; values may contain commas when quoted per key ("nodes=-0.5,0.7")
std::map<std::string, std::string> parse_pairs(const std::vector<std::string>& tokens) {
    std::map<std::string, std::string> kv;
    std::string key;
    for (const auto& tok : tokens) {
        for (const auto& part : split(tok, ',')) {
            const auto eq = part.find('=');
            if (eq != std::string::npos) {
                key = trim(part.substr(0, eq));
                kv[key] = trim(part.substr(eq + 1));
            } else if (!key.empty()) {
                kv[key] += "," + part;  // continuation of a list value
            } else {
                throw Error(ErrorKind::InvalidInput, "expected key=value, got \"" + part + "\"");
            }
        }
    }
    return kv;
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::InvalidInput, "missing " + key + "=...");
    return it->second;
}

std::string out_path(const Globals& g, const std::string& name) {
    return (std::filesystem::path(g.out_dir) / name).string();
}

void write_json(const Globals& g, const std::string& name, const json& j) {
    io::write_file_atomic(out_path(g, name), io::dump(j) + "\n");
    std::printf("wrote %s\n", out_path(g, name).c_str());
}

std::string indexed(const std::string& stem, std::size_t i, const std::string& ext) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%03zu", i);
    return stem + "_" + buf + ext;
}

AngleSchedule parse_schedule(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.empty()) throw Error(ErrorKind::InvalidInput, "empty schedule");
    const std::string kind = parts[0];
    const auto kv = parse_pairs(std::vector<std::string>(parts.begin() + 1, parts.end()));
    const double a = kv.count("a") ? parse_real(kv.at("a")) : 1.0;
    const int k_max = static_cast<int>(parse_real(need(kv, "kmax")));
    if (kind == "basic") return build_schedule(ScheduleKind::Basic, a, std::nullopt, k_max);
    if (kind == "oversampled") return build_schedule(ScheduleKind::Oversampled, a, parse_real(need(kv, "b")), k_max);
    throw Error(ErrorKind::InvalidInput, "schedule kind must be basic or oversampled");
}

json schedule_descriptor(const AngleSchedule& s, const Grid& g, double noise, std::uint64_t seed) {
    json sched{{"kind", s.kind == ScheduleKind::Basic ? "basic" : "oversampled"}, {"k_max", s.k_max}};
    if (s.kind == ScheduleKind::Oversampled) sched["b"] = s.b;
    return {{"a", s.a}, {"schedule", sched}, {"grid", io::to_json(g)}, {"noise_sigma", noise}, {"seed", seed}};
}

AngleSchedule schedule_from_descriptor(const json& d) {
    const auto& s = d.at("schedule");
    const std::string kind = s.at("kind").get<std::string>();
    const double a = d.at("a").get<double>();
    const int k = s.at("k_max").get<int>();
    if (kind == "basic") return build_schedule(ScheduleKind::Basic, a, std::nullopt, k);
    if (kind == "oversampled") return build_schedule(ScheduleKind::Oversampled, a, s.at("b").get<double>(), k);
    throw Error(ErrorKind::InvalidInput, "schedule kind must be basic or oversampled");
}

std::vector<MagnitudeMeasurement> load_measurements(const std::vector<std::string>& files) {
    std::vector<MagnitudeMeasurement> m;
    for (const auto& f : files) m.push_back(io::measurement_from_json(io::read_file(f)));
    return m;
}

// ---- gen

struct GenArgs {
    std::string hermite, pulse, coeffs, model_file, grid, out = "signal.json";
    std::vector<std::string> gauss;
    int k0 = 0;
};

int cmd_gen(const Globals& g, const GenArgs& a) {
    const int given = !a.hermite.empty() + !a.pulse.empty() + !a.gauss.empty() + !a.model_file.empty();
    if (given != 1) throw Error(ErrorKind::InvalidInput, "gen needs exactly one of --hermite, --pulse, --gauss, --model");
    Model model;
    if (!a.model_file.empty()) {
        model = io::model_from_json(io::read_file(a.model_file));
    } else if (!a.hermite.empty()) {
        HermiteModel m{parse_complex_list(a.hermite)};
        m.validate();
        model = m;
    } else if (!a.pulse.empty()) {
        const auto kv = parse_pairs({a.pulse});
        PulseTrainModel m;
        m.a = parse_real(need(kv, "a"));
        m.b = parse_real(need(kv, "b"));
        if (a.coeffs.empty()) throw Error(ErrorKind::InvalidInput, "--pulse needs --coeffs");
        const CVec c = parse_complex_list(a.coeffs);
        for (std::size_t k = 0; k < c.size(); ++k) m.coeffs[a.k0 + static_cast<int>(k)] = c[k];
        m.validate();
        model = m;
    } else {
        const auto kv = parse_pairs(a.gauss);
        RVec nodes;
        for (const auto& t : split(need(kv, "nodes"), ',')) nodes.push_back(parse_real(t));
        GaussianMixtureModel m{nodes, parse_complex_list(need(kv, "coeffs"))};
        m.validate();
        model = m;
    }
    const Grid grid = a.grid.empty() ? Grid::symmetric(8.0, 1024) : parse_grid(a.grid);
    write_json(g, a.out, io::to_json(evaluate_model(model, grid)));
    const std::string stem = std::filesystem::path(a.out).stem().string();
    write_json(g, stem + ".model.json", io::to_json(model));
    return 0;
}

// ---- measure

struct MeasureArgs {
    std::string signal, model, grid, angles, schedule, prefix = "measurement";
    double noise = 0.0;
};

int cmd_measure(const Globals& g, const MeasureArgs& a) {
    if (a.signal.empty() == a.model.empty()) throw Error(ErrorKind::InvalidInput, "measure needs one of --signal, --model");
    if (a.angles.empty() == a.schedule.empty()) throw Error(ErrorKind::InvalidInput, "measure needs one of --angles, --schedule");
    std::optional<Model> model;
    Signal u;
    if (!a.model.empty()) {
        model = io::model_from_json(io::read_file(a.model));
        u = evaluate_model(*model, a.grid.empty() ? Grid::symmetric(8.0, 1024) : parse_grid(a.grid));
    } else {
        u = io::signal_from_json(io::read_file(a.signal));
    }
    if (!a.schedule.empty()) {
        const AngleSchedule s = parse_schedule(a.schedule);
        const auto ms = measure_schedule(u, s, a.noise, g.seed);
        for (std::size_t i = 0; i < ms.size(); ++i) write_json(g, indexed(a.prefix, i, ".json"), io::to_json(ms[i]));
        write_json(g, a.prefix + "_schedule.json", schedule_descriptor(s, u.grid, a.noise, g.seed));
        return 0;
    }
    const auto angles = parse_angles(a.angles);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double r = reduce_angle(angles[i]);
        if (std::abs(std::sin(r)) < kAngleFloor && r != 0.0 && std::abs(r) != kPi) {
            std::fprintf(stderr, "warning: angle %.17g is close to 0 mod pi; measured via the composed route\n", angles[i]);
        }
        // angles are seeded one after another so that reruns reproduce every file
        const std::uint64_t seed = g.seed + i;
        const MagnitudeMeasurement m = model ? measure_model_magnitude(*model, angles[i], u.grid, a.noise, seed)
                                             : measure_magnitude(u, angles[i], a.noise, seed);
        write_json(g, indexed(a.prefix, i, ".json"), io::to_json(m));
    }
    return 0;
}

// ---- recover

struct RecoverArgs {
    std::string cls, descriptor, truth, out = "recovered.json";
    std::vector<std::string> files;
    int degree = -1, k_min = 0, k_max = -1, n_max = 4;
    double a = 1.0, b = 0.0;
};

int cmd_recover(const Globals& g, const RecoverArgs& r) {
    json diag;
    std::optional<Signal> truth;
    if (!r.truth.empty()) truth = io::signal_from_json(io::read_file(r.truth));
    if (r.cls == "hermite") {
        if (r.files.size() != 2) throw Error(ErrorKind::InvalidInput, "hermite recovery needs two measurements");
        if (r.degree < 0) throw Error(ErrorKind::InvalidInput, "hermite recovery needs --degree");
        const auto m = load_measurements(r.files);
        const auto res = recover_hermite(m[0], m[1], r.degree);
        const auto& d = res.diagnostics;
        diag = {{"fit_residual_alpha", d.fit_residual_alpha}, {"fit_residual_beta", d.fit_residual_beta},
                {"t_fit_alpha", d.t_fit_alpha}, {"t_fit_beta", d.t_fit_beta}, {"leading_power", d.leading_power},
                {"min_abs_sin", d.min_abs_sin}, {"degrees_consumed", d.degrees_consumed},
                {"leading_coefficient_small", d.leading_coefficient_small}};
        write_json(g, r.out, io::to_json(Model{res.model}));
        if (truth) diag["distance"] = phase_invariant_distance(*truth, evaluate_model(res.model, truth->grid));
    } else if (r.cls == "pulse" || r.cls == "gauss") {
        if (r.files.size() != 1) throw Error(ErrorKind::InvalidInput, r.cls + " recovery needs one measurement");
        const auto m = load_measurements(r.files);
        Model model;
        if (r.cls == "pulse") {
            if (!(r.b > 0.0) || r.k_max < r.k_min) throw Error(ErrorKind::InvalidInput, "pulse recovery needs --b and --kmax");
            const auto res = recover_pulse_train(m[0], r.a, r.b, r.k_min, r.k_max);
            diag = {{"lag_residuals", res.diagnostics.lag_residuals}, {"lag_condition", res.diagnostics.lag_condition},
                    {"eigen_ratio", res.diagnostics.eigen_ratio}};
            model = res.model;
        } else {
            GaussianRecoveryOptions opt;
            opt.restart_seed = g.seed + 1;
            const auto res = recover_gaussian_mixture(m[0], r.n_max, opt);
            const auto& d = res.diagnostics;
            json orders = json::array();
            for (double v : d.order_residuals) orders.push_back(std::isfinite(v) ? json(v) : json(nullptr));
            diag = {{"residual", d.residual}, {"order_residuals", orders}, {"window", d.window},
                    {"eigen_ratio", d.eigen_ratio}, {"iterations", d.iterations}, {"pencil_order", d.pencil.order}};
            model = res.model;
        }
        write_json(g, r.out, io::to_json(model));
        if (truth) diag["distance"] = phase_invariant_distance(*truth, evaluate_model(model, truth->grid));
    } else if (r.cls == "sampled") {
        if (r.descriptor.empty()) throw Error(ErrorKind::InvalidInput, "sampled recovery needs --descriptor");
        const json d = io::read_file(r.descriptor);
        const AngleSchedule s = schedule_from_descriptor(d);
        const Grid target = io::grid_from_json(d.at("grid"));
        ReconstructionOptions opt;
        opt.threads = g.threads;
        const auto res = recover_signal(load_measurements(r.files), s, target, opt);
        json rows = json::array();
        for (const auto& row : res.ambiguity.rows) {
            rows.push_back({{"x", row.x}, {"truncation", row.truncation}, {"trusted", row.trusted},
                            {"zero_by_support", row.zero_by_support}});
        }
        diag = {{"rows", rows}, {"min_trusted_x", res.min_trusted_x}};
        write_json(g, r.out, io::to_json(res.signal));
        if (truth) diag["distance"] = phase_invariant_distance(*truth, res.signal);
    } else {
        throw Error(ErrorKind::InvalidInput, "--class must be hermite, pulse, gauss or sampled");
    }
    write_json(g, std::filesystem::path(r.out).stem().string() + ".diagnostics.json", diag);
    if (diag.contains("distance")) std::printf("distance %.17g\n", diag["distance"].get<double>());
    return 0;
}

// ---- verify

int cmd_verify(const Globals& g, const std::string& fu, const std::string& fv, const std::string& angles) {
    const Signal u = io::signal_from_json(io::read_file(fu));
    const Signal v = io::signal_from_json(io::read_file(fv));
    if (!same_grid(u.grid, v.grid)) throw Error(ErrorKind::InvalidInput, "signals are on different grids");
    const double d = phase_invariant_distance(u, v);
    std::printf("distance %.17g\n", d);
    json report{{"distance", d}, {"tol", g.tol}};
    json dev = json::array();
    if (!angles.empty()) {
        for (double a : parse_angles(angles)) {
            const auto mu = measure_magnitude(u, a), mv = measure_magnitude(v, a);
            double s = 0.0;
            for (std::size_t j = 0; j < mu.magnitudes.size(); ++j) s = std::max(s, std::abs(mu.magnitudes[j] - mv.magnitudes[j]));
            std::printf("alpha %.17g deviation %.17g\n", a, s);
            dev.push_back({{"alpha", a}, {"deviation", s}});
        }
    }
    report["deviations"] = dev;
    write_json(g, "verify.json", report);
    return d <= g.tol ? 0 : 1;
}

// ---- flips

int cmd_flips(const Globals& g, const std::string& seq, const std::string& signal, const std::string& alpha_s,
              double step, std::optional<std::uint64_t> mask) {
    if (seq.empty() == signal.empty()) throw Error(ErrorKind::InvalidInput, "flips needs one of --sequence, --signal");
    CVec u = seq.empty() ? CVec{} : parse_complex_list(seq);
    if (!signal.empty()) {
        const Signal s = io::signal_from_json(io::read_file(signal));
        u = s.samples;
        step = s.grid.dt;
    }
    const double alpha = parse_angle(alpha_s);
    FlipSolutionSet set;
    try {
        set = enumerate_flips(u, alpha, mask, step);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::EnumerationCap) {
            throw Error(ErrorKind::EnumerationCap, std::string(e.what()) + "; pass --mask to pick one flip pattern");
        }
        throw;
    }
    const Grid grid{0.0, step, u.size()};
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
        json j = io::to_json(Signal(grid, set.solutions[i]));
        j["mask"] = set.masks[i];
        write_json(g, indexed("flip", i, ".json"), j);
    }
    std::string csv = "i,j,distance\n";
    char buf[96];
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
        for (std::size_t j = i + 1; j < set.solutions.size(); ++j) {
            const double d = phase_invariant_distance(Signal(grid, set.solutions[i]), Signal(grid, set.solutions[j]));
            std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g\n", i, j, d);
            csv += buf;
        }
    }
    io::write_file_atomic(out_path(g, "flips_summary.csv"), csv);
    std::printf("%zu roots, %zu off the unit circle, %zu solutions\n", set.roots.size(), set.flippable.size(),
                set.solutions.size());
    return 0;
}

// ---- selftest

int cmd_selftest(const Globals& g, bool seed_given, const std::vector<int>& only) {
    SelftestOptions opt;
    if (seed_given) opt.seed = g.seed;
    opt.threads = g.threads;
    opt.only = only;
    int failed = 0;
    json report = json::array();
    for (const auto& r : run_selftest(opt)) {
        std::printf("%s\n", format_result(r).c_str());
        std::fflush(stdout);
        failed += !r.pass;
        report.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    write_json(g, "selftest.json", report);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FrFT phase retrieval: signal generation, magnitude measurements and recovery"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", g.seed, "Seed for noise and randomised steps");
    app.add_option("--tol", g.tol, "Distance tolerance for verify")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads")->capture_default_str();

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Evaluate a model on a grid and write a signal file");
    gen->add_option("--hermite", ga.hermite, "Hermite coefficients, e.g. \"1,0,0.5i\"");
    gen->add_option("--pulse", ga.pulse, "Pulse train spacing and width, e.g. a=1,b=0.3");
    gen->add_option("--coeffs", ga.coeffs, "Pulse coefficients a_k0, a_k0+1, ...");
    gen->add_option("--k0", ga.k0, "Index of the first pulse coefficient");
    gen->add_option("--gauss", ga.gauss, "Gaussian mixture, e.g. nodes=-0.5,0.7 coeffs=1,2i")->expected(1, 2);
    gen->add_option("--model", ga.model_file, "Model JSON file");
    gen->add_option("--grid", ga.grid, "t0:dt:n (default -8:1/64:1024)");
    gen->add_option("--out", ga.out, "Signal file name")->capture_default_str();

    MeasureArgs ma;
    auto* measure = app.add_subcommand("measure", "Simulate |F_alpha u| measurements");
    measure->add_option("--signal", ma.signal, "Signal JSON file");
    measure->add_option("--model", ma.model, "Model JSON file (pulse trains use the exact transform)");
    measure->add_option("--grid", ma.grid, "Grid for --model, t0:dt:n");
    measure->add_option("--angles", ma.angles, "Angles in radians or as multiples of pi, e.g. \"0,pi/2\"");
    measure->add_option("--schedule", ma.schedule, "basic,a=1,kmax=32 or oversampled,a=1,b=1.5,kmax=32");
    measure->add_option("--noise", ma.noise, "Gaussian noise sigma on the magnitudes");
    measure->add_option("--prefix", ma.prefix, "Output file prefix")->capture_default_str();

    RecoverArgs ra;
    auto* recover = app.add_subcommand("recover", "Recover a model or signal from measurements");
    recover->add_option("--class", ra.cls, "hermite, pulse, gauss or sampled")->required();
    recover->add_option("measurements", ra.files, "Measurement JSON files")->required();
    recover->add_option("--degree", ra.degree, "Hermite degree N");
    recover->add_option("--a", ra.a, "Pulse spacing");
    recover->add_option("--b", ra.b, "Pulse width");
    recover->add_option("--kmin", ra.k_min, "First pulse index");
    recover->add_option("--kmax", ra.k_max, "Last pulse index");
    recover->add_option("--nmax", ra.n_max, "Largest Gaussian count tried")->capture_default_str();
    recover->add_option("--descriptor", ra.descriptor, "Schedule descriptor written by measure --schedule");
    recover->add_option("--truth", ra.truth, "Ground-truth signal; adds the distance to the report");
    recover->add_option("--out", ra.out, "Output file name")->capture_default_str();

    std::string vu, vv, vangles;
    auto* verify = app.add_subcommand("verify", "Compare two signals up to global phase");
    verify->add_option("u", vu, "First signal file")->required();
    verify->add_option("v", vv, "Second signal file")->required();
    verify->add_option("--angles", vangles, "Also report measurement deviations at these angles");

    std::string fseq, fsig, falpha;
    double fstep = 1.0;
    std::uint64_t fmask = 0;
    auto* flips = app.add_subcommand("flips", "Enumerate the zero-flipping solutions of a finite sequence");
    flips->add_option("--sequence", fseq, "Comma-separated complex sequence");
    flips->add_option("--signal", fsig, "Signal file; its samples and step are used");
    flips->add_option("--alpha", falpha, "FrFT angle")->required();
    flips->add_option("--step", fstep, "Sample spacing")->capture_default_str();
    auto* mask_opt = flips->add_option("--mask", fmask, "Flip only these roots (bit i: i-th off-circle root)");

    std::vector<int> only;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--only", only, "Criteria to run (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(g, ga);
        if (*measure) return cmd_measure(g, ma);
        if (*recover) return cmd_recover(g, ra);
        if (*verify) return cmd_verify(g, vu, vv, vangles);
        if (*flips) return cmd_flips(g, fseq, fsig, falpha, fstep, *mask_opt ? std::optional<std::uint64_t>(fmask) : std::nullopt);
        if (*selftest) return cmd_selftest(g, static_cast<bool>(*seed_opt), only);
    } catch (const Error& e) {
        std::fprintf(stderr, "error (%s): %s\n", to_string(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    }
    return 2;
}
