#include "frpr/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frpr/error.hpp"

namespace frpr::io {

namespace {

void put_number(std::string& out, double v) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "cannot serialise a non-finite value");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void emit(std::string& out, const json& j, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                emit(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            // short numeric arrays (complex pairs, grids) stay on one line
            bool flat = j.size() <= 3;
            for (const auto& e : j) flat = flat && e.is_number();
            out += '[';
            for (std::size_t q = 0; q < j.size(); ++q) {
                if (q) out += flat ? ", " : ",";
                if (!flat) newline(depth + 1);
                emit(out, j[q], indent, depth + 1);
            }
            if (!flat) newline(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float:
            put_number(out, j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

json pair(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::InvalidInput, "complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

CVec complex_list(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of complex values");
    CVec v;
    for (const auto& e : j) v.push_back(complex_from(e));
    return v;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string dump(const json& j, int indent) {
    std::string out;
    emit(out, j, indent, 0);
    return out;
}

json to_json(const Grid& g) { return {{"t0", g.t0}, {"dt", g.dt}, {"n", g.n}}; }

json to_json(const Signal& s) {
    json samples = json::array();
    for (const auto& c : s.samples) samples.push_back(pair(c));
    return {{"grid", to_json(s.grid)}, {"samples", samples}};
}

json to_json(const Model& m) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            json j;
            json c = json::array();
            if constexpr (std::is_same_v<T, HermiteModel>) {
                j["type"] = "hermite";
                for (const auto& z : v.coeffs) c.push_back(pair(z));
            } else if constexpr (std::is_same_v<T, PulseTrainModel>) {
                j["type"] = "pulse";
                j["a"] = v.a;
                j["b"] = v.b;
                for (const auto& [k, z] : v.coeffs) c.push_back(json::array({k, z.real(), z.imag()}));
            } else {
                j["type"] = "gaussian";
                j["nodes"] = v.nodes;
                for (const auto& z : v.coeffs) c.push_back(pair(z));
            }
            j["coeffs"] = c;
            return j;
        },
        m);
}

json to_json(const MagnitudeMeasurement& m) {
    json j{{"alpha", m.alpha}, {"grid", to_json(m.grid)}, {"magnitudes", m.magnitudes}};
    if (m.noise_sigma > 0.0) {
        j["noise_sigma"] = m.noise_sigma;
        j["seed"] = m.seed;
    }
    return j;
}

json to_json(const AmbiguityGrid& a) {
    json v = json::array();
    for (const auto& c : a.values) v.push_back(pair(c));
    return {{"x_axis", to_json(a.x_axis)}, {"y_axis", to_json(a.y_axis)}, {"values", v}};
}

Grid grid_from_json(const json& j) {
    return guarded([&] {
        Grid g{field(j, "t0").get<double>(), field(j, "dt").get<double>(), field(j, "n").get<std::size_t>()};
        g.validate();
        return g;
    });
}

Signal signal_from_json(const json& j) {
    return guarded([&] {
        const Grid g = grid_from_json(field(j, "grid"));
        CVec s = complex_list(field(j, "samples"));
        if (s.size() != g.n) throw Error(ErrorKind::InvalidInput, "sample count does not match the grid");
        return Signal(g, std::move(s));
    });
}

Model model_from_json(const json& j) {
    return guarded([&]() -> Model {
        const std::string type = field(j, "type").get<std::string>();
        if (type == "hermite") {
            HermiteModel m{complex_list(field(j, "coeffs"))};
            m.validate();
            return m;
        }
        if (type == "pulse") {
            PulseTrainModel m;
            m.a = field(j, "a").get<double>();
            m.b = field(j, "b").get<double>();
            for (const auto& e : field(j, "coeffs")) {
                if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::InvalidInput, "pulse coeffs are [k, re, im]");
                m.coeffs[e[0].get<int>()] = {e[1].get<double>(), e[2].get<double>()};
            }
            m.validate();
            return m;
        }
        if (type == "gaussian") {
            GaussianMixtureModel m{field(j, "nodes").get<RVec>(), complex_list(field(j, "coeffs"))};
            m.validate();
            return m;
        }
        throw Error(ErrorKind::InvalidInput, "unknown model type \"" + type + "\"");
    });
}

MagnitudeMeasurement measurement_from_json(const json& j) {
    return guarded([&] {
        MagnitudeMeasurement m;
        m.alpha = field(j, "alpha").get<double>();
        m.grid = grid_from_json(field(j, "grid"));
        m.magnitudes = field(j, "magnitudes").get<RVec>();
        m.noise_sigma = j.value("noise_sigma", 0.0);
        m.seed = j.value("seed", std::uint64_t{0});
        m.validate();
        return m;
    });
}

AmbiguityGrid ambiguity_from_json(const json& j) {
    return guarded([&] {
        AmbiguityGrid a{grid_from_json(field(j, "x_axis")), grid_from_json(field(j, "y_axis")),
                        complex_list(field(j, "values"))};
        if (a.values.size() != a.x_axis.n * a.y_axis.n) throw Error(ErrorKind::InvalidInput, "ambiguity value count mismatch");
        return a;
    });
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + tmp.string());
        out << contents;
        if (!out.flush()) throw Error(ErrorKind::InvalidInput, "write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string ambiguity_magnitude_csv(const AmbiguityGrid& a) {
    std::string out = "x\\y";
    for (std::size_t iy = 0; iy < a.y_axis.n; ++iy) {
        out += ',';
        put_number(out, a.y_axis.at(iy));
    }
    out += '\n';
    for (std::size_t ix = 0; ix < a.x_axis.n; ++ix) {
        put_number(out, a.x_axis.at(ix));
        for (std::size_t iy = 0; iy < a.y_axis.n; ++iy) {
            out += ',';
            put_number(out, std::abs(a.at(ix, iy)));
        }
        out += '\n';
    }
    return out;
}

}  // namespace frpr::io
