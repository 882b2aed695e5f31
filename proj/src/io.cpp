#include "sijc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace sijc::io {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    return j.get<double>();
}

double require_positive(const json& j, const std::string& where) {
    const double v = require_number(j, where);
    if (!(v > 0.0)) throw ConfigError(where + " must be positive");
    return v;
}

ShapeInvariantModel parse_model(const json& j) {
    if (!j.is_object()) throw ConfigError("model must be an object");
    double hbar = 1.0;
    if (j.contains("hbar")) hbar = require_positive(j.at("hbar"), "model.hbar");
    const std::string kind = j.value("kind", std::string{});
    if (kind == "harmonic") {
        const double omega = j.contains("omega")
                                 ? require_positive(j.at("omega"), "model.omega")
                                 : 1.0;
        return ShapeInvariantModel::harmonic(omega, hbar);
    }
    if (kind == "scaling") {
        if (!j.contains("q")) throw ConfigError("model.q is required for kind scaling");
        if (!j.contains("r1")) throw ConfigError("model.r1 is required for kind scaling");
        const double q = require_number(j.at("q"), "model.q");
        const double r1 = require_positive(j.at("r1"), "model.r1");
        if (!(q > 0.0 && q <= 1.0)) throw ConfigError("model.q must lie in (0, 1]");
        return ShapeInvariantModel::scaling(q, r1, hbar);
    }
    if (kind == "explicit") {
        if (!j.contains("remainders") || !j.at("remainders").is_array()) {
            throw ConfigError("model.remainders must be an array for kind explicit");
        }
        std::vector<double> r;
        for (const auto& v : j.at("remainders")) {
            r.push_back(require_positive(v, "model.remainders[]"));
        }
        return ShapeInvariantModel::explicit_seq(std::move(r), hbar);
    }
    throw ConfigError("model.kind must be one of harmonic, scaling, explicit");
}

CouplingConfig parse_coupling(const json& j) {
    if (!j.is_object()) throw ConfigError("coupling must be an object");
    CouplingConfig c;
    if (j.contains("alpha")) c.alpha = require_positive(j.at("alpha"), "coupling.alpha");
    if (j.contains("delta")) c.delta = require_number(j.at("delta"), "coupling.delta");
    if (j.contains("mode")) {
        const std::string m = j.at("mode").get<std::string>();
        if (m == "linear") c.mode = CouplingMode::linear;
        else if (m == "intensity") c.mode = CouplingMode::intensity;
        else throw ConfigError("coupling.mode must be linear or intensity");
    }
    return c;
}

} // namespace

void apply_json(RunConfig& cfg, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    if (j.contains("model")) cfg.model = parse_model(j.at("model"));
    if (j.contains("coupling")) cfg.coupling = parse_coupling(j.at("coupling"));
    if (j.contains("dim")) {
        if (!j.at("dim").is_number_integer()) throw ConfigError("dim must be an integer");
        cfg.dim = j.at("dim").get<int>();
    }
    if (cfg.dim < 2) throw ConfigError("dim must be >= 2");
    if (j.contains("time")) {
        const auto& t = j.at("time");
        if (!t.is_object()) throw ConfigError("time must be an object");
        if (t.contains("t_max")) cfg.time.t_max = require_number(t.at("t_max"), "time.t_max");
        if (t.contains("dt")) cfg.time.dt = require_positive(t.at("dt"), "time.dt");
        if (cfg.time.t_max < 0.0) throw ConfigError("time.t_max must be >= 0");
    }
    if (j.contains("series_order")) {
        if (!j.at("series_order").is_number_integer()) {
            throw ConfigError("series_order must be an integer");
        }
        cfg.series_order = j.at("series_order").get<int>();
        if (cfg.series_order < 1) throw ConfigError("series_order must be >= 1");
    }
    if (j.contains("output")) {
        if (!j.at("output").is_string()) throw ConfigError("output must be a string");
        cfg.output = j.at("output").get<std::string>();
    }
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    RunConfig cfg;
    apply_json(cfg, buf.str());
    return cfg;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_spectrum_csv(std::ostream& os, const spectrum::SpectrumTable& table) {
    os << "m,E_plus,E_minus,lambda_plus,C_plus,C_minus,gamma_plus,delta_m,flag\n";
    os << "-1," << format_double(table.singleton_energy) << ','
       << format_double(table.singleton_energy) << ','
       << format_double(table.singleton_energy) << ",0,0,0,0,uncoupled\n";
    for (const auto& p : table.pairs) {
        os << p.m << ',' << format_double(p.energy_plus) << ','
           << format_double(p.energy_minus) << ',' << format_double(p.lambda_plus) << ','
           << format_double(p.c_plus) << ',' << format_double(p.c_minus) << ','
           << format_double(p.gamma_plus) << ',' << format_double(p.delta_m)
           << ",dressed\n";
    }
}

void write_evolution_header(std::ostream& os) {
    os << "t,channel,index,re,im,prob\n";
}

void write_evolution_rows(std::ostream& os, double t, const TwoChannelState& state) {
    const std::string ts = format_double(t);
    for (std::size_t m = 0; m < state.upper.size(); ++m) {
        const cplx v = state.upper[m];
        os << ts << ",upper," << m << ',' << format_double(v.real()) << ','
           << format_double(v.imag()) << ',' << format_double(std::norm(v)) << '\n';
    }
    for (std::size_t k = 0; k < state.lower.size(); ++k) {
        const cplx v = state.lower[k];
        os << ts << ",lower," << k << ',' << format_double(v.real()) << ','
           << format_double(v.imag()) << ',' << format_double(std::norm(v)) << '\n';
    }
}

void write_inversion_header(std::ostream& os) {
    os << "t,i,j,rung,re,im,source\n";
}

namespace {

void inversion_entry(std::ostream& os, const std::string& ts, int i, int j, int rung,
                     cplx hom, cplx part, cplx tot) {
    const auto row = [&](cplx v, const char* source) {
        os << ts << ',' << i << ',' << j << ',' << rung << ','
           << format_double(v.real()) << ',' << format_double(v.imag()) << ','
           << source << '\n';
    };
    row(hom, "homogeneous");
    row(part, "particular");
    row(tot, "total");
}

} // namespace

void write_inversion_rows(std::ostream& os, const inversion::InversionSolution& sol) {
    const std::string ts = format_double(sol.t);
    const int n = sol.total.dim_upper();
    inversion_entry(os, ts, 2, 2, -1, sol.homogeneous.ll(0, 0), sol.particular.ll(0, 0),
                    sol.total.ll(0, 0));
    for (int m = 0; m < n; ++m) {
        inversion_entry(os, ts, 1, 1, m, sol.homogeneous.uu(m, m), sol.particular.uu(m, m),
                        sol.total.uu(m, m));
        inversion_entry(os, ts, 1, 2, m, sol.homogeneous.ul(m, m + 1),
                        sol.particular.ul(m, m + 1), sol.total.ul(m, m + 1));
        inversion_entry(os, ts, 2, 1, m, sol.homogeneous.lu(m + 1, m),
                        sol.particular.lu(m + 1, m), sol.total.lu(m + 1, m));
        inversion_entry(os, ts, 2, 2, m, sol.homogeneous.ll(m + 1, m + 1),
                        sol.particular.ll(m + 1, m + 1), sol.total.ll(m + 1, m + 1));
    }
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + " is not valid JSON: " + e.what());
    }
}

std::vector<cplx> parse_cvector(const json& j, const std::string& where, std::size_t want) {
    if (!j.is_array() || j.size() != want) {
        throw ConfigError(where + " must be an array of length " + std::to_string(want));
    }
    std::vector<cplx> out(want);
    for (std::size_t i = 0; i < want; ++i) {
        const auto& e = j.at(i);
        if (!e.is_array() || e.size() != 2) {
            throw ConfigError(where + " entries must be [re, im] pairs");
        }
        out[i] = cplx(require_number(e.at(0), where), require_number(e.at(1), where));
    }
    return out;
}

Matrix parse_cmatrix(const json& j, const std::string& where, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        throw ConfigError(where + " must be an array of " + std::to_string(rows) + " rows");
    }
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto row = parse_cvector(j.at(static_cast<std::size_t>(i)),
                                       where + " row", static_cast<std::size_t>(cols));
        for (int c = 0; c < cols; ++c) m(i, c) = row[static_cast<std::size_t>(c)];
    }
    return m;
}

} // namespace

TwoChannelState load_state(const std::string& path, int dim) {
    const json j = parse_file(path);
    if (!j.is_object()) throw ConfigError("state file root must be an object");
    TwoChannelState st = TwoChannelState::zeros(dim);
    if (j.contains("basis")) {
        const auto& b = j.at("basis");
        const std::string channel = b.value("channel", std::string{});
        const int index = b.value("index", -1);
        const bool up = channel == "upper";
        if (!up && channel != "lower") {
            throw ConfigError("basis.channel must be upper or lower");
        }
        const int limit = up ? dim : dim + 1;
        if (index < 0 || index >= limit) {
            throw ConfigError("basis.index out of range for channel " + channel);
        }
        st = TwoChannelState::basis(dim, up, index);
    } else {
        if (!j.contains("upper") || !j.contains("lower")) {
            throw ConfigError("state file needs either basis or upper/lower arrays");
        }
        st.upper = parse_cvector(j.at("upper"), "upper", static_cast<std::size_t>(dim));
        st.lower = parse_cvector(j.at("lower"), "lower", static_cast<std::size_t>(dim) + 1);
    }
    try {
        st.normalize();
    } catch (const std::domain_error&) {
        throw ConfigError("state is not normalizable (zero norm)");
    }
    return st;
}

BlockOperator load_sigma3_init(const std::string& path, int dim) {
    const json j = parse_file(path);
    if (!j.is_object()) throw ConfigError("initializer file root must be an object");
    for (const char* key : {"uu", "ul", "lu", "ll"}) {
        if (!j.contains(key)) {
            throw ConfigError(std::string("initializer is missing block ") + key);
        }
    }
    BlockOperator b;
    b.uu = parse_cmatrix(j.at("uu"), "uu", dim, dim);
    b.ul = parse_cmatrix(j.at("ul"), "ul", dim, dim + 1);
    b.lu = parse_cmatrix(j.at("lu"), "lu", dim + 1, dim);
    b.ll = parse_cmatrix(j.at("ll"), "ll", dim + 1, dim + 1);
    const double scale_ref = std::max(1.0, max_abs(b));
    if (hermiticity_defect(b) > 1e-12 * scale_ref) {
        throw ConfigError("sigma3 initializer is not Hermitian");
    }
    return b;
}

} // namespace sijc::io
