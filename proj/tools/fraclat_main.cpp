// fraclat: command line front end. Subcommands map onto the library modules:
//   matrix      first (block-)row of the fractional lattice matrix
//   dispersion  dispersion curves along grid / cross-section paths
//   kernel      continuum Riesz kernels (infinite, direct image sum, zeta form)
//   limit       lattice-to-continuum convergence table
//   evolve      spectral time evolution of a field on the periodic lattice
//
// Output is CSV for series data and JSON for matrices. Every run embeds a
// manifest (tool version, resolved parameters, payload checksum); outputs are
// byte-deterministic for identical inputs.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fraclat/chain1d.hpp"
#include "fraclat/continuum.hpp"
#include "fraclat/dynamics.hpp"
#include "fraclat/errors.hpp"
#include "fraclat/lattice_nd.hpp"
#include "fraclat/toeplitz.hpp"
#include "fraclat/types.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using ordered_json = nlohmann::ordered_json;

// shortest round-trip decimal form, locale independent
std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string checksum_hex(const std::string& data) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx", (unsigned long long)fnv1a64(data));
    return buf;
}

void write_out(const std::optional<std::string>& path, const std::string& content) {
    if (!path) {
        std::cout << content;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw fraclat::DomainError("cannot open output file " + *path);
    f << content;
}

ordered_json make_manifest(const std::string& subcommand, const ordered_json& params,
                           const std::string& payload) {
    ordered_json m;
    m["tool"] = "fraclat";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["parameters"] = params;
    m["checksum_fnv1a64"] = checksum_hex(payload);
    return m;
}

// CSV := manifest rendered as '# key=value' comment lines, then data rows.
std::string csv_document(const std::string& subcommand, const ordered_json& params,
                         const std::string& columns, const std::string& data) {
    std::ostringstream os;
    os << "# tool=fraclat version=" << kVersion << " subcommand=" << subcommand << "\n";
    for (const auto& [key, val] : params.items()) {
        os << "# " << key << "=";
        if (val.is_string())
            os << val.get<std::string>();
        else
            os << val.dump();
        os << "\n";
    }
    os << "# checksum_fnv1a64=" << checksum_hex(data) << "\n";
    os << "# columns=" << columns << "\n";
    os << data;
    return os.str();
}

void write_sidecar_manifest(const std::optional<std::string>& out_path,
                            const std::string& subcommand, const ordered_json& params,
                            const std::string& payload) {
    if (!out_path) return;
    const ordered_json m = make_manifest(subcommand, params, payload);
    std::ofstream f(*out_path + ".manifest.json", std::ios::binary);
    if (f) f << m.dump(2) << "\n";
}

// Flat key=value config file. Keys matching long option names are appended to
// the argument list as --key=value unless the flag already appears on the
// command line, so explicit flags win.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream f(path);
    if (!f) throw fraclat::DomainError("cannot read config file " + path);
    std::vector<std::string> merged = args;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config") continue;
        bool present = false;
        for (const auto& a : merged)
            if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) present = true;
        if (!present) merged.push_back("--" + key + "=" + value);
    }
    return merged;
}

fraclat::Convention parse_convention(const std::string& s) {
    if (s == "laplacian") return fraclat::Convention::LaplacianNsd;
    if (s == "characteristic") return fraclat::Convention::CharacteristicPsd;
    throw fraclat::DomainError("unknown convention '" + s + "' (laplacian|characteristic)");
}

const char* convention_name(fraclat::Convention c) {
    return c == fraclat::Convention::LaplacianNsd ? "laplacian" : "characteristic";
}

std::vector<std::int64_t> resolve_sizes(int dim, std::vector<std::int64_t> sizes) {
    if (sizes.empty()) throw fraclat::DomainError("--N is required");
    if ((int)sizes.size() == 1 && dim > 1) sizes.resize(dim, sizes[0]);
    if ((int)sizes.size() != dim)
        throw fraclat::DimensionMismatch("--N lists " + std::to_string(sizes.size()) +
                                         " sizes for --n " + std::to_string(dim));
    return sizes;
}

// ---- matrix ----------------------------------------------------------------

struct MatrixOpts {
    int dim = 1;
    std::vector<std::int64_t> sizes;
    double alpha = 1.0;
    double omega_sq = 1.0;
    double mass = 1.0;
    std::string route = "periodized";
    std::string convention = "laplacian";
    std::string cross_check;
    double tol = 1e-9;
    std::optional<std::string> out;
    std::string config;
};

// Ring routes assemble the N-periodic matrix; window routes emit the first N
// elements of the infinite-chain row (no wrap), so comparing across the two
// families shows the genuine periodization difference.
bool ring_route_1d(const std::string& r) { return r == "periodized" || r == "spectral"; }
bool window_route_1d(const std::string& r) { return r == "closed" || r == "quadrature"; }

std::vector<double> matrix_row_1d(const MatrixOpts& o, const std::string& route,
                                  fraclat::Convention conv) {
    fraclat::ChainConfig cfg;
    cfg.alpha = o.alpha;
    cfg.omega_sq = o.omega_sq;
    cfg.mass = o.mass;
    if (ring_route_1d(route)) {
        cfg.size = o.sizes[0];
        const auto r = (route == "periodized") ? fraclat::Route::Periodized
                                               : fraclat::Route::Spectral;
        return fraclat::chain::assemble_matrix(cfg, conv, r).first_row;
    }
    if (!window_route_1d(route))
        throw fraclat::DomainError("unknown 1D route '" + route +
                                   "' (periodized|spectral|closed|quadrature)");
    const double sign = (conv == fraclat::Convention::LaplacianNsd) ? -o.mass : 1.0;
    std::vector<double> row(o.sizes[0]);
    for (std::size_t p = 0; p < row.size(); ++p)
        row[p] = sign * ((route == "closed")
                             ? fraclat::chain::infinite_element(cfg, (std::int64_t)p)
                             : fraclat::chain::infinite_element_quadrature(
                                   cfg, (std::int64_t)p));
    return row;
}

int cmd_matrix(const MatrixOpts& opts) {
    MatrixOpts o = opts;
    o.sizes = resolve_sizes(o.dim, o.sizes);
    const fraclat::Convention conv = parse_convention(o.convention);

    fraclat::SymToeplitz mat;
    if (o.dim == 1) {
        if (ring_route_1d(o.route)) {
            fraclat::ChainConfig cfg;
            cfg.size = o.sizes[0];
            cfg.alpha = o.alpha;
            cfg.omega_sq = o.omega_sq;
            cfg.mass = o.mass;
            const auto r = (o.route == "spectral") ? fraclat::Route::Spectral
                                                   : fraclat::Route::Periodized;
            mat = fraclat::chain::assemble_matrix(cfg, conv, r);
        } else {
            // window of the infinite chain: dims records the window length
            mat.dims = {o.sizes[0]};
            mat.convention = conv;
            mat.scale = (conv == fraclat::Convention::LaplacianNsd)
                            ? -o.mass * o.omega_sq
                            : o.omega_sq;
            mat.first_row = matrix_row_1d(o, o.route, conv);
            long double rs = 0.0L;
            for (double v : mat.first_row) rs += v;
            mat.row_sum = (double)rs;
        }
    } else {
        if (o.route != "spectral")
            throw fraclat::DomainError("route '" + o.route + "' is 1D only; nD uses spectral");
        fraclat::LatticeConfig cfg;
        cfg.dim = o.dim;
        cfg.sizes = o.sizes;
        cfg.alpha = o.alpha;
        cfg.omega_sq = o.omega_sq;
        cfg.mass = o.mass;
        mat = fraclat::lattice::assemble_matrix_nd(cfg, conv);
    }

    double max_dev = -1.0;
    if (!o.cross_check.empty()) {
        std::vector<double> other;
        if (o.dim == 1) {
            other = matrix_row_1d(o, o.cross_check, conv);
        } else if (o.cross_check == "serial") {
            fraclat::LatticeConfig cfg;
            cfg.dim = o.dim;
            cfg.sizes = o.sizes;
            cfg.alpha = o.alpha;
            cfg.omega_sq = o.omega_sq;
            cfg.mass = o.mass;
            if (cfg.total_sites() > 65536)
                throw fraclat::ResourceLimit("serial cross-check capped at 65536 sites");
            const double sign =
                (conv == fraclat::Convention::LaplacianNsd) ? -o.mass : 1.0;
            other.resize(cfg.total_sites());
            for (std::int64_t i = 0; i < (std::int64_t)other.size(); ++i) {
                fraclat::MultiIndex p(o.dim);
                std::int64_t rest = i;
                for (int a = o.dim - 1; a >= 0; --a) {
                    p[a] = rest % o.sizes[a];
                    rest /= o.sizes[a];
                }
                other[i] = sign * fraclat::lattice::ref::finite_element_spectral_nd(cfg, p);
            }
        } else {
            throw fraclat::DomainError("nD cross-check route must be 'serial'");
        }
        max_dev = 0.0;
        for (std::size_t i = 0; i < other.size(); ++i)
            max_dev = std::max(max_dev, std::fabs(mat.first_row[i] - other[i]) /
                                            std::max(1.0, std::fabs(other[i])));
    }

    ordered_json params;
    params["n"] = o.dim;
    params["N"] = o.sizes;
    params["alpha"] = o.alpha;
    params["omega_sq"] = o.omega_sq;
    params["mass"] = o.mass;
    params["route"] = o.route;
    params["convention"] = o.convention;
    if (!o.cross_check.empty()) params["cross_check"] = o.cross_check;

    ordered_json payload_row = ordered_json::array();
    for (double v : mat.first_row) payload_row.push_back(v);
    const std::string payload = payload_row.dump();

    ordered_json doc;
    doc["manifest"] = make_manifest("matrix", params, payload);
    doc["convention"] = convention_name(conv);
    doc["route"] = o.route;
    doc["dims"] = mat.dims;
    doc["scale"] = mat.scale;
    doc["row_sum"] = mat.row_sum;
    if (max_dev >= 0.0) doc["cross_check_max_rel_deviation"] = max_dev;
    doc["first_row"] = payload_row;
    write_out(o.out, doc.dump(2) + "\n");

    if (max_dev > o.tol)
        throw fraclat::ToleranceNotMet("cross-check deviation " + fmt(max_dev) +
                                       " exceeds tol " + fmt(o.tol));
    return 0;
}

// ---- dispersion ------------------------------------------------------------

struct DispersionOpts {
    int dim = 2;
    std::vector<double> alphas = {2.0, 1.5, 1.0, 0.5};
    std::string section = "110";
    int samples = 101;
    double omega_sq = 1.0;
    std::optional<std::string> out;
    std::string config;
};

int cmd_dispersion(const DispersionOpts& o) {
    if (o.samples < 2) throw fraclat::DomainError("--samples must be at least 2");
    if (o.dim < 1 || o.dim > 3) throw fraclat::DomainError("--n must be 1, 2 or 3");
    for (double a : o.alphas)
        if (!(a > 0.0)) throw fraclat::DomainError("alpha values must be positive");

    // path through the zone: kappa(t) for t in [0, pi], endpoint hit exactly
    auto kappa_at = [&](double t) {
        std::vector<double> k(o.dim, 0.0);
        if (o.dim == 1 || o.section == "111") {
            for (int a = 0; a < o.dim; ++a) k[a] = t;
        } else if (o.section == "010") {
            k[0] = t;
        } else if (o.section == "110") {
            k[0] = t;
            if (o.dim >= 2) k[1] = t;
        } else {
            throw fraclat::DomainError("unknown section '" + o.section + "' (010|110|111)");
        }
        return k;
    };

    std::ostringstream data;
    for (double alpha : o.alphas) {
        fraclat::LatticeConfig cfg;
        cfg.dim = o.dim;
        cfg.alpha = alpha;
        cfg.omega_sq = o.omega_sq;
        for (int i = 0; i < o.samples; ++i) {
            const double t = (i == o.samples - 1) ? M_PI : M_PI * (double)i / (o.samples - 1);
            const auto k = kappa_at(t);
            const double lam = fraclat::lattice::generator_eigenvalue(cfg, k);
            const double om = fraclat::lattice::dispersion_nd(cfg, k);
            const double on = fraclat::lattice::dispersion_nd_normalized(cfg, k);
            data << fmt(alpha);
            for (double kc : k) data << "," << fmt(kc);
            data << "," << fmt(lam) << "," << fmt(om) << "," << fmt(on) << "\n";
        }
    }

    ordered_json params;
    params["n"] = o.dim;
    params["alphas"] = o.alphas;
    params["section"] = (o.dim == 1) ? "grid" : o.section;
    params["samples"] = o.samples;
    params["omega_sq"] = o.omega_sq;

    std::string columns = "alpha";
    for (int a = 0; a < o.dim; ++a) columns += ",kappa" + std::to_string(a + 1);
    columns += ",lambda,omega,omega_normalized";
    write_out(o.out, csv_document("dispersion", params, columns, data.str()));
    write_sidecar_manifest(o.out, "dispersion", params, data.str());
    return 0;
}

// ---- kernel ----------------------------------------------------------------

struct KernelOpts {
    double alpha = 1.0;
    std::optional<double> period;
    std::vector<double> xs = {0.5};
    std::string route = "infinite";
    std::int64_t terms = 100000;
    std::optional<std::string> out;
    std::string config;
};

int cmd_kernel(const KernelOpts& o) {
    fraclat::ContinuumConfig cfg;
    cfg.alpha = o.alpha;
    cfg.period = o.period;
    const auto s = fraclat::continuum::sample_kernel(cfg, o.xs, o.route, o.terms);

    std::ostringstream data;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        data << fmt(s.x[i]) << "," << fmt(s.value[i]);
        if (!s.tail_bound.empty()) data << "," << fmt(s.tail_bound[i]);
        data << "\n";
    }

    ordered_json params;
    params["alpha"] = o.alpha;
    if (o.period) params["L"] = *o.period;
    params["route"] = o.route;
    if (o.route == "direct") params["terms"] = o.terms;

    const std::string columns =
        s.tail_bound.empty() ? "x,value" : "x,value,tail_bound";
    write_out(o.out, csv_document("kernel", params, columns, data.str()));
    write_sidecar_manifest(o.out, "kernel", params, data.str());
    return 0;
}

// ---- limit -----------------------------------------------------------------

struct LimitOpts {
    double alpha = 0.5;
    double x = 1.0;
    std::vector<double> hs = {1.0 / 16, 1.0 / 64, 1.0 / 256};
    double a_const = 1.0;
    double rho0 = 1.0;
    std::optional<std::string> out;
    std::string config;
};

int cmd_limit(const LimitOpts& o) {
    const auto rep =
        fraclat::continuum::continuum_limit_check(o.alpha, o.x, o.hs, o.a_const, o.rho0);

    std::ostringstream data;
    for (const auto& st : rep.steps) {
        data << fmt(st.h) << "," << st.site << "," << fmt(st.lattice_value) << ","
             << fmt(st.continuum_value) << "," << fmt(st.rel_deviation) << ","
             << (st.on_grid ? 1 : 0) << "\n";
    }

    ordered_json params;
    params["alpha"] = o.alpha;
    params["x"] = o.x;
    params["h"] = o.hs;
    params["a_const"] = o.a_const;
    params["rho0"] = o.rho0;
    params["monotone"] = rep.monotone;
    params["final_deviation"] = rep.final_deviation;

    write_out(o.out, csv_document("limit", params,
                                  "h,site,lattice_value,continuum_value,rel_deviation,on_grid",
                                  data.str()));
    write_sidecar_manifest(o.out, "limit", params, data.str());
    return 0;
}

// ---- evolve ----------------------------------------------------------------

struct EvolveOpts {
    int dim = 1;
    std::vector<std::int64_t> sizes;
    double alpha = 1.0;
    double omega_sq = 1.0;
    double mass = 1.0;
    double t = 0.0;
    double diffusivity = 1.0;
    std::string init = "delta";
    std::optional<std::string> out;
    std::string config;
};

std::vector<std::complex<double>> load_field_csv(const std::string& path, std::int64_t total) {
    std::ifstream f(path);
    if (!f) throw fraclat::DomainError("cannot read field file " + path);
    std::vector<std::complex<double>> values;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        // take the last two comma-separated fields as re, im
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            parts.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (parts.size() < 2)
            throw fraclat::DomainError("field file row needs at least re,im columns");
        auto parse = [&](const std::string& sv) {
            double v;
            const char* b = sv.data();
            const auto res = std::from_chars(b, b + sv.size(), v);
            if (res.ec != std::errc())
                throw fraclat::DomainError("bad number '" + sv + "' in field file");
            return v;
        };
        const double re = parse(parts[parts.size() - 2]);
        const double im = parse(parts[parts.size() - 1]);
        values.emplace_back(re, im);
    }
    if ((std::int64_t)values.size() != total)
        throw fraclat::DimensionMismatch("field file has " + std::to_string(values.size()) +
                                         " rows, lattice has " + std::to_string(total));
    return values;
}

int cmd_evolve(const EvolveOpts& opts) {
    EvolveOpts o = opts;
    o.sizes = resolve_sizes(o.dim, o.sizes);

    fraclat::dynamics::FieldState state;
    state.config.dim = o.dim;
    state.config.sizes = o.sizes;
    state.config.alpha = o.alpha;
    state.config.omega_sq = o.omega_sq;
    state.config.mass = o.mass;
    state.config.validate();
    const std::int64_t total = state.config.total_sites();
    state.values.assign(total, {0.0, 0.0});

    if (o.init == "delta") {
        state.values[0] = {1.0, 0.0};
    } else if (o.init == "uniform") {
        state.values.assign(total, {1.0, 0.0});
    } else if (o.init.rfind("bloch:", 0) == 0) {
        std::vector<std::int64_t> mode;
        std::stringstream ss(o.init.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) mode.push_back(std::stoll(tok));
        if ((int)mode.size() != o.dim)
            throw fraclat::DimensionMismatch("bloch mode needs " + std::to_string(o.dim) +
                                             " components");
        for (std::int64_t i = 0; i < total; ++i) {
            std::int64_t rest = i;
            double phase = 0.0;
            for (int a = o.dim - 1; a >= 0; --a) {
                const std::int64_t pa = rest % o.sizes[a];
                rest /= o.sizes[a];
                phase += 2.0 * M_PI * (double)((mode[a] % o.sizes[a]) * pa) / (double)o.sizes[a];
            }
            state.values[i] = {std::cos(phase), std::sin(phase)};
        }
    } else if (o.init.rfind("file:", 0) == 0) {
        state.values = load_field_csv(o.init.substr(5), total);
    } else {
        throw fraclat::DomainError("unknown init '" + o.init +
                                   "' (delta|uniform|bloch:l1[,l2..]|file:PATH)");
    }

    const auto evolved = fraclat::dynamics::evolve_diffusion(state, o.t, o.diffusivity);

    std::ostringstream data;
    for (std::int64_t i = 0; i < total; ++i) {
        std::int64_t rest = i;
        std::vector<std::int64_t> p(o.dim);
        for (int a = o.dim - 1; a >= 0; --a) {
            p[a] = rest % o.sizes[a];
            rest /= o.sizes[a];
        }
        for (int a = 0; a < o.dim; ++a) data << p[a] << ",";
        data << fmt(evolved.values[i].real()) << "," << fmt(evolved.values[i].imag()) << "\n";
    }

    ordered_json params;
    params["n"] = o.dim;
    params["N"] = o.sizes;
    params["alpha"] = o.alpha;
    params["omega_sq"] = o.omega_sq;
    params["mass"] = o.mass;
    params["t"] = o.t;
    params["c"] = o.diffusivity;
    params["init"] = o.init;
    params["time"] = evolved.time;

    std::string columns;
    for (int a = 0; a < o.dim; ++a) columns += "p" + std::to_string(a + 1) + ",";
    columns += "re,im";
    write_out(o.out, csv_document("evolve", params, columns, data.str()));
    write_sidecar_manifest(o.out, "evolve", params, data.str());
    return 0;
}

// ---- wiring ----------------------------------------------------------------

int run(std::vector<std::string> args) {
    args = merge_config(args);

    CLI::App app{"fractional lattice Laplacian toolkit"};
    app.require_subcommand(1);

    MatrixOpts mo;
    auto* m = app.add_subcommand("matrix", "first row of the fractional matrix");
    m->add_option("--n", mo.dim, "lattice dimension");
    m->add_option("--N", mo.sizes, "lattice sizes (comma list)")->delimiter(',');
    m->add_option("--alpha", mo.alpha, "fractional order");
    m->add_option("--omega-sq", mo.omega_sq, "frequency scale Omega^2");
    m->add_option("--mass", mo.mass, "particle mass mu");
    m->add_option("--route", mo.route,
                  "periodized|spectral (ring), closed|quadrature (infinite window, 1D)");
    m->add_option("--convention", mo.convention, "laplacian|characteristic");
    m->add_option("--cross-check", mo.cross_check, "second route to compare against");
    m->add_option("--tol", mo.tol, "cross-check tolerance");
    m->add_option("--out", mo.out, "output file (stdout if absent)");
    m->add_option("--config", mo.config, "flat key=value config file");

    DispersionOpts do_;
    auto* d = app.add_subcommand("dispersion", "dispersion along a zone path");
    d->add_option("--n", do_.dim, "lattice dimension");
    d->add_option("--alphas", do_.alphas, "alpha list")->delimiter(',');
    d->add_option("--section", do_.section, "010|110|111 zone path");
    d->add_option("--samples", do_.samples, "points along the path");
    d->add_option("--omega-sq", do_.omega_sq, "frequency scale Omega^2");
    d->add_option("--out", do_.out, "output file (stdout if absent)");
    d->add_option("--config", do_.config, "flat key=value config file");

    KernelOpts ko;
    auto* k = app.add_subcommand("kernel", "continuum Riesz kernels");
    k->add_option("--alpha", ko.alpha, "fractional order");
    k->add_option("--L", ko.period, "period (direct/zeta routes)");
    k->add_option("--x", ko.xs, "abscissae (comma list)")->delimiter(',');
    k->add_option("--route", ko.route, "infinite|direct|zeta");
    k->add_option("--terms", ko.terms, "image terms for the direct route");
    k->add_option("--out", ko.out, "output file (stdout if absent)");
    k->add_option("--config", ko.config, "flat key=value config file");

    LimitOpts lo;
    auto* l = app.add_subcommand("limit", "continuum limit convergence table");
    l->set_help_flag("--help", "print help"); // frees -h so --h can name the spacing list
    l->add_option("--alpha", lo.alpha, "fractional order (0,2)");
    l->add_option("--x", lo.x, "continuum coordinate");
    l->add_option("--h", lo.hs, "spacings (comma list)")->delimiter(',');
    l->add_option("--a-const", lo.a_const, "scaling constant A_alpha");
    l->add_option("--rho0", lo.rho0, "mass density rho0");
    l->add_option("--out", lo.out, "output file (stdout if absent)");
    l->add_option("--config", lo.config, "flat key=value config file");

    EvolveOpts eo;
    auto* e = app.add_subcommand("evolve", "spectral diffusion evolution");
    e->add_option("--n", eo.dim, "lattice dimension");
    e->add_option("--N", eo.sizes, "lattice sizes (comma list)")->delimiter(',');
    e->add_option("--alpha", eo.alpha, "fractional order");
    e->add_option("--omega-sq", eo.omega_sq, "frequency scale Omega^2");
    e->add_option("--mass", eo.mass, "particle mass mu");
    e->add_option("--t", eo.t, "duration");
    e->add_option("--c", eo.diffusivity, "diffusivity");
    e->add_option("--init", eo.init, "delta|uniform|bloch:l1[,l2..]|file:PATH");
    e->add_option("--out", eo.out, "output file (stdout if absent)");
    e->add_option("--config", eo.config, "flat key=value config file");

    std::vector<const char*> argv;
    argv.push_back("fraclat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return 2;
    }

    if (m->parsed()) return cmd_matrix(mo);
    if (d->parsed()) return cmd_dispersion(do_);
    if (k->parsed()) return cmd_kernel(ko);
    if (l->parsed()) return cmd_limit(lo);
    if (e->parsed()) return cmd_evolve(eo);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(args);
    } catch (const fraclat::ResourceLimit& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const fraclat::ToleranceNotMet& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const fraclat::QuadratureNonConvergence& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const fraclat::DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
