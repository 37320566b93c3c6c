#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsl/catalog.hpp"
#include "lsl/report.hpp"
#include "lsl/verify.hpp"

namespace {

using namespace lsl;

struct CommonArgs {
    std::string surface = "all";
    std::vector<std::string> params;
    std::string c = "+1";
    std::string grid = "12x12";
    unsigned long long seed = 42;
    std::vector<std::string> tols;
    std::string out;
    std::string emit = "json";
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--surface", a.surface, "surface family name, or 'all'");
    cmd->add_option("--param", a.params, "surface parameter KEY=VALUE (repeatable)");
    cmd->add_option("--c", a.c, "space form curvature: +1 or -1")
        ->check(CLI::IsMember({"+1", "-1", "1"}));
    cmd->add_option("--grid", a.grid, "identity grid, NxM");
    cmd->add_option("--seed", a.seed, "seed for sample points");
    cmd->add_option("--tol", a.tols, "tolerance override NAME=VALUE (repeatable)");
    cmd->add_option("--out", a.out, "report output path");
    cmd->add_option("--emit", a.emit, "output format")->check(CLI::IsMember({"json", "csv"}));
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> m;
    for (const std::string& kv : kvs) {
        auto pos = kv.find('=');
        if (pos == std::string::npos)
            throw Error("invalid-parameter", "--param expects KEY=VALUE, got " + kv);
        m[kv.substr(0, pos)] = kv.substr(pos + 1);
    }
    return m;
}

Tolerances parse_tols(const std::vector<std::string>& kvs) {
    Tolerances t;
    for (const std::string& kv : kvs) {
        auto pos = kv.find('=');
        if (pos == std::string::npos)
            throw Error("unknown-tolerance", "--tol expects NAME=VALUE, got " + kv);
        t.by_name(kv.substr(0, pos)) = std::stod(kv.substr(pos + 1));
    }
    return t;
}

std::pair<int, int> parse_grid(const std::string& g) {
    auto pos = g.find('x');
    if (pos == std::string::npos) throw Error("invalid-grid", "--grid expects NxM, got " + g);
    int nu = std::stoi(g.substr(0, pos));
    int nv = std::stoi(g.substr(pos + 1));
    if (nu < 3 || nv < 3) throw Error("invalid-grid", "grid must be at least 3x3");
    return {nu, nv};
}

SpaceForm parse_space(const std::string& c) {
    return c == "-1" ? anti_de_sitter() : de_sitter();
}

VerifyOptions make_options(const CommonArgs& a) {
    VerifyOptions opt;
    auto [nu, nv] = parse_grid(a.grid);
    opt.nu = nu;
    opt.nv = nv;
    opt.seed = a.seed;
    opt.tol = parse_tols(a.tols);
    return opt;
}

std::vector<CatalogSurface> resolve_surfaces(const CommonArgs& a) {
    if (a.surface == "all") return default_catalog();
    return {make_surface(a.surface, parse_params(a.params), parse_space(a.c))};
}

// exit codes: 0 pass, 1 check failure, 2 unknown surface / empty range, 3 construction error
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitConstruction = 3;

int classify_error(const Error& e) {
    std::string code = e.code();
    if (code == "unknown-surface" || code == "empty-slice") return kExitUnknown;
    return kExitConstruction;
}

int cmd_verify(const CommonArgs& a) {
    VerifyOptions opt = make_options(a);
    std::vector<CatalogSurface> surfaces;
    try {
        surfaces = resolve_surfaces(a);
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return classify_error(e);
    }

    bool all_pass = true;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const CatalogSurface& s : surfaces) {
        VerifyOutcome outcome;
        try {
            outcome = verify_surface(s, opt);
        } catch (const Error& e) {
            std::cerr << s.chart.label << ": error [" << e.code() << "]: " << e.what() << "\n";
            return kExitCheckFailure;
        }
        std::cout << s.chart.label << ": " << (outcome.pass ? "pass" : "FAIL") << "\n";
        for (const CheckResult& c : outcome.checks)
            if (!c.pass)
                std::cout << "  FAIL " << c.name << "  residual " << c.max_residual << " > "
                          << c.tolerance << "\n";
        reports.push_back(make_report(s, outcome, opt));
        all_pass = all_pass && outcome.pass;
    }
    if (!a.out.empty()) {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "verify";
        j["surfaces"] = reports;
        j["pass"] = all_pass;
        write_json(j, a.out);
    }
    return all_pass ? kExitPass : kExitCheckFailure;
}

int cmd_fit(const CommonArgs& a) {
    VerifyOptions opt = make_options(a);
    std::vector<CatalogSurface> surfaces;
    try {
        surfaces = resolve_surfaces(a);
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return classify_error(e);
    }
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const CatalogSurface& s : surfaces) {
        SamplePoints pts = sample_points(s.chart, opt.fit_samples, opt.seed);
        SpectralFit fit = fit_spectral(s.chart, pts, FitModel::two_type, opt.tol);
        std::cout << s.chart.label << ":\n"
                  << "  sigma = " << fit.sigma << ", pi = " << fit.pi << "\n"
                  << "  roots = (" << fit.roots[0].real() << (fit.roots_real ? "" : " + i*")
                  << (fit.roots_real ? std::string() : std::to_string(fit.roots[0].imag()))
                  << ", " << fit.roots[1].real() << ")\n"
                  << "  one-type lambda = " << fit.lambda << "\n";
        if (fit.a_defined)
            std::cout << "  a = (" << fit.a[0] << ", " << fit.a[1] << ", " << fit.a[2] << ", "
                      << fit.a[3] << ")\n";
        std::cout << "  verdict: " << to_string(fit.verdict) << "\n";
        VerifyOutcome outcome;
        outcome.fit = fit;
        outcome.center = point_geometry(s.chart, s.chart.domain.mid_u(), s.chart.domain.mid_v(),
                                        opt.tol);
        outcome.center_shape = classify_shape(outcome.center, opt.tol.shape_class);
        outcome.pass = true;
        reports.push_back(make_report(s, outcome, opt));
    }
    if (!a.out.empty()) {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "fit";
        j["surfaces"] = reports;
        write_json(j, a.out);
    }
    return kExitPass;
}

struct Sweep {
    std::string key;
    double lo = 0, hi = 0, step = 0;
};

int cmd_scan(const CommonArgs& a) {
    VerifyOptions opt = make_options(a);
    std::map<std::string, std::string> params;
    try {
        params = parse_params(a.params);
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return kExitConstruction;
    }

    Sweep sweep;
    for (const auto& [k, v] : params) {
        auto c1 = v.find(':');
        if (c1 == std::string::npos) continue;
        auto c2 = v.find(':', c1 + 1);
        if (c2 == std::string::npos) continue;
        sweep.key = k;
        sweep.lo = std::stod(v.substr(0, c1));
        sweep.hi = std::stod(v.substr(c1 + 1, c2 - c1 - 1));
        sweep.step = std::stod(v.substr(c2 + 1));
        break;
    }
    if (sweep.key.empty() || sweep.step <= 0.0 || sweep.hi < sweep.lo) {
        std::cerr << "error [empty-range]: scan needs one --param KEY=lo:hi:step with a "
                     "non-empty range\n";
        return kExitUnknown;
    }

    std::ostringstream csv;
    csv << "param,value,H,H2,K,sigma,pi,verdict,max_residual\n";
    int rows = 0;
    for (double x = sweep.lo; x <= sweep.hi + 1e-12; x += sweep.step) {
        auto p = params;
        std::ostringstream val;
        val << x;
        p[sweep.key] = val.str();
        CatalogSurface s;
        try {
            s = make_surface(a.surface, p, parse_space(a.c));
        } catch (const Error& e) {
            csv << sweep.key << "," << x << ",,,,,,error:" << e.code() << ",\n";
            ++rows;
            continue;
        }
        PointGeometry pg =
            point_geometry(s.chart, s.chart.domain.mid_u(), s.chart.domain.mid_v(), opt.tol);
        SamplePoints pts = sample_points(s.chart, opt.fit_samples, opt.seed);
        SpectralFit fit = fit_spectral(s.chart, pts, FitModel::two_type, opt.tol);
        double max_res =
            fit.verdict == Verdict::OneType ? fit.one_type_residual : fit.two_type_residual;
        if (fit.a_defined && fit.verdict == Verdict::TwoType) {
            for (auto [u, v] : pts)
                max_res = std::max(max_res, residual_tan(s.chart, u, v, fit.pi, fit.a, opt.tol));
        }
        csv << sweep.key << "," << x << "," << pg.H << "," << pg.H2 << "," << pg.K << ","
            << fit.sigma << "," << fit.pi << "," << to_string(fit.verdict) << "," << max_res
            << "\n";
        ++rows;
    }
    if (rows == 0) {
        std::cerr << "error [empty-range]: sweep produced no rows\n";
        return kExitUnknown;
    }
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) {
            std::cerr << "error [io-error]: cannot open " << a.out << "\n";
            return kExitConstruction;
        }
        f << csv.str();
    } else {
        std::cout << csv.str();
    }
    return kExitPass;
}

int cmd_catalog(const CommonArgs& a) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["families"] = catalog_names();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const CatalogSurface& s : default_catalog()) {
        entries.push_back({{"label", s.chart.label},
                           {"provenance", s.provenance},
                           {"c", s.chart.sf.c},
                           {"expected_verdict", to_string(s.expected.verdict)}});
    }
    j["default_catalog"] = entries;
    if (!a.out.empty())
        write_json(j, a.out);
    else
        std::cout << j.dump(2) << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for surfaces in the Lorentzian space forms S^3_1 / H^3_1"};
    app.require_subcommand(1);

    CommonArgs va, fa, sa, ca;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite and spectral fit");
    add_common(verify, va);
    CLI::App* fit = app.add_subcommand("fit", "fit the spectral model and print the verdict");
    add_common(fit, fa);
    CLI::App* scan = app.add_subcommand("scan", "sweep one parameter, emit CSV");
    add_common(scan, sa);
    CLI::App* catalog = app.add_subcommand("catalog", "list surface families");
    add_common(catalog, ca);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(va);
        if (fit->parsed()) return cmd_fit(fa);
        if (scan->parsed()) return cmd_scan(sa);
        if (catalog->parsed()) return cmd_catalog(ca);
    } catch (const lsl::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
    return kExitPass;
}
