#include "lsl/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace lsl {

using nlohmann::ordered_json;

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

ordered_json shape_json(const ShapeClass& sc) {
    ordered_json j;
    switch (sc.kind) {
        case ShapeClass::Kind::TypeI:
            j["kind"] = "I";
            j["kappa1"] = sc.kappa1;
            j["kappa2"] = sc.kappa2;
            break;
        case ShapeClass::Kind::TypeII:
            j["kind"] = "II";
            j["kappa"] = sc.kappa;
            j["b"] = sc.b;
            break;
        case ShapeClass::Kind::TypeIII:
            j["kind"] = "III";
            j["kappa"] = sc.kappa;
            break;
    }
    j["anomaly"] = sc.anomaly;
    return j;
}

ordered_json vec_json(const Vec4& v) { return ordered_json::array({v[0], v[1], v[2], v[3]}); }

} // namespace

ordered_json make_report(const CatalogSurface& surface, const VerifyOutcome& outcome,
                         const VerifyOptions& opt) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", "lsl"}, {"version", kToolVersion}};
    j["timestamp"] = utc_timestamp();
    j["seed"] = opt.seed;

    j["surface"] = {{"label", surface.chart.label},
                    {"provenance", surface.provenance},
                    {"c", surface.chart.sf.c},
                    {"domain",
                     {{"u", {surface.chart.domain.u0, surface.chart.domain.u1}},
                      {"v", {surface.chart.domain.v0, surface.chart.domain.v1}}}}};
    j["grid"] = {{"nu", opt.nu}, {"nv", opt.nv}};

    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : outcome.checks) {
        checks.push_back({{"name", c.name},
                          {"max_residual", c.max_residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;

    const PointGeometry& pg = outcome.center;
    j["geometry_summary"] = {{"H", pg.H},
                             {"H2", pg.H2},
                             {"K", pg.K},
                             {"eps", pg.eps},
                             {"lorentzian", pg.s == 1},
                             {"shape", shape_json(outcome.center_shape)}};

    const SpectralFit& f = outcome.fit;
    ordered_json fit;
    fit["model"] = f.model == FitModel::two_type ? "two_type" : "one_type";
    fit["sigma"] = f.sigma;
    fit["pi"] = f.pi;
    fit["w"] = vec_json(f.w);
    fit["lambda"] = f.lambda;
    fit["b"] = vec_json(f.b);
    fit["two_type_residual"] = f.two_type_residual;
    fit["one_type_residual"] = f.one_type_residual;
    fit["condition_number"] = f.condition_number;
    fit["ill_posed"] = f.ill_posed;
    fit["roots"] = {{"real", {f.roots[0].real(), f.roots[1].real()}},
                    {"imag", {f.roots[0].imag(), f.roots[1].imag()}},
                    {"are_real", f.roots_real}};
    if (f.a_defined) fit["a"] = vec_json(f.a);
    fit["verdict"] = to_string(f.verdict);
    j["fit"] = fit;

    j["pass"] = outcome.pass;
    return j;
}

void write_json(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("io-error", "cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace lsl
