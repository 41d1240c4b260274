#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minkasym/complete.hpp"
#include "minkasym/diagram.hpp"
#include "minkasym/families.hpp"
#include "minkasym/gauges.hpp"
#include "minkasym/polygon_io.hpp"
#include "minkasym/symm.hpp"
#include "minkasym/verify.hpp"

using namespace minkasym;

namespace {

constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2;

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& it : items) {
        const auto eq = it.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("parameter '" + it + "' is not key=value");
        const std::string val = it.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(val.c_str(), &end);
        if (val.empty() || *end != '\0') throw ParseError("parameter '" + it + "' has a non-numeric value");
        out[it.substr(0, eq)] = v;
    }
    return out;
}

double param_or(const std::map<std::string, double>& p, const std::string& k, double dflt) {
    auto it = p.find(k);
    return it == p.end() ? dflt : it->second;
}

// K is already centered
GaugeBody make_gauge(const std::string& name, const std::map<std::string, double>& p, const ConvexPolygon& k) {
    if (std::filesystem::exists(name)) return GaugeBody(read_polygon_file(name));
    if (name == "disk") return hood(static_cast<int>(param_or(p, "m", 4096))).disk;
    if (name == "c_lambda") return c_lambda(k, param_or(p, "lambda", 1.0));
    if (name == "central") return c_lambda(k, 0.0);
    if (name == "triangle_inner") {
        const ConvexPolygon t = triangle();
        return GaugeBody(intersect(t, negate(t)));
    }
    return GaugeBody(make_family({name, p}));
}

std::string fixed(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10f", std::abs(v) < 5e-11 ? 0.0 : v);
    return buf;
}

int run_compute(const std::string& family, const std::vector<std::string>& params, const std::string& file,
                const std::string& gauge, const std::vector<std::string>& gauge_params, std::optional<double> tol) {
    if (family.empty() == file.empty()) throw ParseError("give exactly one of --family or --file");
    const ConvexPolygon raw = file.empty() ? make_family({family, parse_params(params)}) : read_polygon_file(file);
    const AsymmetryResult ar = minkowski_asymmetry(raw);
    const ConvexPolygon k = translate(raw, -ar.center);
    const SymmetrizationTriple tr = symmetrize(k);
    const CrossingSet cs = crossing_count(k);
    std::cout << "s: " << fixed(ar.s) << "\n";
    std::cout << "center: " << fixed(ar.center.x) << " " << fixed(ar.center.y) << "\n";
    std::cout << "alpha: " << fixed(alpha(tr)) << "\n";
    std::cout << "tau: " << fixed(tau(tr)) << "\n";
    std::cout << "crossings: " << cs.count_code() << "\n";
    std::cout << "crossing_points: " << cs.points.size() << "\n";
    std::cout << "crossing_segments: " << cs.segments.size() << "\n";
    if (gauge.empty()) return kExitOk;
    const GaugeBody c = make_gauge(gauge, parse_params(gauge_params), k);
    const double t = tol ? *tol : options_from_env({500, 1, kTolExact}).tol;
    const CompletenessReport rep = completeness_report(k, c, t);
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::cout << "r: " << fixed(rep.r) << "\n";
    std::cout << "R: " << fixed(rep.R) << "\n";
    std::cout << "D: " << fixed(rep.D) << "\n";
    std::cout << "w: " << fixed(rep.w) << "\n";
    std::cout << "D/w: " << fixed(rep.dw_ratio) << "\n";
    std::cout << "pseudo_complete: " << flag(rep.pseudo_complete) << "\n";
    std::cout << "complete: " << flag(rep.complete) << "\n";
    std::cout << "constant_width: " << flag(rep.constant_width) << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, std::size_t samples, std::uint64_t seed) {
    if (!is_suite(suite)) throw ParseError("unknown suite '" + suite + "'");
    VerifyOptions o;
    o.samples = samples;
    o.seed = seed;
    o = options_from_env(o);
    std::size_t checks = 0, failures = 0;
    for (const auto& s : run_suite(suite, o)) {
        std::cout << format_summary(s);
        checks += s.checks;
        failures += s.failures.size();
    }
    std::cout << "total: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitFail;
}

int run_diagram(const std::string& which, int grid, const std::string& csv, const std::string& svg) {
    if (grid < 0) throw ParseError("--grid must be >= 0");
    const Diagram d = make_diagram(which, grid);
    if (csv.empty() && svg.empty()) std::cout << to_csv(d);
    if (!csv.empty()) write_text_file(csv, to_csv(d));
    if (!svg.empty()) write_text_file(svg, to_svg(d));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minkowski asymmetry, symmetrization ratios and completeness in the plane"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "report s, alpha, tau, crossings and optional gauge radii");
    std::string family, file, gauge;
    std::vector<std::string> params, gauge_params;
    std::optional<double> tol;
    compute->add_option("--family", family, "family name");
    compute->add_option("--param", params, "family parameter key=value")->allow_extra_args(false);
    compute->add_option("--file", file, "polygon JSON file");
    compute->add_option("--gauge", gauge, "gauge body: file, disk, c_lambda, central, triangle_inner or a family");
    compute->add_option("--gauge-param", gauge_params, "gauge parameter key=value")->allow_extra_args(false);
    compute->add_option("--tol", tol, "completeness tolerance (default ASYM_TOL or 1e-6)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    verify->add_option("--suite", suite, "alpha-region, crossings, dw-pseudo, dw-euclidean, families or all")
        ->required();
    verify->add_option("--samples", samples, "random bodies per suite");
    verify->add_option("--seed", seed, "sampler seed");

    auto* diagram = app.add_subcommand("diagram", "write the (s, alpha) or (s, D/w) diagram");
    std::string which, csv, svg;
    int grid = 50;
    diagram->add_option("--which", which, "alpha or dw")->required();
    diagram->add_option("--grid", grid, "grid density per axis");
    diagram->add_option("--csv", csv, "CSV output path");
    diagram->add_option("--svg", svg, "SVG output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) return run_compute(family, params, file, gauge, gauge_params, tol);
        if (*verify) return run_verify(suite, samples, seed);
        if (*diagram) return run_diagram(which, grid, csv, svg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
