#include "minkasym/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "minkasym/complete.hpp"
#include "minkasym/errors.hpp"
#include "minkasym/families.hpp"
#include "minkasym/gauges.hpp"
#include "minkasym/sampling.hpp"
#include "minkasym/symm.hpp"

namespace minkasym {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double grid_at(double a, double b, int n, int i) { return n == 1 ? a : a + (b - a) * i / (n - 1); }

Curve sample_curve(const std::string& name, double a, double b, double (*f)(double)) {
    Curve c{name, {}};
    const int n = 101;
    for (int i = 0; i < n; ++i) {
        const double s = grid_at(a, b, n, i);
        c.points.emplace_back(s, f(s));
    }
    return c;
}

void add_curve_rows(Diagram& d, std::size_t width) {
    for (const auto& c : d.curves)
        for (const auto& [x, y] : c.points) {
            std::vector<std::string> row = {"boundary", "curve=" + c.name, num(x), num(y)};
            row.resize(width);
            d.rows.push_back(std::move(row));
        }
}

struct AlphaSample {
    double s, a, t;
    int crossings;
};

struct DwSample {
    CompletenessReport rep;
};

}  // namespace

Diagram alpha_diagram(int grid) {
    Diagram d;
    d.which = "alpha";
    d.y_label = "alpha";
    d.y_min = 0.6;
    d.y_max = 1.02;
    d.header = {"family", "params", "s", "alpha", "tau", "crossings"};
    if (grid <= 0) return d;
    const auto n = static_cast<std::size_t>(grid);
    const auto samples = parallel_map<AlphaSample>(n * n, [&](std::size_t k) {
        const double s = grid_at(1, 2, grid, static_cast<int>(k / n));
        const double t = grid_at(0, 1, grid, static_cast<int>(k % n));
        const ConvexPolygon K = interpolate(s, t);
        const SymmetrizationTriple tr = symmetrize(K);
        return AlphaSample{minkowski_asymmetry(K).s, alpha(tr), tau(tr), crossing_count(K).count_code()};
    });
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double s = grid_at(1, 2, grid, static_cast<int>(k / n));
        const double t = grid_at(0, 1, grid, static_cast<int>(k % n));
        const auto& r = samples[k];
        d.rows.push_back({"interpolate", "s=" + num(s) + ";t=" + num(t), num(r.s), num(r.a), num(r.t),
                          std::to_string(r.crossings)});
        d.scatter.emplace_back(r.s, r.a);
    }
    d.curves.push_back(sample_curve("2/(s+1)", 1, 2, [](double s) { return 2 / (s + 1); }));
    d.curves.push_back(sample_curve("min{1;s/(s^2-1)}", 1, 2, [](double s) {
        return s <= 1 ? 1.0 : std::min(1.0, s / (s * s - 1));
    }));
    add_curve_rows(d, d.header.size());
    return d;
}

Diagram dw_diagram(int grid) {
    Diagram d;
    d.which = "dw";
    d.y_label = "D/w";
    d.y_min = 0.98;
    d.y_max = 1.5;
    d.header = {"family", "params", "s", "dw", "r", "R", "D", "w", "pseudo_complete", "complete"};
    if (grid <= 0) return d;
    const auto n = static_cast<std::size_t>(grid);
    const auto reps = parallel_map<CompletenessReport>(n * n, [&](std::size_t k) {
        const ConvexPolygon K = k_max(grid_at(1, 2, grid, static_cast<int>(k / n)));
        return completeness_report(K, c_lambda(K, grid_at(0, 1, grid, static_cast<int>(k % n))), kTolExact);
    });
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const double s = grid_at(1, 2, grid, static_cast<int>(k / n));
        const double lam = grid_at(0, 1, grid, static_cast<int>(k % n));
        const auto& r = reps[k];
        d.rows.push_back({"k_max/c_lambda", "s=" + num(s) + ";lambda=" + num(lam), num(r.s), num(r.dw_ratio), num(r.r),
                          num(r.R), num(r.D), num(r.w), r.pseudo_complete ? "1" : "0", r.complete ? "1" : "0"});
        d.scatter.emplace_back(r.s, r.dw_ratio);
    }
    d.curves.push_back(sample_curve("(s+1)/2", 1, 2, [](double s) { return (s + 1) / 2; }));
    d.curves.push_back(sample_curve("s^2/(s^2-1)", 1.5, 2, [](double s) { return s * s / (s * s - 1); }));
    d.curves.push_back(sample_curve("s/(2(s-1))", 1.5, 2, [](double s) { return s / (2 * (s - 1)); }));
    add_curve_rows(d, d.header.size());
    return d;
}

Diagram make_diagram(const std::string& which, int grid) {
    if (which == "alpha") return alpha_diagram(grid);
    if (which == "dw") return dw_diagram(grid);
    throw ParseError("unknown diagram '" + which + "' (expected alpha or dw)");
}

std::string to_csv(const Diagram& d) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << "\n";
    };
    line(d.header);
    for (const auto& r : d.rows) line(r);
    return os.str();
}

std::string to_svg(const Diagram& d) {
    const double W = 640, H = 480, L = 60, R = 20, T = 20, B = 50;
    const double x0 = 1, x1 = 2;
    auto X = [&](double s) { return L + (s - x0) / (x1 - x0) * (W - L - R); };
    auto Y = [&](double v) { return H - B - (v - d.y_min) / (d.y_max - d.y_min) * (H - T - B); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
       << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<polyline points=\"" << px(L) << "," << px(T) << " " << px(L) << "," << px(H - B) << " " << px(W - R) << ","
       << px(H - B) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double s = x0 + (x1 - x0) * i / 4;
        os << "<text x=\"" << px(X(s)) << "\" y=\"" << px(H - B + 18) << "\" font-size=\"12\" text-anchor=\"middle\">"
           << num(s) << "</text>\n";
        const double v = d.y_min + (d.y_max - d.y_min) * i / 4;
        os << "<text x=\"" << px(L - 6) << "\" y=\"" << px(Y(v) + 4) << "\" font-size=\"12\" text-anchor=\"end\">"
           << px(v) << "</text>\n";
    }
    os << "<text x=\"" << px((L + W - R) / 2) << "\" y=\"" << px(H - 10)
       << "\" font-size=\"14\" text-anchor=\"middle\">s</text>\n";
    os << "<text x=\"16\" y=\"" << px((T + H - B) / 2) << "\" font-size=\"14\">" << d.y_label << "</text>\n";
    static const char* colors[] = {"#1f5fbf", "#2e8b2e", "#c03030"};
    for (std::size_t i = 0; i < d.curves.size(); ++i) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[i % 3] << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [s, v] : d.curves[i].points) {
            if (v < d.y_min || v > d.y_max) continue;
            os << px(X(s)) << "," << px(Y(v)) << " ";
        }
        os << "\"/>\n";
    }
    for (const auto& [s, v] : d.scatter)
        os << "<circle cx=\"" << px(X(s)) << "\" cy=\"" << px(Y(v)) << "\" r=\"1.8\" fill=\"#d4a017\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IOError("cannot open " + path + " for writing");
    f << content;
    if (!f) throw IOError("write failed for " + path);
}

}  // namespace minkasym
