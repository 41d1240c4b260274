#pragma once

#include <string>
#include <utility>
#include <vector>

namespace minkasym {

struct Curve {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct Diagram {
    std::string which;  // "alpha" or "dw"
    std::string y_label;
    double y_min = 0, y_max = 1;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // samples first, then boundary curves
    std::vector<std::pair<double, double>> scatter;
    std::vector<Curve> curves;
};

// grid x grid sweep of interpolate(s, t); grid 0 gives an empty diagram
Diagram alpha_diagram(int grid);
// grid x grid sweep of k_max(s) against c_lambda(k_max(s), lambda)
Diagram dw_diagram(int grid);
Diagram make_diagram(const std::string& which, int grid);

std::string to_csv(const Diagram& d);
std::string to_svg(const Diagram& d);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace minkasym
