#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "minkasym/geom.hpp"
#include "minkasym/sampling.hpp"

namespace th {

using namespace minkasym;

inline ConvexPolygon box(double x0, double y0, double x1, double y1) {
    return make_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline ConvexPolygon square(double h = 1) { return box(-h, -h, h, h); }

// circumradius 1, vertex up
inline ConvexPolygon reg_triangle() {
    std::vector<Vec2> v;
    for (int i = 0; i < 3; ++i) v.push_back(unit_at(M_PI / 2 + 2 * M_PI * i / 3));
    return make_polygon(v);
}

inline bool same_vertex_set(const ConvexPolygon& p, const ConvexPolygon& q, double tol = 1e-9) {
    if (p.size() != q.size()) return false;
    for (const auto& v : p.vertices()) {
        bool hit = false;
        for (const auto& w : q.vertices()) hit = hit || norm(v - w) <= tol;
        if (!hit) return false;
    }
    return true;
}

inline std::vector<Vec2> random_dirs(std::mt19937_64& g, int n) {
    std::uniform_real_distribution<double> u(0, 2 * M_PI);
    std::vector<Vec2> out;
    for (int i = 0; i < n; ++i) out.push_back(unit_at(u(g)));
    return out;
}

}  // namespace th
