#include "minkasym/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "minkasym/gauges.hpp"
#include "minkasym/lp.hpp"
#include "minkasym/symm.hpp"

namespace minkasym::oracle {

std::vector<Vec2> hull(const std::vector<Vec2>& pts) {
    if (pts.size() < 3) return pts;
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x < pts[start].x || (pts[i].x == pts[start].x && pts[i].y < pts[start].y)) start = i;
    std::vector<Vec2> out;
    std::size_t cur = start;
    do {
        out.push_back(pts[cur]);
        std::size_t nxt = (cur + 1) % pts.size();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double c = cross(pts[nxt] - pts[cur], pts[i] - pts[cur]);
            // take the most clockwise candidate, farthest on ties
            if (c < -1e-15 || (std::abs(c) <= 1e-15 && norm(pts[i] - pts[cur]) > norm(pts[nxt] - pts[cur])))
                nxt = i;
        }
        cur = nxt;
        if (out.size() > pts.size()) break;
    } while (cur != start);
    return out;
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Edge> hs = p.edges();
    hs.insert(hs.end(), q.edges().begin(), q.edges().end());
    std::vector<Vec2> cand;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            double det = cross(hs[i].normal, hs[j].normal);
            if (std::abs(det) < 1e-12) continue;
            Vec2 x{(hs[i].offset * hs[j].normal.y - hs[j].offset * hs[i].normal.y) / det,
                   (hs[i].normal.x * hs[j].offset - hs[j].normal.x * hs[i].offset) / det};
            bool ok = true;
            for (const auto& h : hs)
                if (dot(h.normal, x) > h.offset + 1e-10) { ok = false; break; }
            if (ok) cand.push_back(x);
        }
    auto h = hull(cand);
    if (h.size() < 3) return std::nullopt;
    try {
        ConvexPolygon r = make_polygon(h);
        if (r.area() < 1e-9) return std::nullopt;
        return r;
    } catch (const DegenerateInput&) {
        return std::nullopt;
    }
}

ConvexPolygon hull_union(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> pts = p.vertices();
    pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
    return make_polygon(hull(pts));
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> pts;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) pts.push_back(a + b);
    return make_polygon(hull(pts));
}

double alpha_lp(const ConvexPolygon& k) {
    const auto t = symmetrize(k);
    return circumradius(t.inner, GaugeBody(t.outer)).scale;
}

double tau_lp(const ConvexPolygon& k) {
    const auto t = symmetrize(k);
    return circumradius(t.inner, GaugeBody(t.central)).scale;
}

double circumradius_enumerate(const ConvexPolygon& k, const GaugeBody& c) {
    std::vector<Halfspace3> cons;
    for (const auto& e : c.body().edges())
        cons.push_back({{-e.normal.x, -e.normal.y, -e.offset}, -support_value(k, e.normal)});
    auto x = solve_lp3_enumerate(cons, {0, 0, 1}, 1e3);
    if (!x) throw LPFailure("enumeration found no feasible basis");
    return (*x)[2];
}

}  // namespace minkasym::oracle
