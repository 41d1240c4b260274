#include "minkasym/symm.hpp"

#include <algorithm>
#include <cmath>

#include "minkasym/gauges.hpp"

namespace minkasym {

namespace {

void require_interior_origin(const ConvexPolygon& k) {
    for (const auto& e : k.edges())
        if (e.offset <= kEpsNum) throw DegenerateInput("origin not interior to body");
}

double max_vertex_gauge(const ConvexPolygon& inner, const ConvexPolygon& outer) {
    GaugeBody g(outer);
    double a = 0.0;
    for (const auto& v : inner.vertices()) a = std::max(a, g.gauge(v));
    return a;
}

struct Arc {
    double lo, width;
};

// normal cone of K at a boundary point, as a CCW arc of directions
Arc normal_cone(const ConvexPolygon& k, Vec2 p, double tol) {
    std::vector<std::size_t> tight;
    const auto& es = k.edges();
    for (std::size_t j = 0; j < es.size(); ++j)
        if (std::abs(dot(es[j].normal, p) - es[j].offset) <= tol) tight.push_back(j);
    if (tight.empty()) return {0.0, -1.0};
    if (tight.size() == 1) return {angle_of(es[tight[0]].normal), 0.0};
    // two adjacent edges meet at a vertex; order them along the boundary
    std::size_t a = tight[0], b = tight[1];
    if (b == a + 1 || (a == 0 && b == es.size() - 1)) {
        if (a == 0 && b == es.size() - 1) std::swap(a, b);
    }
    double lo = angle_of(es[a].normal), hi = angle_of(es[b].normal);
    double w = hi - lo;
    while (w < 0) w += 2 * M_PI;
    return {lo, w};
}

double ccw_gap(double from, double to) {
    double d = std::fmod(to - from, 2 * M_PI);
    if (d < 0) d += 2 * M_PI;
    return d;
}

bool arcs_meet(Arc x, Arc y, double tol) {
    if (x.width < 0 || y.width < 0) return false;
    double d1 = ccw_gap(x.lo, y.lo), d2 = ccw_gap(y.lo, x.lo);
    return d1 <= x.width + tol || d2 <= y.width + tol || d1 >= 2 * M_PI - tol || d2 >= 2 * M_PI - tol;
}

}  // namespace

SymmetrizationTriple symmetrize(const ConvexPolygon& k) {
    require_interior_origin(k);
    ConvexPolygon mk = negate(k);
    return {intersect(k, mk), hull_union(k, mk), scale(minkowski_sum(k, mk), 0.5)};
}

double alpha(const SymmetrizationTriple& t) { return max_vertex_gauge(t.inner, t.outer); }
double tau(const SymmetrizationTriple& t) { return max_vertex_gauge(t.inner, t.central); }
double alpha(const ConvexPolygon& k) { return alpha(symmetrize(k)); }
double tau(const ConvexPolygon& k) { return tau(symmetrize(k)); }

CrossingSet crossing_count(const ConvexPolygon& k) {
    require_interior_origin(k);
    return boundary_intersections(k, negate(k));
}

std::vector<ClassifiedPoint> classify_touching_points(const ConvexPolygon& k) {
    require_interior_origin(k);
    if (minkowski_asymmetry(k).s <= 1.0 + kEpsNum) throw DomainError("classification needs s(K) > 1");
    const SymmetrizationTriple t = symmetrize(k);
    const double a = alpha(t);
    GaugeBody gin(t.inner), gout(t.outer);
    const double tol = 1e-9;

    std::vector<Vec2> cand;
    auto add = [&](Vec2 p) {
        for (const auto& q : cand)
            if (norm(p - q) <= kEpsMerge) return;
        cand.push_back(p);
    };
    for (const auto& v : t.inner.vertices())
        if (gout.gauge(v) >= a * (1.0 - tol)) add(v);
    for (const auto& w : t.outer.vertices())
        if (gin.gauge(w * a) <= 1.0 + tol) add(w * a);

    const ConvexPolygon mk = negate(k);
    std::vector<ClassifiedPoint> out;
    for (const auto& p : cand) {
        bool case_i = distance_to_boundary(k, p) <= kEpsMerge && distance_to_boundary(mk, p) <= kEpsMerge;
        if (case_i) {
            out.push_back({p, TouchCase::I});
            continue;
        }
        Vec2 q = p / a;
        if (contains_point(k, q, 1e-8) || contains_point(mk, q, 1e-8)) {
            out.push_back({p, TouchCase::II});
            continue;
        }
        throw UnclassifiedPoint("touching point fits neither case");
    }
    std::sort(out.begin(), out.end(),
              [](const ClassifiedPoint& x, const ClassifiedPoint& y) { return angle_of(x.point) < angle_of(y.point); });
    return out;
}

bool has_antipodal_parallel_support(const ConvexPolygon& k, double tol) {
    const CrossingSet cs = crossing_count(k);
    std::vector<Vec2> cand = cs.points;
    for (const auto& sg : cs.segments) {
        cand.push_back(sg.a);
        cand.push_back(sg.b);
        cand.push_back((sg.a + sg.b) * 0.5);
    }
    const double ptol = 1e-9 * std::max(1.0, norm(k[0]));
    for (const auto& p : cand) {
        Arc np = normal_cone(k, p, ptol);
        Arc nm = normal_cone(k, -p, ptol);
        if (nm.width < 0) continue;
        Arc flipped{nm.lo + M_PI, nm.width};
        if (arcs_meet(np, flipped, tol)) return true;
    }
    return false;
}

}  // namespace minkasym
