#include "minkasym/gauges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "minkasym/lp.hpp"

namespace minkasym {

namespace {

double extent(const ConvexPolygon& p) {
    double m = 1.0;
    for (const auto& v : p.vertices()) m = std::max({m, std::abs(v.x), std::abs(v.y)});
    return m;
}

void require_symmetric(const GaugeBody& c) {
    if (!c.symmetric()) throw AsymmetricGauge("gauge body is not 0-symmetric");
}

// normals of K, of -K and of C; the breadth ratio is monotone between them
std::vector<Vec2> fan_directions(const ConvexPolygon& k, const GaugeBody& c) {
    std::vector<Vec2> dirs;
    dirs.reserve(2 * k.size() + c.body().size());
    for (const auto& e : k.edges()) {
        dirs.push_back(e.normal);
        dirs.push_back(-e.normal);
    }
    for (const auto& e : c.body().edges()) dirs.push_back(e.normal);
    return dirs;
}

// cands carry their LP slack; thin wedges leave the third active constraint
// a little loose, so the threshold widens until a certificate appears
ContainmentResult certify(double rho, Vec2 t, const std::vector<std::pair<double, Touch>>& cands, double sc) {
    for (double thr : {1e-9, 1e-7, 1e-5}) {
        std::vector<Touch> active;
        std::vector<Vec2> ns;
        for (const auto& [slack, touch] : cands)
            if (slack <= thr * sc) {
                active.push_back(touch);
                ns.push_back(touch.normal);
            }
        auto idx = spanning_normals(ns);
        if (idx.empty()) continue;
        ContainmentResult r{rho, t, {}};
        for (auto i : idx) r.touching.push_back(active[i]);
        return r;
    }
    throw LPFailure("no certificate among active constraints");
}

}  // namespace

double breadth(const ConvexPolygon& k, const GaugeBody& c, Vec2 u) {
    require_symmetric(c);
    return (support_value(k, u) + support_value(k, -u)) / support_value(c.body(), u);
}

Extent width(const ConvexPolygon& k, const GaugeBody& c) {
    require_symmetric(c);
    Extent best{std::numeric_limits<double>::infinity(), {}};
    for (const auto& u : fan_directions(k, c)) {
        double b = (support_value(k, u) + support_value(k, -u)) / support_value(c.body(), u);
        if (b < best.value) best = {b, u};
    }
    return best;
}

double diameter_by_breadth(const ConvexPolygon& k, const GaugeBody& c) {
    require_symmetric(c);
    double best = 0.0;
    for (const auto& u : fan_directions(k, c))
        best = std::max(best, (support_value(k, u) + support_value(k, -u)) / support_value(c.body(), u));
    return best;
}

DiameterResult diameter(const ConvexPolygon& k, const GaugeBody& c) {
    require_symmetric(c);
    DiameterResult best{0.0, k[0], k[0]};
    const auto& vs = k.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const double g = c.gauge(vs[i] - vs[j]);
            // on ties keep the euclidean-longer chord
            const bool tie = std::abs(g - best.value) <= 1e-12 * std::max(1.0, g);
            if ((g > best.value && !tie) || (tie && norm(vs[i] - vs[j]) > norm(best.x - best.y)))
                best = {std::max(g, best.value), vs[i], vs[j]};
        }
    return best;
}

ContainmentResult circumradius(const ConvexPolygon& k, const GaugeBody& c) {
    const auto& ce = c.body().edges();
    std::vector<double> hk(ce.size());
    std::vector<Halfspace3> cons;
    cons.reserve(ce.size());
    double min_off = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ce.size(); ++j) {
        const Edge& e = ce[j];
        hk[j] = support_value(k, e.normal);
        // h_K(a) - a.t <= rho b
        cons.push_back({{-e.normal.x, -e.normal.y, -e.offset}, -hk[j]});
        min_off = std::min(min_off, e.offset);
    }
    const double sc = extent(k);
    const double box = 1e3 * sc * (1.0 + sc / min_off);
    auto x = solve_lp3_lex(cons, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, box);
    if (!x) throw LPFailure("circumradius LP infeasible");
    const Vec2 t{(*x)[0], (*x)[1]};
    const double rho = (*x)[2];
    std::vector<std::pair<double, Touch>> cands;
    for (std::size_t j = 0; j < ce.size(); ++j) {
        double slack = rho * ce[j].offset + dot(ce[j].normal, t) - hk[j];
        if (slack <= 1e-5 * sc) cands.push_back({slack, {support_point(k, ce[j].normal), ce[j].normal}});
    }
    return certify(rho, t, cands, sc);
}

ContainmentResult inradius(const ConvexPolygon& k, const GaugeBody& c) {
    const auto& ke = k.edges();
    std::vector<double> hc(ke.size());
    std::vector<Halfspace3> cons;
    cons.reserve(ke.size());
    double min_h = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ke.size(); ++j) {
        hc[j] = support_value(c.body(), ke[j].normal);
        cons.push_back({{ke[j].normal.x, ke[j].normal.y, hc[j]}, ke[j].offset});
        min_h = std::min(min_h, hc[j]);
    }
    const double sc = extent(k);
    const double box = 1e3 * sc * (1.0 + sc / min_h);
    auto x = solve_lp3_lex(cons, {{0, 0, -1}, {1, 0, 0}, {0, 1, 0}}, box);
    if (!x) throw LPFailure("inradius LP infeasible");
    const Vec2 ctr{(*x)[0], (*x)[1]};
    const double rho = (*x)[2];
    if (!(rho > 0)) throw LPFailure("inradius LP returned non-positive radius");
    std::vector<std::pair<double, Touch>> cands;
    for (std::size_t j = 0; j < ke.size(); ++j) {
        double slack = ke[j].offset - rho * hc[j] - dot(ke[j].normal, ctr);
        if (slack <= 1e-5 * sc)
            cands.push_back({slack, {ctr + support_point(c.body(), ke[j].normal) * rho, ke[j].normal}});
    }
    return certify(rho, ctr, cands, sc);
}

AsymmetryResult minkowski_asymmetry(const ConvexPolygon& k) {
    const auto& ke = k.edges();
    std::vector<Halfspace3> cons;
    cons.reserve(ke.size());
    for (const auto& e : ke) cons.push_back({{e.normal.x, e.normal.y, -e.offset}, -support_value(k, -e.normal)});
    const double sc = extent(k);
    auto x = solve_lp3_lex(cons, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 1e3 * sc * 10.0);
    if (!x) throw LPFailure("asymmetry LP infeasible");
    AsymmetryResult r;
    r.s = std::max(1.0, (*x)[2]);
    r.center = Vec2{(*x)[0], (*x)[1]} / (1.0 + (*x)[2]);

    // both contact classes between K' and -K'/s, K' = K - c
    ConvexPolygon kc = translate(k, -r.center);
    GaugeBody g(kc), gm(negate(kc));
    const double tol = 1e-7;
    std::vector<Vec2> pts;
    auto add = [&](Vec2 p) {
        for (const auto& q : pts)
            if (norm(p - q) <= kEpsMerge) return;
        pts.push_back(p);
    };
    for (const auto& v : kc.vertices()) {
        if (std::abs(gm.gauge(v) * r.s - 1.0) <= tol) add(v);
        if (std::abs(gm.gauge(v) - r.s) <= tol * r.s) add(-v / r.s);
    }
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return angle_of(a) < angle_of(b); });
    r.asym_points = std::move(pts);
    return r;
}

std::vector<Touch> asymmetry_contacts(const ConvexPolygon& k, double s) {
    std::vector<Touch> out;
    const double sc = extent(k);
    for (const auto& e : k.edges()) {
        // tight iff h_K(-a) = s h_K(a)
        double lhs = support_value(k, -e.normal);
        if (std::abs(lhs - s * e.offset) <= 1e-8 * sc) out.push_back({-support_point(k, -e.normal) / s, e.normal});
    }
    return out;
}

double origin_distance_to_hull(const std::vector<Vec2>& pts) {
    auto seg = [](Vec2 a, Vec2 b) {
        Vec2 d = b - a;
        double l2 = dot(d, d);
        double t = l2 > 0 ? std::clamp(-dot(a, d) / l2, 0.0, 1.0) : 0.0;
        return norm(a + d * t);
    };
    if (pts.empty()) return std::numeric_limits<double>::infinity();
    if (pts.size() == 1) return norm(pts[0]);
    if (pts.size() == 2) return seg(pts[0], pts[1]);
    std::vector<Vec2> h;
    try {
        h = make_polygon(pts).vertices();
    } catch (const DegenerateInput&) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, seg(pts[i], pts[j]));
        return best;
    }
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h.size(); ++i) {
        Vec2 a = h[i], b = h[(i + 1) % h.size()];
        if (cross(b - a, -a) < 0) inside = false;
        best = std::min(best, seg(a, b));
    }
    return inside ? 0.0 : best;
}

std::vector<std::size_t> spanning_normals(const std::vector<Vec2>& normals) {
    const std::size_t n = normals.size();
    if (n < 2) return {};
    std::vector<std::size_t> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::vector<double> ang(n);
    for (std::size_t i = 0; i < n; ++i) ang[i] = angle_of(normals[i]);
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
    const double tol = kEpsCert;
    auto rel = [&](std::size_t from, std::size_t to) {
        double d = ang[to] - ang[from];
        while (d < 0) d += 2 * M_PI;
        while (d >= 2 * M_PI) d -= 2 * M_PI;
        return d;
    };
    for (std::size_t oi = 0; oi < n; ++oi) {
        std::size_t a = ord[oi];
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(rel(a, j) - M_PI) <= tol) return {a, j};
    }
    for (std::size_t oi = 0; oi < n; ++oi) {
        std::size_t a = ord[oi];
        std::size_t b = n, c = n;
        for (std::size_t j = 0; j < n; ++j) {
            double d = rel(a, j);
            if (d <= tol) continue;
            if (d < M_PI && (b == n || d > rel(a, b))) b = j;
            if (d > M_PI && (c == n || d < rel(a, c))) c = j;
        }
        if (b == n || c == n) continue;
        if (rel(b, c) <= M_PI + tol) {
            if (origin_distance_to_hull({normals[a], normals[b], normals[c]}) <= tol) return {a, b, c};
        }
    }
    return {};
}

WellSpreadTriple well_spread_triple(const ConvexPolygon& k) {
    const AsymmetryResult ar = minkowski_asymmetry(k);
    if (ar.s <= 1.0 + kEpsNum) throw NoTriple("body is symmetric within tolerance");
    ConvexPolygon kc = translate(k, -ar.center);
    auto contacts = asymmetry_contacts(kc, ar.s);
    std::sort(contacts.begin(), contacts.end(),
              [](const Touch& a, const Touch& b) { return angle_of(a.point) < angle_of(b.point); });
    const std::size_t n = contacts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                const auto &a = contacts[i], &b = contacts[j], &c = contacts[l];
                if (origin_distance_to_hull({a.normal, b.normal, c.normal}) > kEpsCert) continue;
                // strict interiority for the points
                double o1 = cross(b.point - a.point, -a.point);
                double o2 = cross(c.point - b.point, -b.point);
                double o3 = cross(a.point - c.point, -c.point);
                double tol = kEpsCert * extent(kc);
                if ((o1 > tol && o2 > tol && o3 > tol) || (o1 < -tol && o2 < -tol && o3 < -tol))
                    return {{a.point, b.point, c.point}, {a.normal, b.normal, c.normal}};
            }
    throw NoTriple("no well-spread triple among asymmetry contacts");
}

}  // namespace minkasym
