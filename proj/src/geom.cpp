#include "minkasym/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minkasym {

namespace {

double coord_scale(const std::vector<Vec2>& pts) {
    double m = 0.0;
    for (const auto& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    return std::max(m, 1e-300);
}

bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    const double sc = coord_scale(pts);
    const double dup = 1e-13 * sc;
    std::vector<Vec2> uniq;
    for (const auto& p : pts)
        if (uniq.empty() || norm(p - uniq.back()) > dup) uniq.push_back(p);
    if (uniq.size() < 3) return uniq;

    // twice-area threshold for dropping collinear vertices
    const double area_eps = kEpsCollinear * std::max(1.0, sc * sc);
    auto turn = [](Vec2 o, Vec2 a, Vec2 b) { return cross(a - o, b - o); };

    std::vector<Vec2> h(2 * uniq.size());
    std::size_t k = 0;
    for (const auto& p : uniq) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 0.0) --k;
        h[k++] = p;
    }
    for (std::size_t i = uniq.size() - 1, lo = k + 1; i-- > 0;) {
        const auto& p = uniq[i];
        while (k >= lo && turn(h[k - 2], h[k - 1], p) <= 0.0) --k;
        h[k++] = p;
    }
    h.resize(k - 1);

    // near-collinear cleanup, sharpest offender first
    while (h.size() >= 3) {
        std::size_t worst = h.size();
        double worst_turn = area_eps;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const Vec2& a = h[(i + h.size() - 1) % h.size()];
            const Vec2& c = h[(i + 1) % h.size()];
            double tr = turn(a, h[i], c);
            if (tr <= worst_turn) {
                worst_turn = tr;
                worst = i;
            }
        }
        if (worst == h.size()) break;
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(worst));
    }
    auto it = std::min_element(h.begin(), h.end(), lex_less);
    std::rotate(h.begin(), it, h.end());
    return h;
}

ConvexPolygon make_polygon(std::vector<Vec2> points) {
    for (const auto& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateInput("non-finite coordinate");
    auto h = convex_hull(std::move(points));
    if (h.size() < 3) throw DegenerateInput("hull is a point or a segment");
    ConvexPolygon poly;
    poly.verts_ = std::move(h);
    const std::size_t n = poly.verts_.size();
    poly.edges_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = poly.verts_[i], b = poly.verts_[(i + 1) % n];
        Vec2 d = b - a;
        Vec2 nrm = normalized(Vec2{d.y, -d.x});
        poly.edges_.push_back({nrm, dot(nrm, a)});
    }
    if (poly.area() <= 0.0) throw DegenerateInput("zero area");
    return poly;
}

const Vec2& ConvexPolygon::vertex(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(verts_.size());
    return verts_[static_cast<std::size_t>(((i % n) + n) % n)];
}

double ConvexPolygon::area() const {
    double a = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        a += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
    return 0.5 * a;
}

Vec2 ConvexPolygon::vertex_centroid() const {
    Vec2 c;
    for (const auto& v : verts_) c += v;
    return c / static_cast<double>(verts_.size());
}

GaugeBody::GaugeBody(ConvexPolygon body) : body_(std::move(body)) {
    const double sc = coord_scale(body_.vertices());
    for (const auto& e : body_.edges())
        if (e.offset <= 1e-12 * sc) throw DegenerateInput("origin not interior to gauge body");
    const std::size_t n = body_.size();
    symmetric_ = (n % 2 == 0);
    for (std::size_t i = 0; symmetric_ && i < n; ++i)
        if (norm(body_[i] + body_[(i + n / 2) % n]) > kEpsNum * std::max(1.0, sc)) symmetric_ = false;

    std::vector<double> ang(n);
    for (std::size_t i = 0; i < n; ++i) ang[i] = angle_of(body_[i]);
    fan_start_ = static_cast<std::size_t>(std::min_element(ang.begin(), ang.end()) - ang.begin());
    fan_.resize(n);
    for (std::size_t j = 0; j < n; ++j) fan_[j] = ang[(fan_start_ + j) % n];
}

double GaugeBody::gauge(Vec2 x) const {
    const auto& es = body_.edges();
    const std::size_t n = es.size();
    if (x.x == 0.0 && x.y == 0.0) return 0.0;
    if (n <= 16) return gauge_value_bruteforce(body_, x);
    const double th = angle_of(x);
    auto it = std::upper_bound(fan_.begin(), fan_.end(), th);
    std::size_t j = (it == fan_.begin()) ? n - 1 : static_cast<std::size_t>(it - fan_.begin()) - 1;
    std::size_t e = (fan_start_ + j) % n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k : {e + n - 1, e, e + 1}) {
        const Edge& ed = es[k % n];
        best = std::max(best, dot(ed.normal, x) / ed.offset);
    }
    return std::max(best, 0.0);
}

double gauge_value(const GaugeBody& p, Vec2 x) { return p.gauge(x); }

double gauge_value_bruteforce(const ConvexPolygon& p, Vec2 x) {
    double best = 0.0;
    for (const auto& e : p.edges()) best = std::max(best, dot(e.normal, x) / e.offset);
    return best;
}

SupportResult support(const ConvexPolygon& p, Vec2 u) {
    const auto& vs = p.vertices();
    const std::size_t n = vs.size();
    std::size_t best = 0;
    double bv = dot(u, vs[0]);
    for (std::size_t i = 1; i < n; ++i) {
        double d = dot(u, vs[i]);
        if (d > bv) { bv = d; best = i; }
    }
    const double tol = kEpsNum * norm(u) * std::max(1.0, coord_scale(vs));
    if (bv - dot(u, vs[(best + 1) % n]) <= tol) return {bv, true, best};
    if (bv - dot(u, vs[(best + n - 1) % n]) <= tol) return {bv, true, (best + n - 1) % n};
    return {bv, false, best};
}

double support_value(const ConvexPolygon& p, Vec2 u) {
    double bv = -std::numeric_limits<double>::infinity();
    for (const auto& v : p.vertices()) bv = std::max(bv, dot(u, v));
    return bv;
}

Vec2 support_point(const ConvexPolygon& p, Vec2 u) {
    const auto& vs = p.vertices();
    std::size_t best = 0;
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (dot(u, vs[i]) > dot(u, vs[best])) best = i;
    return vs[best];
}

ConvexPolygon intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> cur = p.vertices();
    for (const auto& e : q.edges()) {
        if (cur.empty()) break;
        std::vector<Vec2> next;
        next.reserve(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            Vec2 a = cur[i], b = cur[(i + 1) % cur.size()];
            double da = dot(e.normal, a) - e.offset;
            double db = dot(e.normal, b) - e.offset;
            if (da <= 0) next.push_back(a);
            if ((da < 0 && db > 0) || (da > 0 && db < 0)) next.push_back(a + (b - a) * (da / (da - db)));
        }
        cur = std::move(next);
    }
    if (cur.size() < 3) throw EmptyIntersection("interiors do not overlap");
    try {
        ConvexPolygon r = make_polygon(std::move(cur));
        const double sc = std::max(coord_scale(p.vertices()), coord_scale(q.vertices()));
        if (r.area() <= kEpsNum * sc * sc) throw EmptyIntersection("intersection has no interior");
        return r;
    } catch (const DegenerateInput&) {
        throw EmptyIntersection("intersection is degenerate");
    }
}

ConvexPolygon hull_union(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> pts = p.vertices();
    pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
    return make_polygon(std::move(pts));
}

namespace {
// edge angle in [-pi/2, 3pi/2), so that edges from the lexicographic minimum increase
double merge_angle(Vec2 d) {
    double th = angle_of(d);
    if (th < -M_PI / 2 + 1e-12) th += 2 * M_PI;
    return th;
}
}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    const std::size_t n = p.size(), m = q.size();
    // start each walk at the edge of smallest merge angle; vertex 0 need not be it
    auto first_edge = [](const ConvexPolygon& c) {
        std::size_t best = 0;
        double ba = merge_angle(c.vertex(1) - c[0]);
        for (std::size_t k = 1; k < c.size(); ++k) {
            double a = merge_angle(c.vertex(static_cast<std::ptrdiff_t>(k) + 1) - c[k]);
            if (a < ba) {
                ba = a;
                best = k;
            }
        }
        return static_cast<std::ptrdiff_t>(best);
    };
    const std::ptrdiff_t p0 = first_edge(p), q0 = first_edge(q);
    std::vector<Vec2> out;
    out.reserve(n + m);
    Vec2 cur = p.vertex(p0) + q.vertex(q0);
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        out.push_back(cur);
        const auto pi = p0 + static_cast<std::ptrdiff_t>(i), qj = q0 + static_cast<std::ptrdiff_t>(j);
        Vec2 ep = i < n ? p.vertex(pi + 1) - p.vertex(pi) : Vec2{};
        Vec2 eq = j < m ? q.vertex(qj + 1) - q.vertex(qj) : Vec2{};
        if (j >= m || (i < n && merge_angle(ep) <= merge_angle(eq))) {
            cur += ep;
            ++i;
        } else {
            cur += eq;
            ++j;
        }
    }
    return make_polygon(std::move(out));
}

namespace {
template <class F>
ConvexPolygon map_vertices(const ConvexPolygon& p, F f) {
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back(f(v));
    return make_polygon(std::move(out));
}
}  // namespace

ConvexPolygon negate(const ConvexPolygon& p) {
    return map_vertices(p, [](Vec2 v) { return -v; });
}

ConvexPolygon scale(const ConvexPolygon& p, double rho) {
    if (!(rho > 0.0)) throw DomainError("scale factor must be positive");
    return map_vertices(p, [rho](Vec2 v) { return v * rho; });
}

ConvexPolygon translate(const ConvexPolygon& p, Vec2 t) {
    return map_vertices(p, [t](Vec2 v) { return v + t; });
}

ConvexPolygon linear_map(const ConvexPolygon& p, const Mat2& m) {
    const double scale_m = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    if (scale_m == 0.0 || std::abs(m.det()) <= 1e-14 * scale_m * scale_m)
        throw SingularMatrix("determinant is zero");
    // make_polygon re-sorts, which also restores CCW order when det < 0
    return map_vertices(p, [&m](Vec2 v) { return m * v; });
}

bool contains_point(const ConvexPolygon& p, Vec2 x, double tol) {
    for (const auto& e : p.edges())
        if (dot(e.normal, x) > e.offset + tol) return false;
    return true;
}

bool contains(const ConvexPolygon& p, const ConvexPolygon& q, double tol) {
    for (const auto& v : q.vertices())
        if (!contains_point(p, v, tol)) return false;
    return true;
}

namespace {
double point_segment_distance(Vec2 x, Vec2 a, Vec2 b) {
    Vec2 d = b - a;
    double l2 = dot(d, d);
    double t = l2 > 0 ? std::clamp(dot(x - a, d) / l2, 0.0, 1.0) : 0.0;
    return norm(x - (a + d * t));
}
}  // namespace

double distance_to_boundary(const ConvexPolygon& p, Vec2 x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i)
        best = std::min(best, point_segment_distance(x, p[i], p.vertex(static_cast<std::ptrdiff_t>(i) + 1)));
    return best;
}

double distance_to_polygon(const ConvexPolygon& p, Vec2 x) {
    if (contains_point(p, x, 0.0)) return 0.0;
    return distance_to_boundary(p, x);
}

double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q) {
    double h = 0.0;
    for (const auto& v : p.vertices()) h = std::max(h, distance_to_polygon(q, v));
    for (const auto& v : q.vertices()) h = std::max(h, distance_to_polygon(p, v));
    return h;
}

namespace {

bool polar_less(Vec2 a, Vec2 b) {
    double ta = angle_of(a), tb = angle_of(b);
    if (ta != tb) return ta < tb;
    return norm(a) < norm(b);
}

void add_point(std::vector<Vec2>& pts, Vec2 x) {
    for (const auto& p : pts)
        if (norm(p - x) <= kEpsMerge) return;
    pts.push_back(x);
}

}  // namespace

CrossingSet boundary_intersections(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> raw;
    std::vector<Segment> segs;
    const std::size_t n = p.size(), m = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = p[i], r = p.vertex(static_cast<std::ptrdiff_t>(i) + 1) - a;
        double lr = norm(r);
        for (std::size_t j = 0; j < m; ++j) {
            Vec2 c = q[j], s = q.vertex(static_cast<std::ptrdiff_t>(j) + 1) - c;
            double ls = norm(s);
            double den = cross(r, s);
            if (std::abs(den) <= 1e-12 * lr * ls) {
                if (std::abs(cross(r, c - a)) / lr > kEpsNum) continue;
                double t0 = dot(c - a, r) / (lr * lr), t1 = dot(c + s - a, r) / (lr * lr);
                double lo = std::max(0.0, std::min(t0, t1)), hi = std::min(1.0, std::max(t0, t1));
                if ((hi - lo) * lr > kEpsMerge) {
                    Vec2 u = a + r * lo, v = a + r * hi;
                    if (lex_less(v, u)) std::swap(u, v);
                    segs.push_back({u, v});
                } else if (hi >= lo - kEpsNum / lr) {
                    raw.push_back(a + r * (0.5 * (lo + hi)));
                }
                continue;
            }
            double t = cross(c - a, s) / den, u = cross(c - a, r) / den;
            double dt = kEpsNum / lr, du = kEpsNum / ls;
            if (t >= -dt && t <= 1 + dt && u >= -du && u <= 1 + du)
                raw.push_back(a + r * std::clamp(t, 0.0, 1.0));
        }
    }
    CrossingSet out;
    for (const auto& x : raw) {
        bool on_seg = false;
        for (const auto& sg : segs)
            if (point_segment_distance(x, sg.a, sg.b) <= kEpsMerge) { on_seg = true; break; }
        if (!on_seg) add_point(out.points, x);
    }
    for (const auto& sg : segs) {
        bool dup = false;
        for (const auto& o : out.segments)
            if (norm(o.a - sg.a) <= kEpsMerge && norm(o.b - sg.b) <= kEpsMerge) { dup = true; break; }
        if (!dup) out.segments.push_back(sg);
    }
    std::sort(out.points.begin(), out.points.end(), polar_less);
    std::sort(out.segments.begin(), out.segments.end(),
              [](const Segment& x, const Segment& y) { return polar_less(x.a + x.b, y.a + y.b); });
    return out;
}

}  // namespace minkasym
