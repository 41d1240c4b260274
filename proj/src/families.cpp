#include "minkasym/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "minkasym/gauges.hpp"
#include "minkasym/symm.hpp"

namespace minkasym {

namespace {

const Vec2 kP1{0.0, 1.0};
const Vec2 kP2{std::sqrt(3.0) / 2.0, -0.5};
const Vec2 kP3{-std::sqrt(3.0) / 2.0, -0.5};

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

struct Halfplane {
    Vec2 n;
    double c;  // n.x <= c
};

ConvexPolygon clip_halfplanes(const std::vector<Halfplane>& hs) {
    const double big = 1e3;
    std::vector<Vec2> cur{{-big, -big}, {big, -big}, {big, big}, {-big, big}};
    for (const auto& h : hs) {
        std::vector<Vec2> next;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            Vec2 a = cur[i], b = cur[(i + 1) % cur.size()];
            double da = dot(h.n, a) - h.c, db = dot(h.n, b) - h.c;
            if (da <= 0) next.push_back(a);
            if ((da < 0 && db > 0) || (da > 0 && db < 0)) next.push_back(a + (b - a) * (da / (da - db)));
        }
        cur = std::move(next);
    }
    return make_polygon(std::move(cur));
}

Vec2 rotate_toward(Vec2 from, Vec2 to, double f) {
    double a0 = angle_of(from), a1 = angle_of(to);
    double d = std::remainder(a1 - a0, 2 * M_PI);
    return unit_at(a0 + f * d);
}

// two-step rotation of edge lines of S ∩ (-sS)
ConvexPolygon interpolate_rotation(double s, double t) {
    const Vec2 p[3] = {kP1, kP2, kP3};
    std::vector<Halfplane> plus(3), minus(3);
    for (int i = 0; i < 3; ++i) {
        plus[i] = {p[i], s / 2};
        minus[i] = {-p[i], 0.5};
    }
    const double a = (2 * s - 1) / (2 * std::sqrt(3.0));
    const Vec2 q[3] = {{}, {a, -0.5}, {-a, -0.5}};
    const Vec2 target1[3] = {{}, {1, 0}, {-1, 0}};
    const double f1 = 2 * std::min(t, 0.5);
    const double f2 = 2 * std::max(t - 0.5, 0.0);
    const Vec2 apex = kP1 * (s / 2);
    for (int i = 1; i <= 2; ++i) {
        Vec2 n = rotate_toward(p[i], target1[i], f1);
        plus[i] = {n, dot(n, q[i])};
        Vec2 piv = -q[i] / s;
        Vec2 d = apex - piv;
        Vec2 nf = normalized(Vec2{d.y, -d.x});
        if (dot(nf, -piv) > 0) nf = -nf;
        Vec2 m = rotate_toward(-p[i], nf, f2);
        minus[i] = {m, dot(m, piv)};
    }
    std::vector<Halfplane> hs = plus;
    hs.insert(hs.end(), minus.begin(), minus.end());
    return clip_halfplanes(hs);
}

// k_max(s) mapped linearly so its asymmetry normals match those of S ∩ (-sS)
ConvexPolygon normalized_kmax(double s) {
    const ConvexPolygon b = k_max(s);
    const auto contacts = asymmetry_contacts(b, s);
    for (std::size_t i = 0; i < contacts.size(); ++i)
        for (std::size_t j = i + 1; j < contacts.size(); ++j)
            for (std::size_t k = j + 1; k < contacts.size(); ++k) {
                Vec2 a1 = contacts[i].normal, a2 = contacts[j].normal, a3 = contacts[k].normal;
                // l1 a1 + l2 a2 = -a3
                double det = cross(a1, a2);
                if (std::abs(det) < 1e-9) continue;
                double l1 = cross(-a3, a2) / det, l2 = cross(a1, -a3) / det;
                if (l1 <= 1e-9 || l2 <= 1e-9) continue;
                // N (l1 a1) = -p1, N (l2 a2) = -p2
                Mat2 src{l1 * a1.x, l2 * a2.x, l1 * a1.y, l2 * a2.y};
                Mat2 dst{-kP1.x, -kP2.x, -kP1.y, -kP2.y};
                Mat2 n = dst * src.inverse();
                return linear_map(b, n.inverse().transpose());
            }
    throw DomainError("k_max has no spanning asymmetry triple");
}

ConvexPolygon combine(const ConvexPolygon& a, const ConvexPolygon& b, double lam) {
    if (lam <= 0.0) return a;
    if (lam >= 1.0) return b;
    return minkowski_sum(scale(a, 1.0 - lam), scale(b, lam));
}

ConvexPolygon interpolate_combination(double s, double t) {
    const ConvexPolygon a = s_cap(s);
    const ConvexPolygon b = normalized_kmax(s);
    if (t >= 1.0) return b;
    // reparametrise so alpha moves linearly in t
    const double a0 = alpha(a), a1 = alpha(b);
    const double target = a0 + t * (a1 - a0);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 50; ++it) {
        double mid = 0.5 * (lo + hi);
        if (alpha(combine(a, b, mid)) < target) lo = mid;
        else hi = mid;
    }
    return combine(a, b, 0.5 * (lo + hi));
}

}  // namespace

ConvexPolygon triangle() { return make_polygon({kP1, kP2, kP3}); }

ConvexPolygon golden_house() { return make_polygon({{1, 0}, {-1, 0}, {1, -1}, {-1, -1}, {0, kPhi}}); }

ConvexPolygon k_t(double t) {
    require(t >= 0.0 && t < kPhi, "k_t needs 0 <= t < phi");
    const double s = (t + std::sqrt(9 * t * t + 12 * t + 4)) / (2 * (t + 1));
    const Vec2 xt{0.0, (t - s) / (s + 1)};
    return translate(make_polygon({{1, 0}, {-1, 0}, {1, -1}, {-1, -1}, {0, t}}), -xt);
}

ConvexPolygon regular_kgon(int k) {
    require(k >= 5 && k % 2 == 1, "regular_kgon needs odd k >= 5");
    std::vector<Vec2> v;
    for (int i = 0; i < k; ++i) v.push_back(unit_at(M_PI / 2 + 2 * M_PI * i / k));
    return make_polygon(std::move(v));
}

ConvexPolygon s_cap(double s) {
    require(s >= 1.0 && s <= 2.0, "s_cap needs 1 <= s <= 2");
    const ConvexPolygon tri = triangle();
    return intersect(tri, scale(negate(tri), s));
}

ConvexPolygon k_max(double s) {
    require(s >= 1.0 && s <= 2.0, "k_max needs 1 <= s <= 2");
    const double y = s * (s * s - s - 1);
    return make_polygon({{1, y}, {-1, y}, {0, -s * s}, {1, s}, {-1, s}});
}

ConvexPolygon k_min(double s) {
    require(s > kPhi && s <= 2.0, "k_min needs phi < s <= 2");
    const double x = s / (s * s - 1);
    return make_polygon({{x, 0}, {-x, 0}, {0, -s * s}, {1, s}, {-1, s}});
}

double k_rho_lower(double rho1) { return (rho1 * rho1 - rho1 + 1) / (rho1 + 1); }

ConvexPolygon k_rho(double rho1, double rho2) {
    require(rho1 >= 1.0 && rho1 <= 2.0, "k_rho needs 1 <= rho1 <= 2");
    require(rho2 >= k_rho_lower(rho1) - 1e-12 && rho2 <= rho1 / 2 + 1e-12, "(rho1, rho2) outside domain D");
    const ConvexPolygon tri = triangle();
    return hull_union(intersect(negate(tri), scale(tri, rho1)), scale(tri, rho2));
}

ConvexPolygon interpolate(double s, double t) {
    require(s >= 1.0 && s <= 2.0, "interpolate needs 1 <= s <= 2");
    require(t >= 0.0 && t <= 1.0, "interpolate needs 0 <= t <= 1");
    if (t == 0.0 || s == 1.0) return s_cap(s);
    if (s >= kRotationMinS) return interpolate_rotation(s, t);
    return interpolate_combination(s, t);
}

double hood_radius() {
    const double q = std::sqrt(69.0);
    const double t = std::cbrt(32.0 / 9.0) * (std::cbrt(9 + q) + std::cbrt(9 - q));
    const double st = std::sqrt(t);
    return st / 2 - 1 + 0.5 * std::sqrt(16 / st - t);
}

double hood_radius_bisection() {
    auto f = [](double r) { return (((r + 4) * r + 6) * r - 4) * r - 3; };
    double lo = 0.5, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

HoodModel hood(int m) {
    require(m >= 64, "hood needs m >= 64");
    const double r = hood_radius();
    const double h = std::sqrt(1 - r * r);
    std::vector<Vec2> pts{{0, 1}, {r, -h}, {-r, -h}};
    std::vector<Vec2> disk;
    for (int i = 0; i < m; ++i) {
        Vec2 u = unit_at(2 * M_PI * i / m);
        pts.push_back(u * r);
        disk.push_back(u);
    }
    return {r, make_polygon(std::move(pts)), GaugeBody(make_polygon(std::move(disk)))};
}

GaugeBody c_lambda(const ConvexPolygon& k, double lambda) {
    require(lambda >= 0.0 && lambda <= 1.0, "c_lambda needs 0 <= lambda <= 1");
    const double s = minkowski_asymmetry(k).s;
    const SymmetrizationTriple tr = symmetrize(k);
    const double w = lambda * (s + 1) / 2;
    if (lambda == 0.0) return GaugeBody(tr.central);
    if (lambda == 1.0) return GaugeBody(scale(tr.inner, w));
    return GaugeBody(minkowski_sum(scale(tr.central, 1 - lambda), scale(tr.inner, w)));
}

namespace {
double param(const FamilySpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) throw DomainError("family " + spec.name + " needs parameter " + key);
    return it->second;
}
}  // namespace

ConvexPolygon make_family(const FamilySpec& spec) {
    const std::string& n = spec.name;
    if (n == "triangle") return triangle();
    if (n == "golden_house") return golden_house();
    if (n == "k_t") return k_t(param(spec, "t"));
    if (n == "regular_kgon") {
        double k = param(spec, "k");
        if (k != std::floor(k)) throw DomainError("k must be an integer");
        return regular_kgon(static_cast<int>(k));
    }
    if (n == "s_cap") return s_cap(param(spec, "s"));
    if (n == "k_min") return k_min(param(spec, "s"));
    if (n == "k_max") return k_max(param(spec, "s"));
    if (n == "k_rho") return k_rho(param(spec, "rho1"), param(spec, "rho2"));
    if (n == "interpolate") return interpolate(param(spec, "s"), param(spec, "t"));
    if (n == "hood") {
        auto it = spec.params.find("m");
        return hood(it == spec.params.end() ? 4096 : static_cast<int>(it->second)).body;
    }
    throw DomainError("unknown family " + n);
}

std::string describe(const FamilySpec& spec) {
    std::string out;
    for (const auto& [k, v] : spec.params) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s=%.10g", out.empty() ? "" : ";", k.c_str(), v);
        out += buf;
    }
    return out;
}

}  // namespace minkasym
