#include "minkasym/complete.hpp"

#include <algorithm>
#include <cmath>

#include "minkasym/gauges.hpp"

namespace minkasym {

namespace {

void require_symmetric(const GaugeBody& c) {
    if (!c.symmetric()) throw AsymmetricGauge("gauge body is not 0-symmetric");
}

void check_chain(const CompletenessReport& rep, double tol) {
    const double vals[] = {(rep.s + 1) * rep.r, rep.r + rep.R, (rep.s + 1) / rep.s * rep.R, rep.D};
    const auto [lo, hi] = std::minmax_element(std::begin(vals), std::end(vals));
    if (*hi - *lo > 2 * tol * rep.D)
        throw InconsistentCharacterization("pseudo-complete body violates (s+1)r = r+R = (s+1)R/s = D");
}

}  // namespace

CompletenessReport completeness_report(const ConvexPolygon& k, const GaugeBody& c, double tol) {
    CompletenessReport rep;
    is_pseudo_complete(k, c, tol, &rep);
    rep.complete = is_complete(k, c, tol);
    rep.constant_width = is_constant_width(k, c, tol);
    return rep;
}

bool is_pseudo_complete(const ConvexPolygon& k, const GaugeBody& c, double tol, CompletenessReport* report) {
    require_symmetric(c);
    CompletenessReport rep;
    rep.r = inradius(k, c).scale;
    rep.R = circumradius(k, c).scale;
    rep.D = diameter(k, c).value;
    rep.w = width(k, c).value;
    rep.s = minkowski_asymmetry(k).s;
    rep.dw_ratio = rep.D / rep.w;
    rep.pseudo_complete = std::abs(rep.r + rep.R - rep.D) <= tol * rep.D;
    if (rep.pseudo_complete) check_chain(rep, tol);
    if (report) *report = rep;
    return rep.pseudo_complete;
}

std::vector<Vec2> regular_slab_normals(const ConvexPolygon& k) {
    std::vector<Vec2> out;
    for (const auto& e : k.edges()) {
        Vec2 n = e.normal;
        // canonical sign: angle in [0, pi)
        if (n.y < 0 || (n.y == 0 && n.x < 0)) n = -n;
        if (std::abs(n.y) <= kEpsNum && n.x < 0) n = -n;
        bool dup = false;
        for (const auto& o : out)
            if (norm(o - n) <= kEpsNum || norm(o + n) <= kEpsNum) { dup = true; break; }
        if (!dup) out.push_back(n);
    }
    std::sort(out.begin(), out.end(), [](Vec2 a, Vec2 b) { return angle_of(a) < angle_of(b); });
    return out;
}

bool is_complete(const ConvexPolygon& k, const GaugeBody& c, double tol) {
    require_symmetric(c);
    const double d = diameter(k, c).value;
    for (const auto& u : regular_slab_normals(k))
        if (breadth(k, c, u) < d - tol * d) return false;
    return true;
}

bool is_constant_width(const ConvexPolygon& k, const GaugeBody& c, double tol) {
    require_symmetric(c);
    const double d = diameter(k, c).value;
    return hausdorff(minkowski_sum(k, negate(k)), scale(c.body(), d)) <= tol * d;
}

double dw_ratio(const ConvexPolygon& k, const GaugeBody& c) {
    require_symmetric(c);
    return diameter(k, c).value / width(k, c).value;
}

double euclidean_dw_bound(double d) {
    if (!(d >= std::sqrt(3.0) - 1e-12 && d < 2.0)) throw DomainError("euclidean_dw_bound needs sqrt(3) <= D < 2");
    const double den = std::sqrt(4 - d * d) * std::cos(2 * std::acos(d / 2) - std::asin(d - 1));
    if (!(den > 1e-12)) throw DomainError("euclidean_dw_bound denominator vanishes");
    return 1.0 / den;
}

double tilde_s() {
    const double q = 3 * std::sqrt(33.0);
    return (1 + std::cbrt(19 - q) + std::cbrt(19 + q)) / 3;
}

double tilde_s_bisection() {
    auto f = [](double s) { return (s + 1) / 2 - s * s / (s * s - 1); };
    double lo = (1 + std::sqrt(5.0)) / 2, hi = 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace minkasym
