#include <doctest.h>

#include "helpers.hpp"
#include "minkasym/families.hpp"
#include "minkasym/gauges.hpp"
#include "minkasym/lp.hpp"
#include "minkasym/oracles.hpp"
#include "minkasym/symm.hpp"

using namespace minkasym;
using namespace th;

namespace {

// K ⊆ t + rho C
bool fits(const ConvexPolygon& k, const ConvexPolygon& c, double rho, Vec2 t, double tol = 1e-9) {
    for (const auto& e : c.edges())
        if (support_value(k, e.normal) > rho * e.offset + dot(e.normal, t) + tol) return false;
    return true;
}

// some t with K ⊆ t + rho C, decided by an independent LP in t alone
bool fits_somewhere(const ConvexPolygon& k, const ConvexPolygon& c, double rho) {
    std::vector<Halfspace3> cons;
    for (const auto& e : c.edges())
        cons.push_back({{-e.normal.x, -e.normal.y, 0}, rho * e.offset - support_value(k, e.normal)});
    return solve_lp3(cons, {0, 0, 0}, 1e4).has_value();
}

ConvexPolygon random_symmetric(std::mt19937_64& g) {
    auto p = random_polygon(g);
    return minkowski_sum(p, negate(p));
}

std::vector<Vec2> normals_of(const ContainmentResult& r) {
    std::vector<Vec2> out;
    for (const auto& t : r.touching) out.push_back(t.normal);
    return out;
}

}  // namespace

TEST_SUITE("gauges") {
    TEST_CASE("breadth") {
        GaugeBody sq(square());
        CHECK(breadth(square(), sq, {1, 0}) == doctest::Approx(2));
        CHECK(breadth(box(0, 0, 2, 1), sq, {0, 1}) == doctest::Approx(1));
        auto S = reg_triangle();
        auto K = intersect(S, scale(negate(S), 2));
        GaugeBody C(intersect(S, negate(S)));
        CHECK(breadth(K, C, S[0]) == doctest::Approx(3));
        CHECK_THROWS_AS(breadth(square(), GaugeBody(reg_triangle()), {1, 0}), AsymmetricGauge);
    }

    TEST_CASE("width and diameter") {
        GaugeBody sq(square());
        CHECK(width(square(), sq).value == doctest::Approx(2));
        auto w = width(box(0, 0, 2, 1), sq);
        CHECK(w.value == doctest::Approx(1));
        CHECK(std::abs(w.direction.y) == doctest::Approx(1));
        auto d = diameter(square(), sq);
        CHECK(d.value == doctest::Approx(2));
        CHECK(norm(d.x - d.y) == doctest::Approx(2 * std::sqrt(2.0)));
        auto S = reg_triangle();
        auto K = intersect(S, scale(negate(S), 2));
        GaugeBody C(intersect(S, negate(S)));
        CHECK(diameter(K, C).value == doctest::Approx(3));
    }

    TEST_CASE("hood width and diameter against the disk") {
        auto h = hood(4096);
        CHECK(std::abs(width(h.body, h.disk).value - 2 * 0.7935) <= 2e-3);
        CHECK(std::abs(diameter(h.body, h.disk).value - (h.r + 1)) <= 1e-3);
    }

    TEST_CASE("circumradius examples") {
        CHECK(circumradius(square(), GaugeBody(square(2))).scale == doctest::Approx(0.5));
        auto S = reg_triangle();
        auto rs = circumradius(S, GaugeBody(S));
        CHECK(rs.scale == doctest::Approx(1));
        CHECK(norm(rs.translation) < 1e-9);
        auto tri = triangle();
        auto inner = intersect(tri, negate(tri)), outer = hull_union(tri, negate(tri));
        CHECK(circumradius(inner, GaugeBody(outer)).scale == doctest::Approx(2.0 / 3));
    }

    TEST_CASE("inradius examples") {
        CHECK(inradius(square(2), GaugeBody(square())).scale == doctest::Approx(2));
        auto S = reg_triangle();
        CHECK(inradius(S, GaugeBody(negate(S))).scale == doctest::Approx(0.5));
        auto h = hood(4096);
        CHECK(std::abs(inradius(h.body, h.disk).scale - 0.7935) <= 1e-3);
    }

    TEST_CASE("circumradius against basis enumeration") {
        std::mt19937_64 g(17);
        for (std::size_t i = 0; i < 40; ++i) {
            auto k = random_body(8, i).body;
            GaugeBody c(random_symmetric(g));
            CHECK(circumradius(k, c).scale == doctest::Approx(oracle::circumradius_enumerate(k, c)).epsilon(1e-9));
        }
    }

    TEST_CASE("LP optimality by perturbation and certificate validity") {
        std::mt19937_64 g(23);
        for (std::size_t i = 0; i < 200; ++i) {
            const auto k = random_body(9, i).body;
            const auto cp = random_symmetric(g);
            const GaugeBody c(cp);

            const auto R = circumradius(k, c);
            CHECK(fits(k, cp, R.scale + 1e-6, R.translation));
            CHECK_FALSE(fits_somewhere(k, cp, R.scale - 1e-6));
            CHECK(origin_distance_to_hull(normals_of(R)) <= kEpsCert);

            const auto r = inradius(k, c);
            CHECK(fits(translate(scale(cp, r.scale - 1e-6), r.translation), k, 1, {0, 0}));
            CHECK_FALSE(fits_somewhere(scale(cp, r.scale + 1e-6), k, 1));
            CHECK(origin_distance_to_hull(normals_of(r)) <= kEpsCert);

            const auto a = minkowski_asymmetry(k);
            const Vec2 t = a.center * (1 + a.s);
            CHECK(fits(k, negate(k), a.s + 1e-6, t));
            if (a.s > 1 + 1e-5) CHECK_FALSE(fits_somewhere(k, negate(k), a.s - 1e-6));
        }
    }

    TEST_CASE("radii chain and diameter by breadth") {
        std::mt19937_64 g(29);
        for (std::size_t i = 0; i < 500; ++i) {
            const auto rb = random_body(10, i);
            const GaugeBody c(random_symmetric(g));
            const double s = rb.s;
            const double r = inradius(rb.body, c).scale, R = circumradius(rb.body, c).scale;
            const double w = width(rb.body, c).value, D = diameter(rb.body, c).value;
            const double tol = 1e-7 * D;
            CHECK(w / 2 <= (s + 1) / 2 * r + tol);
            CHECK((s + 1) / 2 * r <= (r + R) / 2 + tol);
            CHECK((r + R) / 2 <= (s + 1) / (2 * s) * R + tol);
            CHECK((s + 1) / (2 * s) * R <= D / 2 + tol);
            CHECK(diameter_by_breadth(rb.body, c) == doctest::Approx(D).epsilon(kEpsNum));
        }
    }

    TEST_CASE("minkowski asymmetry examples") {
        auto sq = translate(square(), {3, 1});
        auto a = minkowski_asymmetry(sq);
        CHECK(a.s == doctest::Approx(1));
        CHECK(a.center.x == doctest::Approx(3));
        CHECK(a.center.y == doctest::Approx(1));
        CHECK(minkowski_asymmetry(triangle()).s == doctest::Approx(2));
        CHECK(minkowski_asymmetry(k_t(1)).s == doctest::Approx(1.5));
    }

    TEST_CASE("asymmetry points of the triangle are the edge midpoints") {
        auto S = reg_triangle();
        auto a = minkowski_asymmetry(S);
        REQUIRE(a.asym_points.size() == 3);
        for (const auto& p : S.vertices()) {
            bool hit = false;
            for (const auto& q : a.asym_points) hit = hit || norm(q + p / 2) < 1e-7;
            CHECK(hit);
        }
    }

    TEST_CASE("asymmetry is affine invariant and scales equivariantly") {
        std::mt19937_64 g(31);
        for (std::size_t i = 0; i < 50; ++i) {
            auto k = random_body(11, i);
            auto moved = translate(scale(k.body, 2.5), {-1.5, 0.7});
            CHECK(minkowski_asymmetry(moved).s == doctest::Approx(k.s).epsilon(1e-9));
            const GaugeBody c(random_symmetric(g));
            CHECK(circumradius(scale(k.body, 1.7), c).scale ==
                  doctest::Approx(1.7 * circumradius(k.body, c).scale).epsilon(1e-9));
        }
    }

    TEST_CASE("well spread triples") {
        auto t = well_spread_triple(golden_house());
        CHECK(origin_distance_to_hull({t.points[0], t.points[1], t.points[2]}) == 0);
        CHECK(origin_distance_to_hull({t.normals[0], t.normals[1], t.normals[2]}) <= kEpsCert);
        CHECK_THROWS_AS(well_spread_triple(square()), NoTriple);
    }

    TEST_CASE("spanning normals") {
        CHECK(spanning_normals({{1, 0}, {0, 1}, {-1, 0}}).size() == 2);
        auto tri = spanning_normals({unit_at(0.1), unit_at(2.2), unit_at(4.3), unit_at(0.5)});
        CHECK(tri.size() == 3);
        CHECK(spanning_normals({unit_at(0.1), unit_at(0.5), unit_at(1.0)}).empty());
    }
}
