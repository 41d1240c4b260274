#include <doctest.h>

#include "helpers.hpp"
#include "minkasym/families.hpp"
#include "minkasym/oracles.hpp"
#include "minkasym/polygon_io.hpp"

using namespace minkasym;
using namespace th;

TEST_SUITE("geom") {
    TEST_CASE("make_polygon drops interior points and canonicalises") {
        auto p = make_polygon({{0, 0}, {1, 0}, {0, 1}, {0.5, 0.25}});
        CHECK(p.size() == 3);
        CHECK(same_vertex_set(p, make_polygon({{0, 0}, {1, 0}, {0, 1}})));
        CHECK(p[0].x == doctest::Approx(0));
        CHECK(p.area() == doctest::Approx(0.5));
        // CCW, lexicographic start
        auto q = make_polygon({{0, 1}, {1, 0}, {0, 0}});
        CHECK(q.vertices() == p.vertices());
    }

    TEST_CASE("golden house has five vertices") {
        auto g = make_polygon({{1, 0}, {-1, 0}, {1, -1}, {-1, -1}, {0, kPhi}});
        CHECK(g.size() == 5);
    }

    TEST_CASE("collinear input is degenerate") {
        CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}, {2, 2}}), DegenerateInput);
        CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}}), DegenerateInput);
    }

    TEST_CASE("support values") {
        auto sq = square();
        auto r = support(sq, {1, 0});
        CHECK(r.value == doctest::Approx(1));
        CHECK(r.is_edge);
        CHECK(support_value(golden_house(), {0, 1}) == doctest::Approx(kPhi).epsilon(1e-12));
        CHECK(support_value(reg_triangle(), {0, -1}) == doctest::Approx(0.5));
        CHECK_FALSE(support(reg_triangle(), {0, 1}).is_edge);
    }

    TEST_CASE("support is positively homogeneous") {
        std::mt19937_64 g(7);
        for (int i = 0; i < 20; ++i) {
            auto p = random_polygon(g);
            for (auto u : random_dirs(g, 10))
                for (double rho : {0.3, 1.0, 2.5})
                    CHECK(support_value(scale(p, rho), u) == doctest::Approx(rho * support_value(p, u)));
        }
    }

    TEST_CASE("gauge values") {
        GaugeBody sq(square());
        CHECK(sq.symmetric());
        CHECK(gauge_value(sq, {0.5, -0.25}) == doctest::Approx(0.5));
        CHECK(gauge_value(sq, {0, 0}) == 0);
        GaugeBody gh(golden_house());
        CHECK_FALSE(gh.symmetric());
        CHECK(gauge_value(gh, {0, kPhi}) == doctest::Approx(1));
        CHECK_THROWS_AS(GaugeBody(box(0.5, 0.5, 1, 1)), DegenerateInput);
    }

    TEST_CASE("gauge agrees with brute force, is homogeneous and matches membership") {
        std::mt19937_64 g(11);
        std::uniform_real_distribution<double> u(-2, 2);
        for (int i = 0; i < 30; ++i) {
            auto rb = random_body(3, static_cast<std::size_t>(i));
            GaugeBody gb(rb.body);
            for (int j = 0; j < 30; ++j) {
                Vec2 x{u(g), u(g)};
                const double gv = gauge_value(gb, x);
                CHECK(gv == doctest::Approx(gauge_value_bruteforce(rb.body, x)).epsilon(1e-12));
                CHECK(gauge_value(gb, x * 2.5) == doctest::Approx(2.5 * gv));
                if (std::abs(gv - 1) > 1e-6) CHECK((gv <= 1) == contains_point(rb.body, x));
            }
        }
    }

    TEST_CASE("intersect") {
        CHECK(same_vertex_set(intersect(square(), square()), square()));
        auto hex = intersect(reg_triangle(), negate(reg_triangle()));
        CHECK(hex.size() == 6);
        for (const auto& v : hex.vertices()) CHECK(norm(v) == doctest::Approx(1 / std::sqrt(3.0)));
        CHECK_THROWS_AS(intersect(square(), translate(square(), {5, 0})), EmptyIntersection);
    }

    TEST_CASE("hull_union") {
        auto p = reg_triangle();
        CHECK(same_vertex_set(hull_union(p, p), p));
        auto hex = hull_union(p, negate(p));
        CHECK(hex.size() == 6);
        for (const auto& v : p.vertices()) {
            bool plus = false, minus = false;
            for (const auto& w : hex.vertices()) {
                plus = plus || norm(v - w) < 1e-12;
                minus = minus || norm(v + w) < 1e-12;
            }
            CHECK((plus && minus));
        }
    }

    TEST_CASE("minkowski_sum") {
        CHECK(same_vertex_set(minkowski_sum(square(), negate(square())), square(2)));
        auto diff = minkowski_sum(reg_triangle(), negate(reg_triangle()));
        CHECK(diff.size() == 6);
        CHECK(hausdorff(diff, oracle::minkowski_sum(reg_triangle(), negate(reg_triangle()))) < 1e-12);
    }

    TEST_CASE("minkowski_sum with near-vertical edges at the start") {
        // x-coordinates tie to 1e-16 on both vertical sides
        auto p = make_polygon({{-0.4618802153517011, 0.30499999999999955},
                               {-0.46188021535170065, -0.5},
                               {0.4618802153516982, -0.5},
                               {0.46188021535169815, 0.3050000000000017},
                               {6.563170278813808e-17, 0.6499999999999999}});
        auto sum = minkowski_sum(p, negate(p));
        CHECK(hausdorff(sum, oracle::minkowski_sum(p, negate(p))) < 1e-12);
        CHECK(GaugeBody(sum).symmetric());
    }

    TEST_CASE("minkowski_sum support additivity") {
        std::mt19937_64 g(5);
        for (int i = 0; i < 20; ++i) {
            auto p = random_polygon(g), q = random_polygon(g);
            auto s = minkowski_sum(p, q);
            for (auto u : random_dirs(g, 100))
                CHECK(support_value(s, u) == doctest::Approx(support_value(p, u) + support_value(q, u)).epsilon(1e-12));
        }
    }

    TEST_CASE("set operations agree with the slow oracles on random pairs") {
        std::mt19937_64 g(99);
        int nonempty = 0;
        for (int i = 0; i < 500; ++i) {
            auto p = random_polygon(g), q = random_polygon(g);
            auto slow = oracle::intersect(p, q);
            if (slow) {
                ++nonempty;
                CHECK(hausdorff(intersect(p, q), *slow) <= kEpsNum);
            } else {
                CHECK_THROWS_AS(intersect(p, q), EmptyIntersection);
            }
            CHECK(hausdorff(hull_union(p, q), oracle::hull_union(p, q)) <= kEpsNum);
        }
        CHECK(nonempty > 100);
    }

    TEST_CASE("maps") {
        CHECK(same_vertex_set(scale(square(), 2), square(2)));
        CHECK(same_vertex_set(negate(make_polygon({{0, 0}, {1, 0}, {0, 1}})), make_polygon({{0, 0}, {-1, 0}, {0, -1}})));
        CHECK_THROWS_AS(linear_map(square(), Mat2{1, 2, 2, 4}), SingularMatrix);
        CHECK_THROWS_AS(scale(square(), 0), DomainError);
        // reflection keeps CCW order
        auto t = make_polygon({{0, 0}, {2, 0}, {0, 1}});
        auto r = linear_map(t, Mat2{-1, 0, 0, 1});
        CHECK(r.area() == doctest::Approx(1));
        CHECK(same_vertex_set(r, make_polygon({{0, 0}, {-2, 0}, {0, 1}})));
    }

    TEST_CASE("containment") {
        CHECK(contains(square(), square(0.5)));
        CHECK_FALSE(contains(square(0.5), square()));
        CHECK(contains(k_max(1.9), k_min(1.9)));
    }

    TEST_CASE("boundary intersections") {
        auto self = boundary_intersections(square(), square());
        CHECK(self.points.empty());
        CHECK(self.segments.size() == 4);

        auto pent = regular_kgon(5);
        CHECK(boundary_intersections(pent, negate(pent)).points.size() == 10);

        auto kt = k_t(1);
        auto cs = boundary_intersections(kt, negate(kt));
        CHECK(cs.segments.size() == 2);
        for (const auto& s : cs.segments) {
            CHECK(std::abs(s.a.x) == doctest::Approx(1));
            CHECK(s.a.x == doctest::Approx(s.b.x));
        }
        CHECK(cs.count_code() == -1);
    }

    TEST_CASE("boundary intersections are symmetric in their arguments") {
        for (std::size_t i = 0; i < 50; ++i) {
            auto k = random_body(21, i).body;
            auto a = boundary_intersections(k, negate(k));
            auto b = boundary_intersections(negate(k), k);
            REQUIRE(a.points.size() == b.points.size());
            REQUIRE(a.segments.size() == b.segments.size());
            for (const auto& p : a.points) {
                bool hit = false;
                for (const auto& q : b.points) hit = hit || norm(p - q) <= kEpsMerge;
                CHECK(hit);
            }
        }
    }

    TEST_CASE("convex_hull against Jarvis march") {
        std::mt19937_64 g(3);
        std::normal_distribution<double> n(0, 1);
        for (int i = 0; i < 50; ++i) {
            std::vector<Vec2> pts;
            for (int j = 0; j < 40; ++j) pts.push_back({n(g), n(g)});
            auto a = make_polygon(convex_hull(pts));
            auto b = make_polygon(oracle::hull(pts));
            CHECK(same_vertex_set(a, b));
        }
    }

    TEST_CASE("polygon JSON round trip") {
        auto p = golden_house();
        auto q = parse_polygon_json(polygon_to_json(p));
        CHECK(same_vertex_set(p, q, 1e-15));
        CHECK_THROWS_AS(parse_polygon_json("{\"vertices\": 3}"), ParseError);
        CHECK_THROWS_AS(parse_polygon_json("not json"), ParseError);
        CHECK_THROWS_AS(read_polygon_file("/nonexistent/poly.json"), IOError);
    }
}
