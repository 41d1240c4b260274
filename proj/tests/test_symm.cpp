#include <doctest.h>

#include "helpers.hpp"
#include "minkasym/families.hpp"
#include "minkasym/gauges.hpp"
#include "minkasym/oracles.hpp"
#include "minkasym/symm.hpp"

using namespace minkasym;
using namespace th;

namespace {

// brute-force max vertex gauge with the edge-inequality gauge
double vertex_gauge_max(const ConvexPolygon& inner, const ConvexPolygon& outer) {
    double m = 0;
    for (const auto& v : inner.vertices()) m = std::max(m, gauge_value_bruteforce(outer, v));
    return m;
}

}  // namespace

TEST_SUITE("symm") {
    TEST_CASE("symmetrization of a symmetric body") {
        auto t = symmetrize(square());
        CHECK(same_vertex_set(t.inner, square()));
        CHECK(same_vertex_set(t.outer, square()));
        CHECK(same_vertex_set(t.central, square()));
        CHECK(alpha(square()) == doctest::Approx(1));
        CHECK(tau(square()) == doctest::Approx(1));
    }

    TEST_CASE("symmetrization of the triangle") {
        auto t = symmetrize(reg_triangle());
        CHECK(t.inner.size() == 6);
        CHECK(t.outer.size() == 6);
        CHECK(t.central.size() == 6);
        CHECK(alpha(reg_triangle()) == doctest::Approx(2.0 / 3));
        CHECK(tau(reg_triangle()) == doctest::Approx(vertex_gauge_max(t.inner, t.central)));
    }

    TEST_CASE("golden house chain is strict") {
        auto gh = golden_house();
        auto t = symmetrize(translate(gh, -minkowski_asymmetry(gh).center));
        CHECK(contains(t.central, t.inner));
        CHECK(contains(t.outer, t.central));
        CHECK(hausdorff(t.inner, t.central) > 1e-3);
        CHECK(hausdorff(t.central, t.outer) > 1e-3);
        CHECK(alpha(gh) == doctest::Approx(1));
        CHECK(tau(gh) == doctest::Approx(1));
    }

    TEST_CASE("k_max(1.9)") {
        auto k = k_max(1.9);
        const double v = 1.9 / (1.9 * 1.9 - 1);
        CHECK(alpha(k) == doctest::Approx(v).epsilon(1e-9));
        CHECK(tau(k) == doctest::Approx(v).epsilon(1e-9));
        auto cs = crossing_count(k);
        CHECK(cs.points.size() == 6);
        CHECK(cs.segments.empty());
        for (const auto& p : classify_touching_points(k)) CHECK(p.tag == TouchCase::I);
    }

    TEST_CASE("k_rho(1.5, 0.72) has a case II point") {
        auto pts = classify_touching_points(k_rho(1.5, 0.72));
        bool two = false;
        for (const auto& p : pts) two = two || p.tag == TouchCase::II;
        CHECK(two);
    }

    TEST_CASE("classification needs an asymmetric body") {
        CHECK_THROWS_AS(classify_touching_points(square()), DomainError);
    }

    TEST_CASE("crossing counts of the named families") {
        CHECK(crossing_count(regular_kgon(5)).points.size() == 10);
        CHECK(crossing_count(k_t(1)).segments.size() == 2);
        CHECK(crossing_count(s_cap(1.5)).points.size() == 6);
        CHECK_THROWS_AS(crossing_count(box(1, 1, 2, 2)), DegenerateInput);
    }

    TEST_CASE("alpha and tau agree with the LP circumradius oracle") {
        for (std::size_t i = 0; i < 100; ++i) {
            auto k = random_body(12, i).body;
            CHECK(alpha(k) == doctest::Approx(oracle::alpha_lp(k)).epsilon(1e-9));
            CHECK(tau(k) == doctest::Approx(oracle::tau_lp(k)).epsilon(1e-9));
        }
    }

    TEST_CASE("planar region, alpha = 1 characterisation and tau bound on samples") {
        for (std::size_t i = 0; i < 300; ++i) {
            auto rb = random_body(13, i);
            const double s = rb.s, a = alpha(rb.body), t = tau(rb.body);
            CHECK(a >= 2 / (s + 1) - 1e-7);
            CHECK(a <= std::min(1.0, s / (s * s - 1)) + 1e-7);
            CHECK(t <= 2 * s / (s + 1) * a + 1e-7);
            const bool a1 = std::abs(a - 1) <= 1e-7;
            CHECK(a1 == (std::abs(t - 1) <= 1e-7));
            CHECK(a1 == has_antipodal_parallel_support(rb.body));
            if (s >= kPhi + 0.01) CHECK(crossing_count(rb.body).count_code() == 6);
        }
    }

    TEST_CASE("alpha and tau are linearly invariant") {
        std::mt19937_64 g(37);
        for (std::size_t i = 0; i < 30; ++i) {
            auto k = random_body(14, i).body;
            const double a = alpha(k), t = tau(k);
            for (int j = 0; j < 10; ++j) {
                auto lk = linear_map(k, random_linear_map(g));
                CHECK(alpha(lk) == doctest::Approx(a).epsilon(1e-7));
                CHECK(tau(lk) == doctest::Approx(t).epsilon(1e-7));
            }
        }
    }

    TEST_CASE("antipodal parallel support") {
        CHECK(has_antipodal_parallel_support(golden_house()));
        CHECK_FALSE(has_antipodal_parallel_support(k_max(1.9)));
        CHECK_FALSE(has_antipodal_parallel_support(triangle()));
    }
}
