#include <doctest.h>

#include <random>

#include "minkasym/lp.hpp"

using namespace minkasym;

namespace {

double objective(const Vec3& c, const Vec3& x) { return c[0] * x[0] + c[1] * x[1] + c[2] * x[2]; }

bool feasible(const std::vector<Halfspace3>& cons, const Vec3& x, double tol) {
    for (const auto& h : cons)
        if (objective(h.a, x) > h.b + tol) return false;
    return true;
}

}  // namespace

TEST_SUITE("lp") {
    TEST_CASE("unit cube corner") {
        std::vector<Halfspace3> cons;
        for (int k = 0; k < 3; ++k) {
            Vec3 a{0, 0, 0};
            a[k] = 1;
            cons.push_back({a, 1});
            a[k] = -1;
            cons.push_back({a, 1});
        }
        auto x = solve_lp3(cons, {1, 1, 1}, 100);
        REQUIRE(x);
        CHECK((*x)[0] == doctest::Approx(-1));
        CHECK((*x)[1] == doctest::Approx(-1));
        CHECK((*x)[2] == doctest::Approx(-1));
    }

    TEST_CASE("infeasible system") {
        std::vector<Halfspace3> cons{{{1, 0, 0}, -1}, {{-1, 0, 0}, -1}};
        CHECK_FALSE(solve_lp3(cons, {0, 0, 1}, 10));
        CHECK_FALSE(solve_lp3_enumerate(cons, {0, 0, 1}, 10));
    }

    TEST_CASE("lexicographic tie-breaking picks the smallest secondary value") {
        // rho >= 1 only; x and y then pushed to the box minimum -5
        std::vector<Halfspace3> cons{{{0, 0, -1}, -1}};
        auto x = solve_lp3_lex(cons, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 5);
        REQUIRE(x);
        CHECK((*x)[2] == doctest::Approx(1));
        CHECK((*x)[0] == doctest::Approx(-5));
        CHECK((*x)[1] == doctest::Approx(-5));
    }

    TEST_CASE("Seidel agrees with basis enumeration on random feasible systems") {
        std::mt19937_64 g(42);
        std::normal_distribution<double> n(0, 1);
        std::uniform_int_distribution<int> m(4, 25);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Halfspace3> cons;
            const int k = m(g);
            for (int i = 0; i < k; ++i) {
                Vec3 a{n(g), n(g), n(g)};
                cons.push_back({a, std::abs(n(g)) + 0.1});  // origin strictly feasible
            }
            const Vec3 c{n(g), n(g), n(g)};
            auto fast = solve_lp3(cons, c, 50);
            auto slow = solve_lp3_enumerate(cons, c, 50);
            REQUIRE(fast);
            REQUIRE(slow);
            CHECK(feasible(cons, *fast, 1e-7));
            CHECK(objective(c, *fast) == doctest::Approx(objective(c, *slow)).epsilon(1e-8));
        }
    }

    TEST_CASE("deterministic across calls") {
        std::vector<Halfspace3> cons{{{1, 1, 0}, 1}, {{-1, 0, 1}, 2}, {{0, -1, -1}, 3}, {{0, 0, -1}, 4}};
        auto a = solve_lp3(cons, {1, -2, 0.5}, 20), b = solve_lp3(cons, {1, -2, 0.5}, 20);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a == *b);
    }
}
