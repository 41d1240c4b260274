#include "minkasym/sampling.hpp"

#include <cmath>

#include "minkasym/gauges.hpp"

namespace minkasym {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uni(std::mt19937_64& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
int uni_int(std::mt19937_64& g, int a, int b) { return std::uniform_int_distribution<int>(a, b)(g); }

std::vector<Vec2> annulus_points(std::mt19937_64& g) {
    std::vector<Vec2> pts;
    int n = uni_int(g, 6, 14);
    for (int i = 0; i < n; ++i) {
        // uniform in the annulus 0.5 <= |x| <= 1
        double r = std::sqrt(uni(g, 0.25, 1.0));
        pts.push_back(unit_at(uni(g, 0, 2 * M_PI)) * r);
    }
    return pts;
}

std::vector<Vec2> cluster_points(std::mt19937_64& g) {
    std::vector<Vec2> pts;
    double rot = uni(g, 0, 2 * M_PI);
    double spread = std::pow(uni(g, 0.0, 1.0), 2) * 0.6;
    for (int c = 0; c < 3; ++c) {
        Vec2 ctr = unit_at(rot + 2 * M_PI * c / 3);
        int k = uni_int(g, 1, 4);
        for (int i = 0; i < k; ++i) pts.push_back(ctr + unit_at(uni(g, 0, 2 * M_PI)) * (spread * std::sqrt(uni(g, 0, 1))));
    }
    return pts;
}

std::vector<Vec2> near_symmetric_points(std::mt19937_64& g) {
    std::vector<Vec2> pts;
    int n = uni_int(g, 3, 7);
    double jitter = std::pow(uni(g, 0.0, 1.0), 2) * 0.4;
    for (int i = 0; i < n; ++i) {
        Vec2 v = unit_at(uni(g, 0, 2 * M_PI)) * std::sqrt(uni(g, 0.25, 1.0));
        pts.push_back(v + unit_at(uni(g, 0, 2 * M_PI)) * (jitter * uni(g, 0, 1)));
        pts.push_back(-v + unit_at(uni(g, 0, 2 * M_PI)) * (jitter * uni(g, 0, 1)));
    }
    return pts;
}

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
    return std::mt19937_64(splitmix(splitmix(seed) ^ (0x632be59bd9b4e019ULL * (index + 1))));
}

RandomBody random_body(std::uint64_t seed, std::size_t index) {
    auto g = sample_rng(seed, index);
    static const char* const modes[] = {"annulus", "clusters", "near_symmetric"};
    for (;;) {
        int mode = uni_int(g, 0, 2);
        std::vector<Vec2> pts = mode == 0 ? annulus_points(g) : mode == 1 ? cluster_points(g) : near_symmetric_points(g);
        const double h = uni(g, -1.0, 1.0);
        for (auto& p : pts) p = Vec2{p.x + h * p.y, p.y};
        ConvexPolygon p;
        try {
            p = make_polygon(pts);
        } catch (const DegenerateInput&) {
            continue;
        }
        if (p.area() < 1e-3) continue;
        const AsymmetryResult ar = minkowski_asymmetry(p);
        return {translate(p, -ar.center), ar.s, modes[mode], seed, index};
    }
}

std::vector<RandomBody> random_bodies(std::uint64_t seed, std::size_t n) {
    return parallel_map<RandomBody>(n, [seed](std::size_t i) { return random_body(seed, i); });
}

ConvexPolygon random_polygon(std::mt19937_64& g) {
    for (;;) {
        std::vector<Vec2> pts;
        int n = uni_int(g, 3, 12);
        Vec2 off{uni(g, -0.5, 0.5), uni(g, -0.5, 0.5)};
        for (int i = 0; i < n; ++i) pts.push_back(off + Vec2{uni(g, -1, 1), uni(g, -1, 1)});
        try {
            ConvexPolygon p = make_polygon(pts);
            if (p.area() > 1e-2) return p;
        } catch (const DegenerateInput&) {
        }
    }
}

Mat2 random_linear_map(std::mt19937_64& g) {
    for (;;) {
        Mat2 m{uni(g, -2, 2), uni(g, -2, 2), uni(g, -2, 2), uni(g, -2, 2)};
        if (std::abs(m.det()) > 0.2) return m;
    }
}

}  // namespace minkasym
