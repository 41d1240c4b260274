#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minkasym/geom.hpp"

namespace minkasym {

struct RandomBody {
    ConvexPolygon body;  // translated to its Minkowski center
    double s = 1;
    std::string mode;
    std::uint64_t seed = 0;
    std::size_t index = 0;
};

// Each index gets its own generator, so samples can be built in any order.
std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index);
RandomBody random_body(std::uint64_t seed, std::size_t index);
std::vector<RandomBody> random_bodies(std::uint64_t seed, std::size_t n);

// unconstrained polygon, not centered
ConvexPolygon random_polygon(std::mt19937_64& rng);
Mat2 random_linear_map(std::mt19937_64& rng);

// runs f(i) for i in [0, n) on a small thread pool; results land by index
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F f);

}  // namespace minkasym

#include "minkasym/detail/parallel.hpp"
