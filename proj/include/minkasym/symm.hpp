#pragma once

#include <vector>

#include "minkasym/geom.hpp"

namespace minkasym {

struct SymmetrizationTriple {
    ConvexPolygon inner;    // K ∩ (-K)
    ConvexPolygon outer;    // conv(K ∪ -K)
    ConvexPolygon central;  // (K - K) / 2
};

SymmetrizationTriple symmetrize(const ConvexPolygon& k);

double alpha(const ConvexPolygon& k);
double tau(const ConvexPolygon& k);
double alpha(const SymmetrizationTriple& t);
double tau(const SymmetrizationTriple& t);

CrossingSet crossing_count(const ConvexPolygon& k);

enum class TouchCase { I, II };

struct ClassifiedPoint {
    Vec2 point;
    TouchCase tag;
};

std::vector<ClassifiedPoint> classify_touching_points(const ConvexPolygon& k);

// p, -p on bd(K) with parallel supporting lines there; candidates are taken
// from bd(K) ∩ bd(-K).
bool has_antipodal_parallel_support(const ConvexPolygon& k, double tol = 1e-7);

}  // namespace minkasym
