#pragma once

// Slow reference implementations, independent of the fast paths.

#include <optional>
#include <vector>

#include "minkasym/geom.hpp"

namespace minkasym::oracle {

// Jarvis march
std::vector<Vec2> hull(const std::vector<Vec2>& pts);
// all pairwise edge-line intersections satisfying both constraint sets, then hull;
// nullopt if empty
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);
ConvexPolygon hull_union(const ConvexPolygon& p, const ConvexPolygon& q);
// hull of all pairwise vertex sums
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);
// circumradius of K ∩ (-K) in the outer body with a free translation, via the generic LP
double alpha_lp(const ConvexPolygon& k);
double tau_lp(const ConvexPolygon& k);
// circumradius by basis enumeration
double circumradius_enumerate(const ConvexPolygon& k, const GaugeBody& c);

}  // namespace minkasym::oracle
