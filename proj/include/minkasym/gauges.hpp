#pragma once

#include <array>
#include <vector>

#include "minkasym/geom.hpp"

namespace minkasym {

struct Touch {
    Vec2 point;   // on the boundary of the outer body
    Vec2 normal;  // outer unit normal there
};

struct ContainmentResult {
    double scale = 0.0;
    Vec2 translation;
    std::vector<Touch> touching;  // 2 or 3 entries, normals hull the origin
};

struct AsymmetryResult {
    double s = 1.0;
    Vec2 center;
    std::vector<Vec2> asym_points;  // relative to the centered body K - center
};

struct WellSpreadTriple {
    std::array<Vec2, 3> points;
    std::array<Vec2, 3> normals;
};

struct Extent {
    double value;
    Vec2 direction;
};

struct DiameterResult {
    double value;
    Vec2 x, y;
};

double breadth(const ConvexPolygon& k, const GaugeBody& c, Vec2 u);
Extent width(const ConvexPolygon& k, const GaugeBody& c);
DiameterResult diameter(const ConvexPolygon& k, const GaugeBody& c);
// max breadth over the merged normal fan; equals diameter()
double diameter_by_breadth(const ConvexPolygon& k, const GaugeBody& c);

ContainmentResult circumradius(const ConvexPolygon& k, const GaugeBody& c);
ContainmentResult inradius(const ConvexPolygon& k, const GaugeBody& c);
AsymmetryResult minkowski_asymmetry(const ConvexPolygon& k);
WellSpreadTriple well_spread_triple(const ConvexPolygon& k);

// Contacts of bd(K) with bd(-K/s) for K already centered; each with the
// outer normal of K at that point.
std::vector<Touch> asymmetry_contacts(const ConvexPolygon& k, double s);

// Picks two antipodal or three normals whose hull contains the origin, in
// polar-angle order. Returns indices into `normals`, empty if none exist.
std::vector<std::size_t> spanning_normals(const std::vector<Vec2>& normals);
double origin_distance_to_hull(const std::vector<Vec2>& pts);

}  // namespace minkasym
