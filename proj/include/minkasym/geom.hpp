#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minkasym/errors.hpp"
#include "minkasym/vec2.hpp"

namespace minkasym {

struct Edge {
    Vec2 normal;    // outer unit normal
    double offset;  // support value in direction of normal
};

// Strictly convex CCW polygon; vertex 0 is the lexicographic minimum.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    const std::vector<Vec2>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return verts_.size(); }
    const Vec2& operator[](std::size_t i) const { return verts_[i]; }
    const Vec2& vertex(std::ptrdiff_t i) const;  // cyclic index
    double area() const;
    Vec2 vertex_centroid() const;

private:
    friend ConvexPolygon make_polygon(std::vector<Vec2> points);
    std::vector<Vec2> verts_;
    std::vector<Edge> edges_;  // edge i joins vertex i and i+1
};

ConvexPolygon make_polygon(std::vector<Vec2> points);

class GaugeBody {
public:
    GaugeBody() = default;
    // Throws DegenerateInput if the origin is not interior. The symmetric flag
    // is detected, never trusted from the caller.
    explicit GaugeBody(ConvexPolygon body);

    const ConvexPolygon& body() const { return body_; }
    bool symmetric() const { return symmetric_; }
    double gauge(Vec2 x) const;

private:
    ConvexPolygon body_;
    bool symmetric_ = false;
    std::vector<double> fan_;  // vertex angles, rotated so they increase
    std::size_t fan_start_ = 0;
};

struct SupportResult {
    double value;
    bool is_edge;       // true if two consecutive vertices tie
    std::size_t index;  // vertex index, or edge index when is_edge
};

SupportResult support(const ConvexPolygon& p, Vec2 u);
double support_value(const ConvexPolygon& p, Vec2 u);
Vec2 support_point(const ConvexPolygon& p, Vec2 u);

double gauge_value(const GaugeBody& p, Vec2 x);
// max over edges of (a.x)/b; requires origin interior but skips the fan lookup
double gauge_value_bruteforce(const ConvexPolygon& p, Vec2 x);

ConvexPolygon intersect(const ConvexPolygon& p, const ConvexPolygon& q);
ConvexPolygon hull_union(const ConvexPolygon& p, const ConvexPolygon& q);
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

ConvexPolygon negate(const ConvexPolygon& p);
ConvexPolygon scale(const ConvexPolygon& p, double rho);
ConvexPolygon translate(const ConvexPolygon& p, Vec2 t);
ConvexPolygon linear_map(const ConvexPolygon& p, const Mat2& m);

bool contains(const ConvexPolygon& p, const ConvexPolygon& q, double tol = kEpsNum);
bool contains_point(const ConvexPolygon& p, Vec2 x, double tol = kEpsNum);

double distance_to_polygon(const ConvexPolygon& p, Vec2 x);  // 0 inside
double distance_to_boundary(const ConvexPolygon& p, Vec2 x);
double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q);

struct Segment {
    Vec2 a, b;
};

struct CrossingSet {
    std::vector<Vec2> points;
    std::vector<Segment> segments;

    // points plus segments, each segment one component
    std::size_t components() const { return points.size() + segments.size(); }
    // the encoding used in CSV output: -1 whenever a segment exists
    int count_code() const {
        return segments.empty() ? static_cast<int>(points.size()) : -1;
    }
};

CrossingSet boundary_intersections(const ConvexPolygon& p, const ConvexPolygon& q);

std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

}  // namespace minkasym
