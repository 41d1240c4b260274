#pragma once

#include <vector>

#include "minkasym/geom.hpp"

namespace minkasym {

inline constexpr double kTolExact = 1e-6;
inline constexpr double kTolApprox = 1e-3;

struct CompletenessReport {
    double r = 0, R = 0, D = 0, w = 0, s = 1;
    bool pseudo_complete = false;
    bool complete = false;
    bool constant_width = false;
    double dw_ratio = 1;
};

// Fills every field; throws InconsistentCharacterization when the body is
// pseudo-complete but the equivalent (s+1)r = r+R = (s+1)R/s chain fails.
CompletenessReport completeness_report(const ConvexPolygon& k, const GaugeBody& c, double tol = kTolExact);

bool is_pseudo_complete(const ConvexPolygon& k, const GaugeBody& c, double tol = kTolExact,
                        CompletenessReport* report = nullptr);
std::vector<Vec2> regular_slab_normals(const ConvexPolygon& k);
bool is_complete(const ConvexPolygon& k, const GaugeBody& c, double tol = kTolExact);
bool is_constant_width(const ConvexPolygon& k, const GaugeBody& c, double tol = kTolExact);
double dw_ratio(const ConvexPolygon& k, const GaugeBody& c);

double euclidean_dw_bound(double d);
double tilde_s();
double tilde_s_bisection();

}  // namespace minkasym
