#pragma once

#include <map>
#include <string>

#include "minkasym/geom.hpp"

namespace minkasym {

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

ConvexPolygon triangle();
ConvexPolygon golden_house();
ConvexPolygon k_t(double t);
ConvexPolygon regular_kgon(int k);
ConvexPolygon s_cap(double s);
ConvexPolygon k_min(double s);
ConvexPolygon k_max(double s);
ConvexPolygon k_rho(double rho1, double rho2);
double k_rho_lower(double rho1);

// Below this asymmetry the two-step line rotation no longer keeps s fixed,
// and interpolate() switches to a Minkowski-combination path.
inline constexpr double kRotationMinS = 1.25;
ConvexPolygon interpolate(double s, double t);

struct HoodModel {
    double r;
    ConvexPolygon body;
    GaugeBody disk;
};
double hood_radius();            // closed form
double hood_radius_bisection();  // root of r^4 + 4r^3 + 6r^2 - 4r - 3
HoodModel hood(int m);

GaugeBody c_lambda(const ConvexPolygon& k, double lambda);

// CLI-facing constructors
struct FamilySpec {
    std::string name;
    std::map<std::string, double> params;
};
ConvexPolygon make_family(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);

}  // namespace minkasym
