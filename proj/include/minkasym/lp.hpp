#pragma once

#include <array>
#include <optional>
#include <vector>

namespace minkasym {

using Vec3 = std::array<double, 3>;

struct Halfspace3 {
    Vec3 a;
    double b;  // a.x <= b
};

// Seidel's randomized incremental LP in three variables, inside the box
// |x_k| <= box. The shuffle uses a fixed seed, so results are reproducible.
// Returns nullopt when infeasible.
std::optional<Vec3> solve_lp3(const std::vector<Halfspace3>& cons, const Vec3& c, double box);

// Lexicographic minimisation: objective k is optimised with objectives < k
// pinned to their optimum (plus a relative slack of 1e-12).
std::optional<Vec3> solve_lp3_lex(const std::vector<Halfspace3>& cons, const std::vector<Vec3>& objectives,
                                  double box);

// Exhaustive basis enumeration over constraint triples. O(m^4); for small
// instances and as an independent reference.
std::optional<Vec3> solve_lp3_enumerate(const std::vector<Halfspace3>& cons, const Vec3& c, double box);

}  // namespace minkasym
