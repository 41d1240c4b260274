#include "minkasym/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

namespace minkasym {

namespace {

// Constraint in up to three variables; only the first d entries are used.
struct Row {
    double a[3];
    double b;
};

double feas_tol(const Row& r, int d, const double* x) {
    double s = std::abs(r.b);
    for (int k = 0; k < d; ++k) s += std::abs(r.a[k] * x[k]);
    return 1e-11 * (1.0 + s);
}

bool violates(const Row& r, int d, const double* x) {
    double v = 0.0;
    for (int k = 0; k < d; ++k) v += r.a[k] * x[k];
    return v > r.b + feas_tol(r, d, x);
}

bool solve1(const std::vector<Row>& rows, double c, double box, double* x) {
    double lo = -box, hi = box;
    for (const auto& r : rows) {
        double a = r.a[0];
        if (std::abs(a) <= 1e-14) {
            if (r.b < -1e-11 * (1.0 + std::abs(r.b))) return false;
            continue;
        }
        if (a > 0) hi = std::min(hi, r.b / a);
        else lo = std::max(lo, r.b / a);
    }
    if (lo > hi) {
        if (lo - hi > 1e-10 * (1.0 + std::abs(lo) + std::abs(hi))) return false;
        x[0] = 0.5 * (lo + hi);
        return true;
    }
    x[0] = c < 0 ? hi : lo;
    return true;
}

// rows are consumed in order; the caller shuffles
bool seidel(const std::vector<Row>& rows, int d, const double* c, double box, double* x) {
    if (d == 1) return solve1(rows, c[0], box, x);
    for (int k = 0; k < d; ++k) x[k] = c[k] < 0 ? box : -box;
    std::vector<Row> sub;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& h = rows[i];
        if (!violates(h, d, x)) continue;
        int piv = 0;
        for (int k = 1; k < d; ++k)
            if (std::abs(h.a[k]) > std::abs(h.a[piv])) piv = k;
        if (std::abs(h.a[piv]) <= 1e-14) return false;  // 0.x <= b with b < 0
        // eliminate x_piv = (h.b - sum_{k != piv} h.a[k] x_k) / h.a[piv]
        auto reduce = [&](const Row& r) {
            Row o{};
            double f = r.a[piv] / h.a[piv];
            int j = 0;
            for (int k = 0; k < d; ++k)
                if (k != piv) o.a[j++] = r.a[k] - f * h.a[k];
            o.b = r.b - f * h.b;
            return o;
        };
        sub.clear();
        sub.reserve(i + 2 * d);
        // the original box, as explicit rows in the reduced space
        for (int k = 0; k < d; ++k) {
            Row up{}, dn{};
            up.a[k] = 1.0; up.b = box;
            dn.a[k] = -1.0; dn.b = box;
            sub.push_back(reduce(up));
            sub.push_back(reduce(dn));
        }
        for (std::size_t j = 0; j < i; ++j) sub.push_back(reduce(rows[j]));
        double cr[3];
        {
            double f = c[piv] / h.a[piv];
            int j = 0;
            for (int k = 0; k < d; ++k)
                if (k != piv) cr[j++] = c[k] - f * h.a[k];
        }
        double y[3];
        if (!seidel(sub, d - 1, cr, box, y)) return false;
        double acc = h.b;
        int j = 0;
        for (int k = 0; k < d; ++k)
            if (k != piv) {
                x[k] = y[j];
                acc -= h.a[k] * y[j];
                ++j;
            }
        x[piv] = acc / h.a[piv];
    }
    return true;
}

}  // namespace

std::optional<Vec3> solve_lp3(const std::vector<Halfspace3>& cons, const Vec3& c, double box) {
    std::vector<Row> rows;
    rows.reserve(cons.size());
    for (const auto& h : cons) rows.push_back({{h.a[0], h.a[1], h.a[2]}, h.b});
    std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
    std::shuffle(rows.begin(), rows.end(), rng);
    double x[3];
    if (!seidel(rows, 3, c.data(), box, x)) return std::nullopt;
    // final audit against the original constraint list
    for (const auto& r : rows)
        if (violates(r, 3, x)) {
            double v = r.a[0] * x[0] + r.a[1] * x[1] + r.a[2] * x[2];
            if (v > r.b + 1e-8 * (1.0 + std::abs(r.b))) return std::nullopt;
        }
    return Vec3{x[0], x[1], x[2]};
}

std::optional<Vec3> solve_lp3_lex(const std::vector<Halfspace3>& cons, const std::vector<Vec3>& objectives,
                                  double box) {
    std::vector<Halfspace3> work = cons;
    std::optional<Vec3> x;
    for (const auto& obj : objectives) {
        x = solve_lp3(work, obj, box);
        if (!x) return std::nullopt;
        double v = obj[0] * (*x)[0] + obj[1] * (*x)[1] + obj[2] * (*x)[2];
        work.push_back({obj, v + 1e-12 * (1.0 + std::abs(v))});
    }
    return x;
}

std::optional<Vec3> solve_lp3_enumerate(const std::vector<Halfspace3>& cons, const Vec3& c, double box) {
    std::vector<Halfspace3> all = cons;
    for (int k = 0; k < 3; ++k) {
        Halfspace3 up{{0, 0, 0}, box}, dn{{0, 0, 0}, box};
        up.a[static_cast<std::size_t>(k)] = 1;
        dn.a[static_cast<std::size_t>(k)] = -1;
        all.push_back(up);
        all.push_back(dn);
    }
    const std::size_t m = all.size();
    std::optional<Vec3> best;
    double best_val = std::numeric_limits<double>::infinity();
    auto det3 = [](const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
               r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                const Vec3 &A = all[i].a, &B = all[j].a, &C = all[k].a;
                double D = det3(A, B, C);
                if (std::abs(D) < 1e-12) continue;
                Vec3 bb{all[i].b, all[j].b, all[k].b};
                // Cramer
                Vec3 x;
                for (int col = 0; col < 3; ++col) {
                    Vec3 a0 = A, a1 = B, a2 = C;
                    a0[static_cast<std::size_t>(col)] = bb[0];
                    a1[static_cast<std::size_t>(col)] = bb[1];
                    a2[static_cast<std::size_t>(col)] = bb[2];
                    x[static_cast<std::size_t>(col)] = det3(a0, a1, a2) / D;
                }
                bool ok = true;
                for (const auto& h : all) {
                    double v = h.a[0] * x[0] + h.a[1] * x[1] + h.a[2] * x[2];
                    if (v > h.b + 1e-9 * (1.0 + std::abs(h.b))) { ok = false; break; }
                }
                if (!ok) continue;
                double val = c[0] * x[0] + c[1] * x[1] + c[2] * x[2];
                if (val < best_val - 1e-12 || (std::abs(val - best_val) <= 1e-12 && best && x < *best)) {
                    best_val = std::min(val, best_val);
                    best = x;
                }
            }
    return best;
}

}  // namespace minkasym
