#pragma once

#include <cmath>

namespace minkasym {

inline constexpr double kEpsNum = 1e-9;
inline constexpr double kEpsCollinear = 1e-12;
inline constexpr double kEpsMerge = 1e-7;
inline constexpr double kEpsCert = 1e-7;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
    constexpr Vec2 operator/(double k) const { return {x / k, y / k}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double k, Vec2 v) { return v * k; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 unit_at(double theta) { return {std::cos(theta), std::sin(theta)}; }
// rotate by +90 degrees
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // [[a b] [c d]]
    constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    constexpr Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    constexpr double det() const { return a * d - b * c; }
    constexpr Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 inverse() const {
        double k = det();
        return {d / k, -b / k, -c / k, a / k};
    }
};

}  // namespace minkasym
