#pragma once

#include <cmath>

namespace rliac {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline double dist(const Vec2& a, const Vec2& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return n > 0.0 ? v * (1.0 / n) : v;
}

/// Infinite plane n·p + d = 0 with unit normal.
struct Plane {
    Vec3 normal{0, 0, 1};
    double d = 0.0;
    int inlier_count = 0;

    double signed_distance(const Vec3& p) const { return dot(normal, p) + d; }
};

/// Axis-aligned 3-D box.
struct Box3 {
    Vec3 lo, hi;

    bool contains_xy(double x, double y) const {
        return x >= lo.x && x <= hi.x && y >= lo.y && y <= hi.y;
    }
    double diagonal() const { return norm(hi - lo); }
};

/// Slab test: nearest positive entry distance of ray o + t*dir against box,
/// or a negative value when there is no hit in front of the origin.
inline double ray_box_enter(const Vec3& o, const Vec3& dir, const Box3& b) {
    double tmin = 0.0, tmax = 1e30;
    const double od[3] = {o.x, o.y, o.z};
    const double dd[3] = {dir.x, dir.y, dir.z};
    const double lo[3] = {b.lo.x, b.lo.y, b.lo.z};
    const double hi[3] = {b.hi.x, b.hi.y, b.hi.z};
    for (int i = 0; i < 3; ++i) {
        if (std::abs(dd[i]) < 1e-12) {
            if (od[i] < lo[i] || od[i] > hi[i]) return -1.0;
        } else {
            double t0 = (lo[i] - od[i]) / dd[i];
            double t1 = (hi[i] - od[i]) / dd[i];
            if (t0 > t1) std::swap(t0, t1);
            tmin = std::max(tmin, t0);
            tmax = std::min(tmax, t1);
            if (tmin > tmax) return -1.0;
        }
    }
    return tmin > 1e-9 ? tmin : -1.0;
}

}  // namespace rliac
