#pragma once

#include <cmath>

namespace vring {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Local cylindrical basis at azimuth xi (the z axis is the ring axis).
inline Vec3 e_rho(double xi) { return {std::cos(xi), std::sin(xi), 0.0}; }
inline Vec3 e_phi(double xi) { return {-std::sin(xi), std::cos(xi), 0.0}; }
inline Vec3 e_z() { return {0.0, 0.0, 1.0}; }

/// Tangent field of the unperturbed ring.
inline Vec3 ring_tangent(double xi) { return e_phi(xi); }

} // namespace vring
