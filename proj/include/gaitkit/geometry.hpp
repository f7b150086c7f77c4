#ifndef GAITKIT_GEOMETRY_HPP_
#define GAITKIT_GEOMETRY_HPP_

#include <cmath>

namespace gaitkit {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    double horizontal_norm() const { return std::sqrt(x * x + y * y); }
    Vec3 normalized() const {
        double n = norm();
        return n > 0.0 ? Vec3{x / n, y / n, z / n} : Vec3{};
    }
};

// Unit quaternion for body->world attitude.
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    static Quat identity() { return {}; }

    static Quat from_axis_angle(const Vec3& axis, double angle_rad) {
        double n = axis.norm();
        if (n <= 0.0 || angle_rad == 0.0) return identity();
        double h = 0.5 * angle_rad;
        double s = std::sin(h) / n;
        return {std::cos(h), axis.x * s, axis.y * s, axis.z * s};
    }

    // Small-rotation step from an integrated angle vector (rad).
    static Quat from_rotation_vector(const Vec3& rv) {
        double angle = rv.norm();
        if (angle < 1e-12) return {1.0, 0.5 * rv.x, 0.5 * rv.y, 0.5 * rv.z};
        return from_axis_angle(rv, angle);
    }

    // Minimal rotation taking unit vector `from` onto unit vector `to`.
    static Quat from_two_vectors(const Vec3& from, const Vec3& to) {
        Vec3 f = from.normalized(), t = to.normalized();
        double c = f.dot(t);
        if (c > 1.0 - 1e-12) return identity();
        if (c < -1.0 + 1e-12) {
            // Opposite vectors: rotate 180 deg about any perpendicular axis.
            Vec3 axis = f.cross(Vec3{1, 0, 0});
            if (axis.norm() < 1e-6) axis = f.cross(Vec3{0, 1, 0});
            return from_axis_angle(axis, M_PI);
        }
        Vec3 axis = f.cross(t);
        double angle = std::acos(std::max(-1.0, std::min(1.0, c)));
        return from_axis_angle(axis, angle);
    }

    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quat conjugate() const { return {w, -x, -y, -z}; }

    Quat normalized() const {
        double n = std::sqrt(w * w + x * x + y * y + z * z);
        if (n <= 0.0) return identity();
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        // v' = q v q*
        Vec3 u{x, y, z};
        Vec3 t = u.cross(v) * 2.0;
        return v + t * w + u.cross(t);
    }

    // Heading about the world z axis (swing-twist decomposition).
    double yaw_rad() const {
        // Twist component about z of the unit quaternion.
        double n = std::sqrt(w * w + z * z);
        if (n < 1e-12) return 0.0;
        return 2.0 * std::atan2(z / n, w / n);
    }
};

}  // namespace gaitkit

#endif  // GAITKIT_GEOMETRY_HPP_
