/*
   Copyright 2026 The slicereg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SLICEREG_QUATERNION_HPP
#define SLICEREG_QUATERNION_HPP

#include <cmath>
#include <string>

#include "slicereg/error.hpp"
#include "slicereg/tolerance.hpp"

namespace slicereg {

/// Element of the quaternion algebra in the basis 1, i, j, k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0, 0, 0}; }

    constexpr Quaternion vec() const { return {0, x, y, z}; }

    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

/// Hamilton product, ij = -ji = k.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm(const Quaternion& q) { return q.norm(); }

inline Quaternion inverse(const Quaternion& q) {
    double n2 = q.norm_sq();
    if (n2 == 0.0)
        throw error(errc::division_by_zero, "inverse of zero quaternion");
    return (1.0 / n2) * conj(q);
}

/// Euclidean product of the vector parts.
constexpr double dot3(const Quaternion& p, const Quaternion& q) {
    return p.x * q.x + p.y * q.y + p.z * q.z;
}

/// Cross product of the vector parts (result is purely imaginary).
constexpr Quaternion cross3(const Quaternion& p, const Quaternion& q) {
    return {0,
            p.y * q.z - p.z * q.y,
            p.z * q.x - p.x * q.z,
            p.x * q.y - p.y * q.x};
}

inline bool near(const Quaternion& p, const Quaternion& q) {
    return near(p.w, q.w) && near(p.x, q.x) && near(p.y, q.y) && near(p.z, q.z);
}

inline bool near_zero(const Quaternion& q, double scale = 1.0) {
    return near_zero(q.w, scale) && near_zero(q.x, scale) &&
           near_zero(q.y, scale) && near_zero(q.z, scale);
}

/// A point of the sphere of imaginary units: axis^2 = -1. Construction
/// renormalizes inputs whose length drifted by at most `tolerance().unit`
/// and rejects anything farther off the sphere.
class ImaginaryUnit {
  public:
    ImaginaryUnit(double x, double y, double z) : ImaginaryUnit(Quaternion{0, x, y, z}) {}

    explicit ImaginaryUnit(const Quaternion& q) {
        double n = q.norm();
        if (n == 0.0 || std::abs(q.w) > tolerance().unit * n ||
            std::abs(n - 1.0) > tolerance().unit)
            throw error(errc::precondition_violated,
                        "quaternion is not a unit imaginary axis");
        axis_ = Quaternion{0, q.x, q.y, q.z};
        double vn = axis_.norm();
        axis_ = (1.0 / vn) * axis_;
    }

    const Quaternion& axis() const { return axis_; }
    operator Quaternion() const { return axis_; }

    ImaginaryUnit operator-() const { return ImaginaryUnit(-axis_); }

    static ImaginaryUnit i() { return ImaginaryUnit(1, 0, 0); }
    static ImaginaryUnit j() { return ImaginaryUnit(0, 1, 0); }
    static ImaginaryUnit k() { return ImaginaryUnit(0, 0, 1); }

  private:
    Quaternion axis_;
};

inline double dot3(const ImaginaryUnit& p, const ImaginaryUnit& q) {
    return dot3(p.axis(), q.axis());
}

/// Orthonormal basis I0, J0, K0 of the imaginary units adapted to a pair
/// (I0, M0): K0 is the positive multiple of I0 x M0, J0 = K0 * I0, and
/// M0 = a * I0 + b * J0 with b > 0, a^2 + b^2 = 1.
struct Frame {
    ImaginaryUnit I0;
    ImaginaryUnit J0;
    ImaginaryUnit K0;
    double a = 0.0;
    double b = 1.0;

    Quaternion m0() const { return a * I0.axis() + b * J0.axis(); }
};

/// Builds the adapted frame of a linearly independent pair (I0, M0).
/// With `positive_a` the substitution (-I0, J0, -K0) is applied when a < 0,
/// which keeps the two slices but flips the I0 representative.
inline Frame adapted_frame(const ImaginaryUnit& I0, const ImaginaryUnit& M0,
                           bool positive_a = false) {
    Quaternion c = cross3(I0.axis(), M0.axis());
    double cn = c.norm();
    if (cn <= tolerance().unit)
        throw error(errc::degenerate_frame, "axes are linearly dependent");
    ImaginaryUnit K0{(1.0 / cn) * c};
    ImaginaryUnit J0{K0.axis() * I0.axis()};
    double a = dot3(M0.axis(), I0.axis());
    double b = dot3(M0.axis(), J0.axis());
    Frame f{I0, J0, K0, a, b};
    if (f.b < 0.0) { // keep b > 0 (substitution I0, -J0, -K0)
        f = Frame{f.I0, -f.J0, -f.K0, f.a, -f.b};
    }
    if (positive_a && f.a < 0.0) { // substitution -I0, J0, -K0
        f = Frame{-f.I0, f.J0, -f.K0, -f.a, f.b};
    }
    return f;
}

/// Any orthonormal completion (J0, K0) of a single axis.
inline Frame orthonormal_completion(const ImaginaryUnit& I0) {
    const Quaternion& a = I0.axis();
    Quaternion e = (std::abs(a.x) <= std::abs(a.y) && std::abs(a.x) <= std::abs(a.z))
                       ? Quaternion{0, 1, 0, 0}
                       : (std::abs(a.y) <= std::abs(a.z) ? Quaternion{0, 0, 1, 0}
                                                         : Quaternion{0, 0, 0, 1});
    Quaternion m = e - dot3(e, a) * a;
    return adapted_frame(I0, ImaginaryUnit(m * (1.0 / m.norm())));
}

} // namespace slicereg

#endif
