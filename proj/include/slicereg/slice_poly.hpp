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

#ifndef SLICEREG_SLICE_POLY_HPP
#define SLICEREG_SLICE_POLY_HPP

#include <array>
#include <optional>
#include <vector>

#include "slicereg/quaternion.hpp"
#include "slicereg/real_poly.hpp"

namespace slicereg {

/// Quaternionic polynomial in component form: f = c0 + c1*i + c2*j + c3*k
/// with real-coefficient components. The representation is unique, so two
/// values are equal iff all four components are.
class SlicePoly {
  public:
    SlicePoly() = default;
    SlicePoly(RealPoly c0, RealPoly c1, RealPoly c2, RealPoly c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    explicit SlicePoly(const RealPoly& scalar) : c_{scalar, {}, {}, {}} {}

    static SlicePoly constant(const Quaternion& q) {
        return SlicePoly(RealPoly::constant(q.w), RealPoly::constant(q.x),
                         RealPoly::constant(q.y), RealPoly::constant(q.z));
    }

    static SlicePoly variable() { return SlicePoly(RealPoly::variable()); }

    const RealPoly& operator[](std::size_t i) const { return c_[i]; }
    RealPoly& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }

    int degree() const {
        int d = -1;
        for (const auto& p : c_) d = std::max(d, p.degree());
        return d;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& p : c_) m = std::max(m, p.max_abs());
        return m;
    }

    SlicePoly operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  private:
    std::array<RealPoly, 4> c_;
};

inline SlicePoly operator+(const SlicePoly& f, const SlicePoly& g) {
    return {f[0] + g[0], f[1] + g[1], f[2] + g[2], f[3] + g[3]};
}

inline SlicePoly operator-(const SlicePoly& f, const SlicePoly& g) {
    return {f[0] - g[0], f[1] - g[1], f[2] - g[2], f[3] - g[3]};
}

/// Multiplication by a slice preserving factor acts componentwise.
inline SlicePoly operator*(const RealPoly& r, const SlicePoly& f) {
    return {r * f[0], r * f[1], r * f[2], r * f[3]};
}

inline SlicePoly operator*(double s, const SlicePoly& f) {
    return {s * f[0], s * f[1], s * f[2], s * f[3]};
}

/// The *-product in component form. When one factor has real components
/// only, this reduces to the pointwise product.
inline SlicePoly star_mul(const SlicePoly& f, const SlicePoly& g) {
    return {f[0] * g[0] - f[1] * g[1] - f[2] * g[2] - f[3] * g[3],
            f[0] * g[1] + g[0] * f[1] + (f[2] * g[3] - f[3] * g[2]),
            f[0] * g[2] + g[0] * f[2] + (f[3] * g[1] - f[1] * g[3]),
            f[0] * g[3] + g[0] * f[3] + (f[1] * g[2] - f[2] * g[1])};
}

inline SlicePoly operator*(const SlicePoly& f, const SlicePoly& g) {
    return star_mul(f, g);
}

inline SlicePoly star_conj(const SlicePoly& f) {
    return {f[0], -f[1], -f[2], -f[3]};
}

inline RealPoly real_part(const SlicePoly& f) { return f[0]; }

inline SlicePoly vector_part(const SlicePoly& f) {
    return {RealPoly(), f[1], f[2], f[3]};
}

/// f^s = f * f^c = c0^2 + c1^2 + c2^2 + c3^2, always slice preserving.
inline RealPoly symmetrized(const SlicePoly& f) {
    return f[0] * f[0] + f[1] * f[1] + f[2] * f[2] + f[3] * f[3];
}

/// <f, g>_* = c0 c0' + c1 c1' + c2 c2' + c3 c3' (the scalar part of f * g^c).
inline RealPoly pairing(const SlicePoly& f, const SlicePoly& g) {
    return f[0] * g[0] + f[1] * g[1] + f[2] * g[2] + f[3] * g[3];
}

/// (f*g - g*f)/2, written out as the cross product of the vector components.
inline SlicePoly wedge(const SlicePoly& f, const SlicePoly& g) {
    return {RealPoly(),
            f[2] * g[3] - f[3] * g[2],
            f[3] * g[1] - f[1] * g[3],
            f[1] * g[2] - f[2] * g[1]};
}

/// Hermitian product f * g^c.
inline SlicePoly hermitian(const SlicePoly& f, const SlicePoly& g) {
    return star_mul(f, star_conj(g));
}

inline bool near(const SlicePoly& f, const SlicePoly& g) {
    return near(f[0], g[0]) && near(f[1], g[1]) && near(f[2], g[2]) &&
           near(f[3], g[3]);
}

inline bool near_zero(const SlicePoly& f, double scale = 1.0) {
    return near_zero(f[0], scale) && near_zero(f[1], scale) &&
           near_zero(f[2], scale) && near_zero(f[3], scale);
}

inline double rel_distance(const SlicePoly& f, const SlicePoly& g) {
    double scale = std::max(f.max_abs(), g.max_abs());
    if (scale == 0.0) return 0.0;
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, (f[i] - g[i]).max_abs());
    return d / scale;
}

/// Right-coefficient view: f = sum_n q^n a_n.
inline std::vector<Quaternion> to_right_coefficients(const SlicePoly& f) {
    int d = f.degree();
    std::vector<Quaternion> a(static_cast<std::size_t>(std::max(d + 1, 0)));
    for (int n = 0; n <= d; ++n)
        a[n] = Quaternion{f[0][n], f[1][n], f[2][n], f[3][n]};
    return a;
}

inline SlicePoly from_right_coefficients(const std::vector<Quaternion>& a) {
    std::vector<double> c0(a.size()), c1(a.size()), c2(a.size()), c3(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        c0[n] = a[n].w;
        c1[n] = a[n].x;
        c2[n] = a[n].y;
        c3[n] = a[n].z;
    }
    return SlicePoly(RealPoly(std::move(c0)), RealPoly(std::move(c1)),
                     RealPoly(std::move(c2)), RealPoly(std::move(c3)));
}

/// Evaluation of the right-coefficient form at a quaternion point.
inline Quaternion evaluate(const SlicePoly& f, const Quaternion& p) {
    std::vector<Quaternion> a = to_right_coefficients(f);
    Quaternion r{};
    for (std::size_t n = a.size(); n-- > 0;) r = p * r + a[n];
    return r;
}

/// Slice-preservation verdict. `kind` is AllSlices iff the vector components
/// vanish; OneSlice carries the (sign-normalized) preserved axis.
struct SliceClass {
    enum class Kind { AllSlices, OneSlice, NoSlice };
    Kind kind;
    std::optional<ImaginaryUnit> axis;

    bool all_slices() const { return kind == Kind::AllSlices; }
    bool one_slice() const { return kind == Kind::OneSlice; }
    bool no_slice() const { return kind == Kind::NoSlice; }
};

namespace detail {

/// Singular values / left singular vectors of a 3 x n coefficient matrix by
/// one-sided Jacobi rotations on the rows. Avoids forming the Gram matrix so
/// sigma_2 / sigma_1 stays meaningful down to ~1e-13.
struct RowSvd3 {
    double sigma[3];
    double u[3][3]; // u[r][c]: column c = left singular vector of sigma[c]
};

inline RowSvd3 row_svd3(std::array<std::vector<double>, 3> rows) {
    double U[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto dotrow = [&](int p, int q) {
        double s = 0.0;
        for (std::size_t t = 0; t < rows[p].size(); ++t) s += rows[p][t] * rows[q][t];
        return s;
    };
    for (int sweep = 0; sweep < 40; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                double app = dotrow(p, p), aqq = dotrow(q, q), apq = dotrow(p, q);
                if (std::abs(apq) <= 1e-30 + 1e-15 * std::sqrt(app * aqq)) continue;
                rotated = true;
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double cs = 1.0 / std::sqrt(1.0 + t * t);
                double sn = cs * t;
                for (std::size_t k = 0; k < rows[p].size(); ++k) {
                    double rp = rows[p][k], rq = rows[q][k];
                    rows[p][k] = cs * rp - sn * rq;
                    rows[q][k] = sn * rp + cs * rq;
                }
                for (int r = 0; r < 3; ++r) {
                    double up = U[r][p], uq = U[r][q];
                    U[r][p] = cs * up - sn * uq;
                    U[r][q] = sn * up + cs * uq;
                }
            }
        }
        if (!rotated) break;
    }
    RowSvd3 out{};
    int order[3] = {0, 1, 2};
    double s[3];
    for (int r = 0; r < 3; ++r) s[r] = std::sqrt(dotrow(r, r));
    std::sort(order, order + 3, [&](int a, int b) { return s[a] > s[b]; });
    for (int c = 0; c < 3; ++c) {
        out.sigma[c] = s[order[c]];
        for (int r = 0; r < 3; ++r) out.u[r][c] = U[r][order[c]];
    }
    return out;
}

} // namespace detail

/// Classifies f: AllSlices when the vector components vanish, OneSlice when
/// the 3 x (deg+1) matrix of vector-component coefficients has numerical
/// rank one (the axis is the dominant left singular direction, first nonzero
/// coordinate made positive), NoSlice otherwise.
inline SliceClass classify(const SlicePoly& f) {
    double scale = f.max_abs();
    if (scale == 0.0)
        throw error(errc::zero_function, "classification of the zero function");
    double vscale = std::max({f[1].max_abs(), f[2].max_abs(), f[3].max_abs()});
    if (vscale <= tolerance().rank * scale)
        return {SliceClass::Kind::AllSlices, std::nullopt};

    std::size_t n = 0;
    for (int i = 1; i < 4; ++i) n = std::max(n, f[i].coeffs().size());
    std::array<std::vector<double>, 3> rows;
    for (int i = 0; i < 3; ++i) {
        rows[i].assign(n, 0.0);
        for (std::size_t t = 0; t < n; ++t) rows[i][t] = f[i + 1][t];
    }
    detail::RowSvd3 svd = detail::row_svd3(std::move(rows));
    if (svd.sigma[1] > tolerance().rank * svd.sigma[0])
        return {SliceClass::Kind::NoSlice, std::nullopt};

    Quaternion axis{0, svd.u[0][0], svd.u[1][0], svd.u[2][0]};
    double comps[3] = {axis.x, axis.y, axis.z};
    for (double c : comps) {
        if (std::abs(c) > 1e-7) {
            if (c < 0) axis = -axis;
            break;
        }
    }
    return {SliceClass::Kind::OneSlice, ImaginaryUnit(axis)};
}

/// Component of the vector part along a unit axis.
inline RealPoly axis_component(const SlicePoly& f, const ImaginaryUnit& u) {
    const Quaternion& a = u.axis();
    return a.x * f[1] + a.y * f[2] + a.z * f[3];
}

/// Max-norm of the part of f orthogonal to span(1, u).
inline double off_axis_norm(const SlicePoly& f, const ImaginaryUnit& u) {
    RealPoly along = axis_component(f, u);
    const Quaternion& a = u.axis();
    double m = 0.0;
    m = std::max(m, (f[1] - a.x * along).max_abs());
    m = std::max(m, (f[2] - a.y * along).max_abs());
    m = std::max(m, (f[3] - a.z * along).max_abs());
    return m;
}

/// True when f is in the span of {1, u} up to noise, i.e. preserves C_u.
inline bool in_slice(const SlicePoly& f, const ImaginaryUnit& u) {
    double scale = f.max_abs();
    if (scale == 0.0) return true;
    return off_axis_norm(f, u) <= 1e-7 * scale;
}

/// Bilinear slice test: f * g preserves C_{I0} iff the pairing of f against
/// M0 * g^c vanishes for both completions M0 of I0.
inline bool bilinear_slice_test(const SlicePoly& f, const SlicePoly& g,
                                const ImaginaryUnit& I0) {
    if (f.is_zero() || g.is_zero()) return true;
    Frame fr = orthonormal_completion(I0);
    double scale = f.max_abs() * g.max_abs() *
                   static_cast<double>(1 + std::max(f.degree(), 0) + std::max(g.degree(), 0));
    for (const ImaginaryUnit& m : {fr.J0, fr.K0}) {
        RealPoly p = pairing(f, star_mul(SlicePoly::constant(m.axis()), star_conj(g)));
        if (p.max_abs() > 1e-8 * scale) return false;
    }
    return true;
}

} // namespace slicereg

#endif
