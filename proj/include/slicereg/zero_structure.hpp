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

#ifndef SLICEREG_ZERO_STRUCTURE_HPP
#define SLICEREG_ZERO_STRUCTURE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "slicereg/slice_poly.hpp"

namespace slicereg {

/// Restriction of f to the sphere alpha + S*beta: for every imaginary unit J,
/// f(alpha + J beta) = A + J*B.
struct SphereRestriction {
    double alpha;
    double beta;
    Quaternion A;
    Quaternion B;
};

namespace detail {

/// Magnitude bound sum ||a_n|| * r^n used to scale on-sphere residual tests.
inline double sphere_scale(const SlicePoly& f, double r) {
    double s = 0.0, p = 1.0;
    for (const Quaternion& a : to_right_coefficients(f)) {
        s += a.norm() * p;
        p *= r;
    }
    return s;
}

} // namespace detail

/// Splits the powers (alpha + J beta)^n = c_n + J d_n (c, d independent of J)
/// and folds the right coefficients: A = sum c_n a_n, B = sum d_n a_n.
inline SphereRestriction restrict_to_sphere(const SlicePoly& f, double alpha,
                                            double beta) {
    if (!(beta > 0.0))
        throw error(errc::invalid_sphere, "sphere radius must be positive");
    Quaternion A{}, B{};
    double c = 1.0, d = 0.0;
    for (const Quaternion& a : to_right_coefficients(f)) {
        A = A + c * a;
        B = B + d * a;
        double cn = alpha * c - beta * d;
        double dn = beta * c + alpha * d;
        c = cn;
        d = dn;
    }
    return {alpha, beta, A, B};
}

/// Synthetic left division: f = (q - p) * g + r with r constant; r equals
/// evaluate(f, p).
inline std::pair<SlicePoly, Quaternion> left_divide_linear(const SlicePoly& f,
                                                           const Quaternion& p) {
    std::vector<Quaternion> a = to_right_coefficients(f);
    if (a.empty()) return {SlicePoly(), Quaternion{}};
    std::vector<Quaternion> b(a.size() > 1 ? a.size() - 1 : 0);
    Quaternion carry = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        if (k < b.size()) b[k] = carry;
        carry = a[k] + p * carry;
    }
    return {from_right_coefficients(b), carry};
}

/// Factorization of f at one sphere: f = [(q-alpha)^2 + beta^2]^m *
/// (q - p_1) * ... * (q - p_n) * g with g zero-free on the sphere. Spherical
/// factors are peeled while the restriction vanishes identically, isolated
/// points afterwards via J = -A * B^{-1}.
struct SphereFactorization {
    int spherical_power = 0; // m
    std::vector<Quaternion> points;
    SlicePoly cofactor;
};

inline SphereFactorization factor_at_sphere(const SlicePoly& f, double alpha,
                                            double beta) {
    if (f.is_zero())
        throw error(errc::zero_function, "factorization of the zero function");
    if (!(beta > 0.0))
        throw error(errc::invalid_sphere, "sphere radius must be positive");

    const double eps = 1e-7;
    double radius = std::hypot(alpha, beta);
    RealPoly sphere({alpha * alpha + beta * beta, -2.0 * alpha, 1.0});

    SphereFactorization out;
    out.cofactor = f;

    while (!out.cofactor.is_zero() && out.cofactor.degree() >= 2) {
        SphereRestriction r = restrict_to_sphere(out.cofactor, alpha, beta);
        double scale = detail::sphere_scale(out.cofactor, radius);
        if (r.A.norm() > eps * scale || r.B.norm() > eps * scale) break;
        SlicePoly quo;
        for (int i = 0; i < 4; ++i)
            quo[i] = divrem(out.cofactor[i], sphere).quotient;
        out.cofactor = quo;
        out.spherical_power += 1;
    }

    while (!out.cofactor.is_zero() && out.cofactor.degree() >= 1) {
        SphereRestriction r = restrict_to_sphere(out.cofactor, alpha, beta);
        double scale = detail::sphere_scale(out.cofactor, radius);
        if (r.B.norm() <= eps * scale) break;
        Quaternion J = -1.0 * (r.A * inverse(r.B));
        if (std::abs(J.norm() - 1.0) > tolerance().unit ||
            std::abs(J.w) > tolerance().unit)
            break;
        Quaternion p{alpha, 0, 0, 0};
        double vn = J.vec().norm();
        p = p + (beta / vn) * J.vec();
        auto [quo, rem] = left_divide_linear(out.cofactor, p);
        if (rem.norm() > eps * scale) break;
        out.points.push_back(p);
        out.cofactor = quo;
    }
    return out;
}

/// Zero set of f: origin and nonzero real zeros with their isolated
/// multiplicities, plus one entry per zero sphere carrying the (even)
/// spherical multiplicity and, when present, the first isolated point with
/// the length of its peeling chain.
struct ZeroStructure {
    struct RealZero {
        double x;
        int multiplicity;
    };
    struct Isolated {
        Quaternion point;
        int multiplicity;
    };
    struct Sphere {
        double alpha;
        double beta;
        int spherical_multiplicity; // even
        std::optional<Isolated> isolated;
    };

    int origin_multiplicity = 0;
    std::vector<RealZero> real_zeros;
    std::vector<Sphere> spheres;
};

/// Classifies every zero of f. Candidate spheres and real zeros come from
/// the roots of f^s; multiplicities are recovered by value-driven peeling
/// against f itself. A sphere whose f^s multiplicity cannot be consumed by
/// valid peels signals root-finder noise and raises inconsistent_sphere.
inline ZeroStructure zero_structure(const SlicePoly& f) {
    if (f.is_zero())
        throw error(errc::zero_function, "zero structure of the zero function");

    ZeroStructure zs;
    RealPoly fs = symmetrized(f);
    if (fs.degree() <= 0) return zs; // nonvanishing constant

    RootSet rs = roots(fs);
    const double eps = 1e-7;

    for (const auto& rr : rs.real_roots) {
        SlicePoly g = f;
        int count = 0;
        while (!g.is_zero() && g.degree() >= 1) {
            double scale = detail::sphere_scale(g, std::abs(rr.x));
            Quaternion val = evaluate(g, Quaternion::real(rr.x));
            if (val.norm() > eps * scale) break;
            g = left_divide_linear(g, Quaternion::real(rr.x)).first;
            ++count;
        }
        if (count == 0) continue;
        if (std::abs(rr.x) <= 1e-8)
            zs.origin_multiplicity = count;
        else
            zs.real_zeros.push_back({rr.x, count});
    }

    for (const auto& pr : rs.complex_pairs) {
        SphereFactorization fac = factor_at_sphere(f, pr.alpha, pr.beta);
        int consumed = 2 * fac.spherical_power + static_cast<int>(fac.points.size());
        if (consumed != pr.multiplicity)
            throw error(errc::inconsistent_sphere,
                        "sphere multiplicity does not match the peeled factors");
        ZeroStructure::Sphere s;
        s.alpha = pr.alpha;
        s.beta = pr.beta;
        s.spherical_multiplicity = 2 * fac.spherical_power;
        if (!fac.points.empty())
            s.isolated = ZeroStructure::Isolated{
                fac.points.front(), static_cast<int>(fac.points.size())};
        zs.spheres.push_back(s);
    }
    return zs;
}

/// f = q^m * R * S * h with R monic on the nonzero real zeros, S monic on
/// the spherical zeros and h a nonvanishing (constant) cofactor. Requires f
/// to have no isolated non-real zeros.
struct WeierstrassParts {
    int origin_multiplicity = 0;
    RealPoly real_factor;
    RealPoly spherical_factor;
    SlicePoly unit;
};

inline WeierstrassParts weierstrass_factor(const SlicePoly& f) {
    ZeroStructure zs = zero_structure(f);
    for (const auto& s : zs.spheres)
        if (s.isolated)
            throw error(errc::isolated_nonreal_zeros,
                        "function has isolated non-real zeros");

    WeierstrassParts out;
    out.origin_multiplicity = zs.origin_multiplicity;
    out.real_factor = RealPoly::constant(1.0);
    for (const auto& r : zs.real_zeros)
        for (int m = 0; m < r.multiplicity; ++m)
            out.real_factor = out.real_factor * RealPoly({-r.x, 1.0});
    out.spherical_factor = RealPoly::constant(1.0);
    for (const auto& s : zs.spheres)
        for (int m = 0; m < s.spherical_multiplicity / 2; ++m)
            out.spherical_factor =
                out.spherical_factor *
                RealPoly({s.alpha * s.alpha + s.beta * s.beta, -2.0 * s.alpha, 1.0});

    RealPoly divisor = out.real_factor * out.spherical_factor;
    std::vector<double> power(zs.origin_multiplicity + 1, 0.0);
    power.back() = 1.0;
    divisor = divisor * RealPoly(std::move(power));

    SlicePoly h;
    for (int i = 0; i < 4; ++i) h[i] = divrem(f[i], divisor).quotient;
    // the cofactor of a polynomial is a constant; drop division noise
    if (h.degree() > 0) {
        double head = evaluate(h, Quaternion::real(0.0)).norm();
        double tail = 0.0;
        for (int i = 0; i < 4; ++i)
            for (std::size_t t = 1; t < h[i].coeffs().size(); ++t)
                tail = std::max(tail, std::abs(h[i][t]));
        if (tail <= 1e-6 * std::max(head, h.max_abs()))
            h = SlicePoly::constant(Quaternion{h[0][0], h[1][0], h[2][0], h[3][0]});
    }
    out.unit = h;
    return out;
}

/// Constructive square root of the symmetrized: returns h in the slice of I0
/// with h^s = mu, when mu is nonnegative on the reals with even-order real
/// zeros; nothing otherwise. The representative takes its zeros in the upper
/// half-plane of C_{I0}.
inline std::optional<SlicePoly> symmetrized_root(const RealPoly& mu,
                                                 const ImaginaryUnit& I0) {
    if (mu.is_zero())
        throw error(errc::precondition_violated, "symmetrized root of zero");
    if (!nonneg_even_real_zeros(mu)) return std::nullopt;
    if (mu.degree() == 0) {
        if (mu.leading() < 0.0) return std::nullopt;
        return SlicePoly(RealPoly::constant(std::sqrt(mu.leading())));
    }
    RootSet rs = roots(mu);
    if (rs.leading < 0.0) return std::nullopt;

    using cd = std::complex<double>;
    std::vector<cd> h{cd(std::sqrt(rs.leading), 0.0)};
    auto mul_linear = [&h](cd root) {
        std::vector<cd> r(h.size() + 1, cd(0.0, 0.0));
        for (std::size_t i = 0; i < h.size(); ++i) {
            r[i + 1] += h[i];
            r[i] -= root * h[i];
        }
        h = std::move(r);
    };
    for (const auto& r : rs.real_roots) {
        if (r.multiplicity % 2 != 0) return std::nullopt;
        for (int m = 0; m < r.multiplicity / 2; ++m) mul_linear(cd(r.x, 0.0));
    }
    for (const auto& p : rs.complex_pairs)
        for (int m = 0; m < p.multiplicity; ++m) mul_linear(cd(p.alpha, p.beta));

    std::vector<double> h0(h.size()), h1(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        h0[i] = h[i].real();
        h1[i] = h[i].imag();
    }
    RealPoly re(std::move(h0)), im(std::move(h1));
    const Quaternion& ax = I0.axis();
    SlicePoly out(re, ax.x * im, ax.y * im, ax.z * im);

    RealPoly check = symmetrized(out);
    if ((check - mu).max_abs() > 1e-8 * std::max(1.0, mu.max_abs()))
        throw error(errc::root_finding_failed,
                    "symmetrized-root verification failed");
    return out;
}

} // namespace slicereg

#endif
