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

#ifndef SLICEREG_SLICE_LAWS_HPP
#define SLICEREG_SLICE_LAWS_HPP

#include <complex>
#include <optional>
#include <utility>

#include "slicereg/slice_poly.hpp"
#include "slicereg/zero_structure.hpp"

namespace slicereg {

/// h * f * h^c, computed both by the direct double product and by the
/// closed vector-calculus form; the two routes must agree to 1e-9 relative
/// or the call fails with formula_mismatch.
inline SlicePoly conjugate_by(const SlicePoly& h, const SlicePoly& f) {
    SlicePoly direct = star_mul(star_mul(h, f), star_conj(h));

    const RealPoly& h0 = h[0];
    const RealPoly& f0 = f[0];
    SlicePoly hv = vector_part(h);
    SlicePoly fv = vector_part(f);
    RealPoly scalar = h0 * h0 * f0 + f0 * pairing(hv, hv);
    SlicePoly w = wedge(hv, fv);
    SlicePoly vec = pairing(hv, fv) * hv + (h0 * h0) * fv + (2.0 * h0) * w -
                    wedge(w, hv);
    SlicePoly closed = SlicePoly(scalar) + vec;

    if (rel_distance(direct, closed) > 1e-9)
        throw error(errc::formula_mismatch,
                    "conjugation routes disagree beyond tolerance");
    return direct;
}

/// True iff h * f * h^c = h^c * f * h. Equivalent to h having zero real part
/// or the vector parts of h and f being linearly dependent.
inline bool commuting_conjugates(const SlicePoly& f, const SlicePoly& h) {
    SlicePoly lhs = conjugate_by(h, f);
    SlicePoly rhs = conjugate_by(star_conj(h), f);
    return rel_distance(lhs, rhs) <= 1e-9;
}

namespace detail {

inline void require_one_slice_pair(const SliceClass& cf, const SliceClass& ch) {
    if (!cf.one_slice() || !ch.one_slice())
        throw error(errc::precondition_violated,
                    "operands must each preserve exactly one slice");
    if (std::abs(dot3(*cf.axis, *ch.axis)) >= 1.0 - 1e-9)
        throw error(errc::precondition_violated,
                    "operand axes must be linearly independent");
}

/// Ratio r with num = r * den when the two polynomials are proportional by a
/// real constant; 0 when num vanishes; nothing otherwise.
inline std::optional<double> constant_ratio(const RealPoly& num,
                                            const RealPoly& den) {
    if (num.is_zero() || num.max_abs() <= 1e-9 * den.max_abs()) return 0.0;
    if (num.degree() != den.degree()) return std::nullopt;
    double r = num.leading() / den.leading();
    if ((num - r * den).max_abs() >
        1e-7 * std::max(num.max_abs(), std::abs(r) * den.max_abs()))
        return std::nullopt;
    return r;
}

/// Quotient g / f of the complex-polynomial views over the slice of I0,
/// accepted only when the remainder vanishes and the quotient is real.
inline std::optional<RealPoly> complex_quotient_real(const SlicePoly& g,
                                                     const SlicePoly& f,
                                                     const ImaginaryUnit& I0) {
    using cd = std::complex<double>;
    auto cview = [&](const SlicePoly& p) {
        RealPoly re = p[0];
        RealPoly im = axis_component(p, I0);
        std::size_t n = std::max(re.coeffs().size(), im.coeffs().size());
        std::vector<cd> c(n);
        for (std::size_t t = 0; t < n; ++t) c[t] = cd(re[t], im[t]);
        return c;
    };
    auto max_abs = [](const std::vector<cd>& v) {
        double m = 0.0;
        for (const cd& x : v) m = std::max(m, std::abs(x));
        return m;
    };
    std::vector<cd> G = cview(g), F = cview(f);
    double fm = max_abs(F), gm = max_abs(G);
    while (!F.empty() && std::abs(F.back()) <= 1e-13 * fm) F.pop_back();
    while (!G.empty() && std::abs(G.back()) <= 1e-13 * gm) G.pop_back();
    if (F.empty())
        throw error(errc::division_by_zero, "division by the zero function");
    if (G.empty()) return RealPoly();
    if (G.size() < F.size()) return std::nullopt;

    std::vector<cd> rem = G;
    std::vector<cd> quo(G.size() - F.size() + 1);
    cd lead = F.back();
    for (std::size_t k = rem.size(); k-- >= F.size();) {
        cd q = rem[k] / lead;
        quo[k - (F.size() - 1)] = q;
        for (std::size_t i = 0; i < F.size(); ++i)
            rem[k - (F.size() - 1) + i] -= q * F[i];
        if (k == F.size() - 1) break;
    }
    double rmax = 0.0;
    for (std::size_t i = 0; i + 1 < F.size(); ++i) rmax = std::max(rmax, std::abs(rem[i]));
    if (rmax > tolerance().div * gm * (1.0 + fm)) return std::nullopt;

    double qm = max_abs(quo);
    std::vector<double> out(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        if (std::abs(quo[i].imag()) > 1e-7 * std::max(1.0, qm)) return std::nullopt;
        out[i] = quo[i].real();
    }
    return RealPoly(std::move(out));
}

/// Square root tolerant of quotient noise: solver inputs are divisions of
/// computed data, so an exact square may arrive with its double roots split
/// into conjugate pairs of width ~sqrt(noise). Recover the root structure
/// from the square-free part and polish with a polynomial Newton step; the
/// caller's reconjugation check remains the final arbiter.
inline std::optional<RealPoly> sqrt_near_square(const RealPoly& p) {
    if (p.leading() < 0.0) return std::nullopt;
    if (p.degree() == 0) return RealPoly::constant(std::sqrt(p.leading()));
    if (p.degree() % 2 != 0) return std::nullopt;
    std::optional<RealPoly> s = sqrt_if_square(p);
    if (!s) {
        RealPoly g = approx_gcd(p, derivative(p), 1e-6);
        if (g.degree() * 2 == p.degree())
            s = std::sqrt(p.leading()) * g;
    }
    if (!s || s->is_zero()) return std::nullopt;
    for (int it = 0; it < 2; ++it)
        *s = 0.5 * (*s + divrem(p, *s).quotient);
    if ((*s * *s - p).max_abs() > 1e-7 * std::max(1.0, p.max_abs()))
        return std::nullopt;
    return s;
}

inline std::optional<RealPoly> sqrt_or_zero(const RealPoly& p, double scale) {
    if (p.is_zero() || p.max_abs() <= 1e-9 * std::max(scale, 1.0)) return RealPoly();
    return sqrt_near_square(p);
}

/// Components extracted from a computed polynomial inherit its absolute
/// noise floor; coefficients below it are artifacts of the larger ambient
/// value and must not masquerade as degree.
inline RealPoly denoise(const RealPoly& p, double ambient, double floor = 1e-12) {
    std::vector<double> c(p.coeffs());
    for (double& v : c)
        if (std::abs(v) <= floor * ambient) v = 0.0;
    return RealPoly(std::move(c));
}

inline SlicePoly along_axis(const RealPoly& re, const RealPoly& im,
                            const ImaginaryUnit& u) {
    const Quaternion& a = u.axis();
    return SlicePoly(re, a.x * im, a.y * im, a.z * im);
}

} // namespace detail

/// When f and h preserve distinct single slices, f + h preserves a slice iff
/// their axis components are proportional; the preserved axis lies in the
/// plane of the two input axes.
inline std::optional<ImaginaryUnit> sum_preserved_slice(const SlicePoly& f,
                                                        const SlicePoly& h) {
    SliceClass cf = classify(f), ch = classify(h);
    detail::require_one_slice_pair(cf, ch);
    ImaginaryUnit I0 = *cf.axis, J0 = *ch.axis;

    SliceClass sum = classify(f + h);
    if (!sum.one_slice()) return std::nullopt;

    RealPoly f1 = axis_component(f, I0);
    RealPoly h1 = axis_component(h, J0);
    auto lambda = detail::constant_ratio(f1, h1);
    if (!lambda)
        throw error(errc::formula_mismatch,
                    "sum preserves a slice but axis components are not proportional");
    Quaternion k = *lambda * I0.axis() + J0.axis();
    ImaginaryUnit predicted{(1.0 / k.norm()) * k};
    if (std::abs(dot3(predicted, *sum.axis)) < 1.0 - 1e-7)
        throw error(errc::formula_mismatch,
                    "predicted sum axis disagrees with classification");
    return *sum.axis;
}

/// Witness for a slice-preserving *-product of two one-slice factors:
/// axis = a I0 + b J0 + eps I0 x J0 with f = f1 (b/eps + I0), h = h1 (a/eps + J0).
struct ProductSliceWitness {
    ImaginaryUnit axis;
    double a;
    double b;
    double eps; // never zero
};

inline std::optional<ProductSliceWitness>
product_preserved_slice(const SlicePoly& f, const SlicePoly& h) {
    SliceClass cf = classify(f), ch = classify(h);
    detail::require_one_slice_pair(cf, ch);
    ImaginaryUnit I0 = *cf.axis, J0 = *ch.axis;

    SliceClass prod = classify(star_mul(f, h));
    if (!prod.one_slice()) return std::nullopt;

    RealPoly f1 = axis_component(f, I0);
    RealPoly h1 = axis_component(h, J0);
    auto cF = detail::constant_ratio(f[0], f1);
    auto cH = detail::constant_ratio(h[0], h1);
    if (!cF || !cH)
        throw error(errc::formula_mismatch,
                    "product preserves a slice but factors lack the rotated form");
    Quaternion v = *cH * I0.axis() + *cF * J0.axis() + cross3(I0.axis(), J0.axis());
    double vn = v.norm();
    ProductSliceWitness w{ImaginaryUnit((1.0 / vn) * v), *cH / vn, *cF / vn,
                          1.0 / vn};
    if (std::abs(dot3(w.axis, *prod.axis)) < 1.0 - 1e-7)
        throw error(errc::formula_mismatch,
                    "predicted product axis disagrees with classification");
    return w;
}

inline SliceClass conjugation_classify(const SlicePoly& h, const SlicePoly& f) {
    return classify(conjugate_by(h, f));
}

/// Structure of a conjugator: given f preserving the slice of I0 and
/// h * f * h^c preserving the slice of M0, h factors through an element g of
/// the slice of I0, either as (1 - ((a +- 1)/b) K0) * g (distinct slices) or
/// as J0 * g with J0 orthogonal to I0 (equal slices).
struct ConjugationWitness {
    enum class Branch { PlusOne, MinusOne, Orthogonal };
    Branch branch;
    SlicePoly g;
    Frame frame;
};

inline ConjugationWitness conjugator_structure(const SlicePoly& f,
                                               const SlicePoly& h,
                                               const ImaginaryUnit& M0) {
    SliceClass cf = classify(f);
    if (!cf.one_slice())
        throw error(errc::precondition_violated,
                    "f must preserve exactly one slice");
    ImaginaryUnit I0 = *cf.axis;
    if (in_slice(h, I0))
        throw error(errc::precondition_violated,
                    "h must not preserve the slice of f");
    SliceClass cc = conjugation_classify(h, f);
    if (!cc.one_slice() || std::abs(dot3(*cc.axis, M0)) < 1.0 - 1e-7)
        throw error(errc::precondition_violated,
                    "conjugate does not preserve the slice of M0");

    if (std::abs(dot3(I0, M0)) >= 1.0 - 1e-9) {
        Frame fr = orthonormal_completion(I0);
        double scale = h.max_abs();
        if (h[0].max_abs() > 1e-7 * scale ||
            axis_component(h, I0).max_abs() > 1e-7 * scale)
            throw error(errc::structure_not_found,
                        "conjugator has components along the preserved slice");
        RealPoly h2 = axis_component(h, fr.J0);
        RealPoly h3 = axis_component(h, fr.K0);
        SlicePoly g = detail::along_axis(h2, -h3, I0);
        if (rel_distance(star_mul(SlicePoly::constant(fr.J0.axis()), g), h) > 1e-8)
            throw error(errc::structure_not_found,
                        "orthogonal factorization does not reassemble");
        return {ConjugationWitness::Branch::Orthogonal, g, fr};
    }

    Frame fr = adapted_frame(I0, M0);
    for (int sign = +1; sign >= -1; sign -= 2) {
        double t = (fr.a + sign) / fr.b;
        Quaternion c = Quaternion::real(1.0) - t * fr.K0.axis();
        SlicePoly g = star_mul(SlicePoly::constant(inverse(c)), h);
        if (!in_slice(g, I0)) continue;
        if (rel_distance(star_mul(SlicePoly::constant(c), g), h) > 1e-8) continue;
        return {sign > 0 ? ConjugationWitness::Branch::PlusOne
                         : ConjugationWitness::Branch::MinusOne,
                g, fr};
    }
    throw error(errc::structure_not_found,
                "no branch reproduces the conjugator");
}

/// Solves h * f * h^c = g for h preserving the slice of M0, given f in some
/// slice. Every candidate is validated by reconjugation before it is
/// returned; unsatisfiable systems yield nothing.
inline std::optional<SlicePoly> solve_conjugation_h(const SlicePoly& f,
                                                    const ImaginaryUnit& M0,
                                                    const SlicePoly& g) {
    SliceClass cf = classify(f);
    if (cf.no_slice())
        throw error(errc::precondition_violated, "f must preserve a slice");
    if (g.is_zero()) return SlicePoly();

    ImaginaryUnit I0 = cf.one_slice() ? *cf.axis : M0;
    auto verified = [&](const SlicePoly& h) -> std::optional<SlicePoly> {
        if (rel_distance(conjugate_by(h, f), g) <= 1e-7) return h;
        return std::nullopt;
    };

    double align = std::abs(dot3(I0, M0));
    if (align >= 1.0 - 1e-9) {
        // equal slices: g = h^s f, so g/f must be a nonnegative slice
        // preserving quotient with even-order real zeros
        if (!in_slice(g, I0)) return std::nullopt;
        auto sigma = detail::complex_quotient_real(g, f, I0);
        if (!sigma || sigma->is_zero()) return std::nullopt;
        if (!nonneg_even_real_zeros(*sigma)) return std::nullopt;
        auto h = symmetrized_root(*sigma, M0);
        if (!h) return std::nullopt;
        return verified(*h);
    }

    if (align <= 1e-9) {
        // orthogonal slices
        Frame fr = adapted_frame(I0, M0); // J0 = M0 here
        double ambient = g.max_abs();
        RealPoly f1 = axis_component(f, fr.I0);
        RealPoly g0 = detail::denoise(g[0], ambient);
        RealPoly g1 = detail::denoise(axis_component(g, fr.I0), ambient);
        RealPoly g2 = detail::denoise(axis_component(g, fr.J0), ambient);
        RealPoly g3 = detail::denoise(axis_component(g, fr.K0), ambient);
        if (g2.max_abs() > 1e-7 * std::max(1.0, g.max_abs())) return std::nullopt;
        auto a1 = exact_quotient(g1, f1);
        auto a3 = exact_quotient(g3, f1);
        if (!a1 || !a3) return std::nullopt;
        std::optional<RealPoly> a0;
        if (!f[0].is_zero()) {
            a0 = exact_quotient(g0, f[0]);
            if (!a0) return std::nullopt;
        } else {
            if (g0.max_abs() > 1e-7 * std::max(1.0, g.max_abs())) return std::nullopt;
            a0 = detail::sqrt_or_zero(*a1 * *a1 + *a3 * *a3,
                                      std::max(a1->max_abs(), a3->max_abs()));
            if (!a0) return std::nullopt;
        }
        // quotient noise tails must not survive into the square roots
        double qa = std::max({a0->max_abs(), a1->max_abs(), a3->max_abs()});
        *a0 = detail::denoise(*a0, qa, 1e-10);
        *a1 = detail::denoise(*a1, qa, 1e-10);
        *a3 = detail::denoise(*a3, qa, 1e-10);
        RealPoly balance = *a0 * *a0 - *a1 * *a1 - *a3 * *a3;
        double bs = std::max({(*a0 * *a0).max_abs(), (*a1 * *a1).max_abs(),
                              (*a3 * *a3).max_abs(), 1.0});
        if (balance.max_abs() > 1e-7 * bs) return std::nullopt;
        RealPoly u = detail::denoise(0.5 * (*a0 + *a1), qa, 1e-10);
        RealPoly v = detail::denoise(0.5 * (*a0 - *a1), qa, 1e-10);
        double s = std::max(a0->max_abs(), a1->max_abs());
        auto h0 = detail::sqrt_or_zero(u, s);
        auto h1 = detail::sqrt_or_zero(v, s);
        if (!h0 || !h1) return std::nullopt;
        RealPoly want = -2.0 * (*h0 * *h1);
        double ws = std::max({want.max_abs(), a3->max_abs(), 1.0});
        if ((*a3 - want).max_abs() > 1e-7 * ws)
            *h1 = -*h1;
        want = -2.0 * (*h0 * *h1);
        if ((*a3 - want).max_abs() > 1e-7 * ws) return std::nullopt;
        return verified(detail::along_axis(*h0, *h1, M0));
    }

    // general position; work in the frame with a > 0
    Frame fr = adapted_frame(I0, M0, /*positive_a=*/true);
    double a = fr.a, b = fr.b;
    double ambient = g.max_abs();
    RealPoly f1 = axis_component(f, fr.I0);
    RealPoly g0 = detail::denoise(g[0], ambient);
    RealPoly g1 = detail::denoise(axis_component(g, fr.I0), ambient);
    RealPoly g2 = detail::denoise(axis_component(g, fr.J0), ambient);
    RealPoly g3 = detail::denoise(axis_component(g, fr.K0), ambient);
    auto a2 = exact_quotient(g2, f1);
    auto a3 = exact_quotient(g3, f1);
    if (!a2 || !a3) return std::nullopt;

    if (a2->max_abs() <= 1e-9 * std::max(1.0, g.max_abs() / std::max(f1.max_abs(), 1e-300))) {
        // degenerate conjugator with no M0 component: h slice preserving
        if (a3->max_abs() > 1e-7 * std::max(1.0, a2->max_abs() + a3->max_abs()))
            return std::nullopt;
        auto a1 = exact_quotient(g1, f1);
        if (!a1) return std::nullopt;
        auto h0 = detail::sqrt_or_zero(*a1, a1->max_abs());
        if (!h0) return std::nullopt;
        return verified(SlicePoly(*h0));
    }

    RealPoly q2 = detail::denoise((1.0 / (2.0 * a * b)) * *a2,
                                  a2->max_abs() / std::abs(2.0 * a * b), 1e-10);
    auto h1 = detail::sqrt_or_zero(q2, a2->max_abs());
    if (!h1 || h1->is_zero()) return std::nullopt;
    std::optional<RealPoly> h0;
    if (a3->max_abs() <= 1e-9 * std::max(1.0, a2->max_abs())) {
        h0 = RealPoly();
    } else {
        auto t = exact_quotient(*a3, *h1);
        if (!t) return std::nullopt;
        h0 = (-1.0 / (2.0 * b)) * *t;
    }

    auto a1 = exact_quotient(g1, f1);
    if (!a1) return std::nullopt;
    if (!f[0].is_zero()) {
        auto a0 = exact_quotient(g0, f[0]);
        if (!a0) return std::nullopt;
        RealPoly cond4 = a * (*a0 - *a1) - b * *a2;
        double s4 = std::max({a0->max_abs(), a1->max_abs(), a2->max_abs(), 1.0});
        if (cond4.max_abs() > 1e-7 * s4) return std::nullopt;
    } else if (g0.max_abs() > 1e-7 * std::max(1.0, g.max_abs())) {
        return std::nullopt;
    }
    RealPoly cond5 = 2.0 * a * b * (*a1 * *a2) -
                     (a * a) * (*a3 * *a3) -
                     (2.0 * a * a - 1.0) * (*a2 * *a2);
    double s5 = std::max({(*a1 * *a2).max_abs(), (*a3 * *a3).max_abs(),
                          (*a2 * *a2).max_abs(), 1.0});
    if (cond5.max_abs() > 1e-7 * s5) return std::nullopt;

    return verified(detail::along_axis(*h0, *h1, M0));
}

/// Solves h * f * h^c = g for f preserving the slice of I0, given a one-slice
/// preserving conjugator h. Validated by reconjugation.
inline std::optional<SlicePoly> solve_conjugation_f(const SlicePoly& h,
                                                    const ImaginaryUnit& I0,
                                                    const SlicePoly& g) {
    SliceClass ch = classify(h);
    if (!ch.one_slice())
        throw error(errc::precondition_violated,
                    "h must preserve exactly one slice");
    ImaginaryUnit M0 = *ch.axis;
    RealPoly h0 = h[0];
    RealPoly h1 = axis_component(h, M0);
    RealPoly hs = symmetrized(h);
    if (g.is_zero()) return SlicePoly();

    auto verified = [&](const SlicePoly& fc) -> std::optional<SlicePoly> {
        if (rel_distance(conjugate_by(h, fc), g) <= 1e-7) return fc;
        return std::nullopt;
    };

    double align = std::abs(dot3(I0, M0));
    if (align >= 1.0 - 1e-9) {
        if (!in_slice(g, I0)) return std::nullopt;
        SlicePoly fc;
        for (int i = 0; i < 4; ++i) {
            auto q = exact_quotient(g[i], hs);
            if (!q) return std::nullopt;
            fc[i] = *q;
        }
        return verified(fc);
    }

    if (align <= 1e-9) {
        Frame fr = adapted_frame(I0, M0); // J0 = M0
        double ambient = g.max_abs();
        RealPoly g0 = detail::denoise(g[0], ambient);
        RealPoly g1 = detail::denoise(axis_component(g, fr.I0), ambient);
        RealPoly g2 = detail::denoise(axis_component(g, fr.J0), ambient);
        RealPoly g3 = detail::denoise(axis_component(g, fr.K0), ambient);
        if (g2.max_abs() > 1e-7 * std::max(1.0, g.max_abs())) return std::nullopt;
        auto f0 = exact_quotient(g0, hs);
        if (!f0) return std::nullopt;
        std::optional<RealPoly> f1;
        double hscale = std::max(h0.max_abs(), h1.max_abs());
        if (h0.max_abs() <= 1e-9 * hscale) {
            if (g3.max_abs() > 1e-7 * std::max(1.0, g.max_abs())) return std::nullopt;
            auto q = exact_quotient(g1, h1 * h1);
            if (!q) return std::nullopt;
            f1 = -1.0 * *q;
        } else {
            auto q = exact_quotient(g3, -2.0 * (h0 * h1));
            if (!q) return std::nullopt;
            f1 = q;
            RealPoly resid = 2.0 * (h0 * (h1 * g1)) + (h0 * h0 - h1 * h1) * g3;
            double rs = std::max({(h0 * (h1 * g1)).max_abs(),
                                  ((h0 * h0 - h1 * h1) * g3).max_abs(), 1.0});
            if (resid.max_abs() > 1e-7 * rs) return std::nullopt;
        }
        return verified(detail::along_axis(*f0, *f1, fr.I0));
    }

    Frame fr = adapted_frame(I0, M0, /*positive_a=*/true);
    double a = fr.a, b = fr.b;
    double ambient = g.max_abs();
    RealPoly g0 = detail::denoise(g[0], ambient);
    RealPoly g1 = detail::denoise(axis_component(g, fr.I0), ambient);
    RealPoly g2 = detail::denoise(axis_component(g, fr.J0), ambient);
    RealPoly g3 = detail::denoise(axis_component(g, fr.K0), ambient);
    auto f0 = exact_quotient(g0, hs);
    if (!f0) return std::nullopt;
    auto f1 = exact_quotient(g2, (2.0 * a * b) * (h1 * h1));
    if (!f1) return std::nullopt;

    RealPoly c8 = h0 * g2 + a * (h1 * g3);
    double s8 = std::max({(h0 * g2).max_abs(), (h1 * g3).max_abs(), 1.0});
    if (c8.max_abs() > 1e-7 * s8) return std::nullopt;
    RealPoly lhs9 = (h0 * h0 + (2.0 * a * a - 1.0) * (h1 * h1)) * g2;
    RealPoly rhs9 = (2.0 * a * b) * ((h1 * h1) * g1);
    double s9 = std::max({lhs9.max_abs(), rhs9.max_abs(), 1.0});
    if ((lhs9 - rhs9).max_abs() > 1e-7 * s9) return std::nullopt;

    return verified(detail::along_axis(*f0, *f1, fr.I0));
}

/// Joint structure of a pair whose *-products in both orders each preserve a
/// slice: the factors are twists of elements of one slice.
struct TwistedPair {
    enum class Case {
        SameSlice,
        SameSliceOrthogonal,
        DifferentSlicePlus,
        DifferentSliceMinus
    };
    Case kind;
    SlicePoly f_tilde;
    SlicePoly h_tilde;
    Frame frame;
    std::optional<RealPoly> alpha; // special form f = alpha * (axis of f)
};

inline TwistedPair twisted_pair_structure(const SlicePoly& f, const SlicePoly& h) {
    SlicePoly fh = star_mul(f, h);
    SlicePoly hf = star_mul(h, f);
    SliceClass cfh = classify(fh);
    SliceClass chf = classify(hf);
    if (!cfh.one_slice() || !chf.one_slice())
        throw error(errc::precondition_violated,
                    "both products must preserve exactly one slice");
    ImaginaryUnit I0 = *cfh.axis;
    ImaginaryUnit M0 = *chf.axis;

    TwistedPair out{TwistedPair::Case::SameSlice, {}, {}, orthonormal_completion(I0),
                    std::nullopt};

    SliceClass cf = classify(f);
    if (cf.one_slice() && std::abs(dot3(*cf.axis, I0)) <= 1e-7 &&
        f[0].max_abs() <= 1e-7 * f.max_abs())
        out.alpha = axis_component(f, *cf.axis);

    if (std::abs(dot3(I0, M0)) >= 1.0 - 1e-9) {
        if (in_slice(f, I0) && in_slice(h, I0)) {
            out.kind = TwistedPair::Case::SameSlice;
            out.f_tilde = f;
            out.h_tilde = h;
            return out;
        }
        Frame fr = out.frame;
        double sf = f.max_abs(), sh = h.max_abs();
        if (f[0].max_abs() > 1e-7 * sf ||
            axis_component(f, I0).max_abs() > 1e-7 * sf ||
            h[0].max_abs() > 1e-7 * sh ||
            axis_component(h, I0).max_abs() > 1e-7 * sh)
            throw error(errc::structure_not_found,
                        "factors do not carry the orthogonal twist form");
        SlicePoly ft = detail::along_axis(axis_component(f, fr.K0),
                                          -axis_component(f, fr.J0), I0);
        SlicePoly ht = detail::along_axis(axis_component(h, fr.J0),
                                          -axis_component(h, fr.K0), I0);
        if (rel_distance(star_mul(ft, SlicePoly::constant(fr.K0.axis())), f) > 1e-8 ||
            rel_distance(star_mul(SlicePoly::constant(fr.J0.axis()), ht), h) > 1e-8)
            throw error(errc::structure_not_found,
                        "orthogonal twist does not reassemble");
        out.kind = TwistedPair::Case::SameSliceOrthogonal;
        out.f_tilde = ft;
        out.h_tilde = ht;
        return out;
    }

    Frame fr = adapted_frame(I0, M0);
    out.frame = fr;
    for (int sign = +1; sign >= -1; sign -= 2) {
        double t = (fr.a + sign) / fr.b;
        Quaternion cr = Quaternion::real(1.0) + t * fr.K0.axis(); // right factor of f
        Quaternion cl = Quaternion::real(1.0) - t * fr.K0.axis(); // left factor of h
        SlicePoly ft = star_mul(f, SlicePoly::constant(inverse(cr)));
        SlicePoly ht = star_mul(SlicePoly::constant(inverse(cl)), h);
        if (!in_slice(ft, I0) || !in_slice(ht, I0)) continue;
        if (rel_distance(star_mul(ft, SlicePoly::constant(cr)), f) > 1e-8 ||
            rel_distance(star_mul(SlicePoly::constant(cl), ht), h) > 1e-8)
            continue;
        out.kind = sign > 0 ? TwistedPair::Case::DifferentSlicePlus
                            : TwistedPair::Case::DifferentSliceMinus;
        out.f_tilde = ft;
        out.h_tilde = ht;
        return out;
    }
    throw error(errc::structure_not_found, "no twist branch reassembles the pair");
}

} // namespace slicereg

#endif
