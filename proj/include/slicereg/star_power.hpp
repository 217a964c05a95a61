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

#ifndef SLICEREG_STAR_POWER_HPP
#define SLICEREG_STAR_POWER_HPP

#include <optional>
#include <vector>

#include "slicereg/real_poly.hpp"
#include "slicereg/slice_poly.hpp"

namespace slicereg {

namespace detail {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    k = std::min(k, n - k);
    for (int t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;
    }
    return r;
}

} // namespace detail

/// The odd binary form of degree d: coefficient (-1)^n C(d, 2n+1) on the
/// monomial x^{d-(2n+1)} y^{2n+1}. Integer-exact for d <= 62.
struct BinaryForm {
    int d;
    std::vector<long long> coeffs; // index n

    int y_exponent(int n) const { return 2 * n + 1; }
    int x_exponent(int n) const { return d - (2 * n + 1); }

    /// Dehomogenization at y = 1 as a polynomial in x (degree d - 1).
    RealPoly dehomogenized() const {
        std::vector<double> c(static_cast<std::size_t>(d), 0.0);
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            c[static_cast<std::size_t>(d) - (2 * n + 1)] =
                static_cast<double>(coeffs[n]);
        return RealPoly(std::move(c));
    }
};

inline BinaryForm binary_form(int d) {
    if (d < 2 || d > 62)
        throw error(errc::invalid_degree, "binary form needs 2 <= d <= 62");
    BinaryForm q{d, {}};
    for (int n = 0; 2 * n + 1 <= d; ++n) {
        long long c = detail::binomial(d, 2 * n + 1);
        q.coeffs.push_back((n % 2 == 0) ? c : -c);
    }
    return q;
}

/// The nonzero affine real roots of the degree-d binary form, symmetric
/// under negation: d - 2 values for even d, d - 1 for odd d.
struct SigmaSet {
    int d;
    std::vector<double> values; // sorted ascending
};

inline SigmaSet sigma_set(int d) {
    if (d < 3)
        throw error(errc::invalid_degree, "sigma set needs d >= 3");
    RealPoly p = binary_form(d).dehomogenized();
    RootSet rs = roots(p);
    SigmaSet out{d, {}};
    for (const auto& r : rs.real_roots) {
        if (std::abs(r.x) <= 1e-9) continue; // the root at the origin (even d)
        for (int m = 0; m < r.multiplicity; ++m) out.values.push_back(r.x);
    }
    if (!rs.complex_pairs.empty())
        throw error(errc::root_finding_failed,
                    "binary form produced non-real roots");
    std::sort(out.values.begin(), out.values.end());
    return out;
}

/// f^{*d} by repeated squaring (powers of one element commute).
inline SlicePoly star_power(const SlicePoly& f, int d) {
    if (d < 0)
        throw error(errc::invalid_degree, "negative *-power");
    SlicePoly acc = SlicePoly(RealPoly::constant(1.0));
    SlicePoly base = f;
    int e = d;
    while (e > 0) {
        if (e & 1) acc = star_mul(acc, base);
        e >>= 1;
        if (e > 0) base = star_mul(base, base);
    }
    return acc;
}

/// The scalar multiplier of f_v in the closed expansion of f^{*d}:
/// sum_n (-1)^n C(d, 2n+1) f0^{d-(2n+1)} (f_v^s)^n.
inline RealPoly power_vector_multiplier(const SlicePoly& f, int d) {
    RealPoly f0 = f[0];
    RealPoly fvs = symmetrized(vector_part(f));
    RealPoly sum;
    for (int n = 0; 2 * n + 1 <= d; ++n) {
        double c = static_cast<double>(detail::binomial(d, 2 * n + 1));
        if (n % 2 == 1) c = -c;
        RealPoly term = RealPoly::constant(c);
        for (int t = 0; t < d - (2 * n + 1); ++t) term = term * f0;
        for (int t = 0; t < n; ++t) term = term * fvs;
        sum = sum + term;
    }
    return sum;
}

/// Closed-form expansion of f^{*d} through the splitting f = f0 + f_v:
/// even binomial terms build the scalar part, odd terms multiply f_v.
inline SlicePoly power_expand(const SlicePoly& f, int d) {
    if (d < 0)
        throw error(errc::invalid_degree, "negative *-power");
    RealPoly f0 = f[0];
    RealPoly fvs = symmetrized(vector_part(f));
    RealPoly scalar;
    for (int n = 0; 2 * n <= d; ++n) {
        double c = static_cast<double>(detail::binomial(d, 2 * n));
        if (n % 2 == 1) c = -c;
        RealPoly term = RealPoly::constant(c);
        for (int t = 0; t < d - 2 * n; ++t) term = term * f0;
        for (int t = 0; t < n; ++t) term = term * fvs;
        scalar = scalar + term;
    }
    return SlicePoly(scalar) + power_vector_multiplier(f, d) * vector_part(f);
}

/// Verdict for the slice behaviour of f^{*d} when f itself preserves no
/// slice: slice preserving iff f0^2 = xi^2 f_v^s for some xi in the sigma
/// set (xi = 0 stands in when f0 vanishes and d is even).
struct PowerSliceVerdict {
    enum class Kind { SlicePreserving, OneSlice, No };
    Kind kind;
    std::optional<double> xi;
    std::optional<ImaginaryUnit> axis;

    bool slice_preserving() const { return kind == Kind::SlicePreserving; }
};

inline PowerSliceVerdict power_slice_preserving(const SlicePoly& f, int d) {
    if (d < 2)
        throw error(errc::invalid_degree, "power test needs d >= 2");
    SliceClass cf = classify(f);
    if (!cf.no_slice())
        throw error(errc::precondition_violated,
                    "base must preserve no slice");

    RealPoly f0 = f[0];
    RealPoly fvs = symmetrized(vector_part(f));
    double scale = f.max_abs();

    auto cross_check = [&](bool expected_preserving) {
        SliceClass cp = classify(star_power(f, d));
        if (expected_preserving != cp.all_slices())
            throw error(errc::formula_mismatch,
                        "power verdict disagrees with direct classification");
    };

    if (f0.max_abs() <= 1e-12 * scale) {
        // purely vectorial base: even powers collapse onto the reals
        bool preserving = (d % 2 == 0);
        cross_check(preserving);
        return {preserving ? PowerSliceVerdict::Kind::SlicePreserving
                           : PowerSliceVerdict::Kind::No,
                std::nullopt, std::nullopt};
    }

    std::optional<double> witness;
    if (d >= 3) {
        RealPoly f0sq = f0 * f0;
        if (f0sq.degree() == fvs.degree()) {
            RealPoly m1 = (1.0 / f0sq.leading()) * f0sq;
            RealPoly m2 = (1.0 / fvs.leading()) * fvs;
            double prop = (m1 - m2).max_abs();
            if (prop <= 1e-7 * std::max(1.0, std::max(m1.max_abs(), m2.max_abs()))) {
                double lambda = f0sq.leading() / fvs.leading();
                if (lambda > 0.0) {
                    double xi_actual = std::sqrt(lambda);
                    for (double xi : sigma_set(d).values) {
                        if (xi <= 0.0) continue;
                        if (std::abs(xi - xi_actual) <= 1e-7 * (1.0 + xi_actual)) {
                            witness = xi;
                            break;
                        }
                    }
                }
            }
        }
    }

    if (witness) {
        // consistency: f_v^s must be a perfect square here
        if (!sqrt_if_square(fvs))
            throw error(errc::formula_mismatch,
                        "slice-preserving power without square vector norm");
        cross_check(true);
        return {PowerSliceVerdict::Kind::SlicePreserving, witness, std::nullopt};
    }
    cross_check(false);
    return {PowerSliceVerdict::Kind::No, std::nullopt, std::nullopt};
}

} // namespace slicereg

#endif
