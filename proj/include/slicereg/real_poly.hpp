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

#ifndef SLICEREG_REAL_POLY_HPP
#define SLICEREG_REAL_POLY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "slicereg/error.hpp"
#include "slicereg/tolerance.hpp"

namespace slicereg {

/// Real-coefficient univariate polynomial, coefficients stored in ascending
/// degree. Kept canonical: leading coefficients that are negligible relative
/// to the largest coefficient are trimmed, and the zero polynomial is the
/// empty coefficient list (degree() == -1).
class RealPoly {
  public:
    RealPoly() = default;
    RealPoly(std::initializer_list<double> c) : c_(c) { trim(); }
    explicit RealPoly(std::vector<double> c) : c_(std::move(c)) { trim(); }

    static RealPoly constant(double v) { return RealPoly({v}); }
    static RealPoly variable() { return RealPoly({0.0, 1.0}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    double operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }

    const std::vector<double>& coeffs() const { return c_; }

    double leading() const { return c_.empty() ? 0.0 : c_.back(); }

    double max_abs() const {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    double operator()(double x) const {
        double y = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) y = y * x + c_[i];
        return y;
    }

    std::complex<double> operator()(std::complex<double> x) const {
        std::complex<double> y = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) y = y * x + c_[i];
        return y;
    }

    /// Bound on |p| along |x| <= |point|, used to scale residual tests.
    double magnitude_at(double r) const {
        double s = 0.0, p = 1.0;
        r = std::abs(r);
        for (double v : c_) {
            s += std::abs(v) * p;
            p *= r;
        }
        return s;
    }

    RealPoly operator-() const {
        std::vector<double> r(c_);
        for (double& v : r) v = -v;
        return RealPoly(std::move(r));
    }

  private:
    std::vector<double> c_;

    void trim() {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        if (m == 0.0) {
            c_.clear();
            return;
        }
        double tol = 1e-13 * m;
        while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
    }
};

inline RealPoly operator+(const RealPoly& p, const RealPoly& q) {
    std::vector<double> r(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] + q[i];
    return RealPoly(std::move(r));
}

inline RealPoly operator-(const RealPoly& p, const RealPoly& q) {
    std::vector<double> r(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] - q[i];
    return RealPoly(std::move(r));
}

inline RealPoly operator*(const RealPoly& p, const RealPoly& q) {
    if (p.is_zero() || q.is_zero()) return RealPoly();
    std::vector<double> r(p.coeffs().size() + q.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            r[i + j] += p[i] * q[j];
    return RealPoly(std::move(r));
}

inline RealPoly operator*(double s, const RealPoly& p) {
    std::vector<double> r(p.coeffs());
    for (double& v : r) v *= s;
    return RealPoly(std::move(r));
}

inline RealPoly operator*(const RealPoly& p, double s) { return s * p; }

inline RealPoly derivative(const RealPoly& p) {
    if (p.degree() < 1) return RealPoly();
    std::vector<double> r(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        r[i - 1] = p[i] * static_cast<double>(i);
    return RealPoly(std::move(r));
}

inline bool near(const RealPoly& p, const RealPoly& q) {
    double scale = std::max(p.max_abs(), q.max_abs());
    std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(p[i] - q[i]) > tolerance().abs + tolerance().rel * scale)
            return false;
    return true;
}

inline bool near_zero(const RealPoly& p, double scale = 1.0) {
    return p.max_abs() <= tolerance().abs + tolerance().rel * std::abs(scale);
}

struct DivRem {
    RealPoly quotient;
    RealPoly remainder;
};

/// f = g*quotient + remainder, deg remainder < deg g.
inline DivRem divrem(const RealPoly& f, const RealPoly& g) {
    if (g.is_zero())
        throw error(errc::division_by_zero, "polynomial division by zero");
    if (f.degree() < g.degree()) return {RealPoly(), f};
    std::vector<double> rem(f.coeffs());
    std::vector<double> quo(f.coeffs().size() - g.coeffs().size() + 1, 0.0);
    double lg = g.leading();
    int dg = g.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
        double q = rem[k] / lg;
        quo[k - dg] = q;
        if (q == 0.0) continue;
        for (int i = 0; i <= dg; ++i) rem[k - dg + i] -= q * g[i];
        rem[k] = 0.0;
    }
    rem.resize(dg > 0 ? dg : 0);
    return {RealPoly(std::move(quo)), RealPoly(std::move(rem))};
}

/// True when g divides f: the division remainder is negligible against
/// ||f|| * (1 + ||g||) at the global `div` tolerance.
inline bool divides(const RealPoly& g, const RealPoly& f) {
    if (g.is_zero())
        throw error(errc::division_by_zero, "divisibility by zero polynomial");
    if (f.is_zero()) return true;
    DivRem d = divrem(f, g);
    return d.remainder.max_abs() <=
           tolerance().div * f.max_abs() * (1.0 + g.max_abs());
}

/// Quotient f/g when g divides f per the `divides` contract, else nothing.
inline std::optional<RealPoly> exact_quotient(const RealPoly& f, const RealPoly& g) {
    if (g.is_zero())
        throw error(errc::division_by_zero, "division by zero polynomial");
    if (f.is_zero()) return RealPoly();
    DivRem d = divrem(f, g);
    if (d.remainder.max_abs() >
        tolerance().div * f.max_abs() * (1.0 + g.max_abs()))
        return std::nullopt;
    return d.quotient;
}

/// Complex roots of a real polynomial, conjugate pairs folded into
/// (alpha, beta > 0) with a shared multiplicity.
struct RootSet {
    struct Real {
        double x;
        int multiplicity;
    };
    struct Pair {
        double alpha;
        double beta; // > 0
        int multiplicity;
    };

    std::vector<Real> real_roots;
    std::vector<Pair> complex_pairs;
    double leading = 1.0;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& r : real_roots) n += r.multiplicity;
        for (const auto& p : complex_pairs) n += 2 * p.multiplicity;
        return n;
    }

    RealPoly rebuild() const {
        RealPoly p = RealPoly::constant(leading);
        for (const auto& r : real_roots)
            for (int m = 0; m < r.multiplicity; ++m)
                p = p * RealPoly({-r.x, 1.0});
        for (const auto& c : complex_pairs)
            for (int m = 0; m < c.multiplicity; ++m)
                p = p * RealPoly({c.alpha * c.alpha + c.beta * c.beta,
                                  -2.0 * c.alpha, 1.0});
        return p;
    }
};

namespace detail {

/// Aberth-Ehrlich simultaneous iteration. Expects a nonconstant polynomial;
/// returns all complex roots (unclustered). Initial guesses sit on a
/// deterministically perturbed circle of Cauchy-bound radius.
inline std::vector<std::complex<double>> aberth(const RealPoly& poly) {
    using cd = std::complex<double>;
    int n = poly.degree();
    std::vector<double> c(poly.coeffs());
    double lc = c.back();
    for (double& v : c) v /= lc;

    if (n == 1) return {cd(-c[0], 0.0)};

    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    double radius = 1.0 + bound;

    std::vector<cd> z(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * M_PI * k / n + 0.7;
        double r = radius * (0.9 + 0.05 * std::cos(3.7 * k + 0.3));
        z[k] = cd(r * std::cos(theta), r * std::sin(theta));
    }

    auto eval = [&](cd x, cd& p, cd& dp) {
        p = cd(1.0, 0.0); // monic
        dp = cd(0.0, 0.0);
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + c[i];
        }
    };

    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            cd p, dp;
            eval(z[i], p, dp);
            if (std::abs(p) == 0.0) continue;
            cd nr = (std::abs(dp) > 0.0) ? p / dp : cd(1e-3, 1e-3);
            cd s(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                cd d = z[i] - z[j];
                if (std::abs(d) < 1e-300) d = cd(1e-12, 1e-12);
                s += 1.0 / d;
            }
            cd denom = 1.0 - nr * s;
            cd w = (std::abs(denom) > 1e-300) ? nr / denom : nr;
            z[i] -= w;
            if (std::abs(w) > 5e-14 * (1.0 + std::abs(z[i]))) done = false;
        }
        if (done) return z;
    }
    // Accept if every residual is already small relative to the local scale.
    for (int i = 0; i < n; ++i) {
        cd p, dp;
        eval(z[i], p, dp);
        double scale = 0.0, pw = 1.0;
        for (int k = 0; k <= n; ++k) {
            scale += (k < n ? std::abs(c[k]) : 1.0) * pw;
            pw *= std::abs(z[i]);
        }
        if (std::abs(p) > 1e-8 * scale)
            throw error(errc::root_finding_failed,
                        "root iteration did not converge");
    }
    return z;
}

/// Approximate polynomial GCD over doubles (Euclid with noise threshold eps).
/// Inputs are treated up to scale; the result is monic.
inline RealPoly approx_gcd(RealPoly u, RealPoly v, double eps) {
    auto normalize = [](RealPoly& p) {
        double m = p.max_abs();
        if (m > 0.0) p = (1.0 / m) * p;
    };
    auto gcd_trim = [eps](const RealPoly& p) {
        // drop leading coefficients that are noise at the gcd threshold
        std::vector<double> c(p.coeffs());
        double m = p.max_abs();
        while (!c.empty() && std::abs(c.back()) <= eps * m) c.pop_back();
        return RealPoly(std::move(c));
    };
    normalize(u);
    normalize(v);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        RealPoly r = divrem(u, v).remainder;
        if (r.max_abs() <= eps) r = RealPoly();
        u = v;
        v = gcd_trim(r);
        normalize(v);
    }
    if (u.is_zero()) return u;
    return (1.0 / u.leading()) * u;
}

/// Yun square-free decomposition: returns levels a_1, a_2, ... with
/// p ~ lc * prod a_i^i (each a_i monic, possibly constant).
inline std::vector<RealPoly> squarefree_levels(const RealPoly& p, double eps) {
    RealPoly pm = (1.0 / p.leading()) * p;
    RealPoly dp = derivative(pm);
    RealPoly g = approx_gcd(pm, dp, eps);
    std::vector<RealPoly> levels;
    if (g.degree() <= 0) {
        levels.push_back(pm);
        return levels;
    }
    auto quo = [](const RealPoly& a, const RealPoly& b) {
        return divrem(a, b).quotient;
    };
    // cancellation noise in d must snap to zero or it poisons later levels
    auto snap = [](RealPoly& d, const RealPoly& b) {
        if (d.max_abs() <= 1e-10 * std::max(1.0, derivative(b).max_abs()))
            d = RealPoly();
    };
    RealPoly b = quo(pm, g);
    RealPoly d = quo(dp, g) - derivative(b);
    snap(d, b);
    int max_levels = p.degree() + 1;
    for (int level = 0; level < max_levels && b.degree() > 0; ++level) {
        RealPoly a = approx_gcd(b, d, eps);
        if (a.is_zero()) break;
        levels.push_back(a);
        b = quo(b, a);
        d = quo(d, a) - derivative(b);
        snap(d, b);
    }
    // a leftover nonconstant b means the decomposition went bad; the caller
    // cross-checks the claimed degree and falls back
    return levels;
}

struct RawRoot {
    std::complex<double> z;
    int multiplicity;
};

inline void newton_polish(const RealPoly& p, std::complex<double>& z) {
    RealPoly dp = derivative(p);
    for (int it = 0; it < 8; ++it) {
        std::complex<double> f = p(z);
        std::complex<double> df = dp(z);
        if (std::abs(df) < 1e-300) break;
        std::complex<double> step = f / df;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
}

/// Groups raw roots into a conjugate-paired RootSet. Roots are clustered
/// transitively within tau; clusters hugging the real axis become real
/// roots and the rest must match an equal-weight mirror cluster across the
/// axis. Structurally inconsistent clusterings yield nothing, so callers
/// can sweep tau and keep the configuration that rebuilds best.
inline std::optional<RootSet> assemble_rootset(const std::vector<RawRoot>& raw,
                                               double lc, double tau,
                                               int expected_degree) {
    std::vector<std::size_t> parent(raw.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (std::abs(raw[i].z - raw[j].z) <= tau) parent[find(i)] = find(j);

    struct Cluster {
        std::complex<double> z;
        int m;
    };
    std::vector<Cluster> reals, upper, lower;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (find(i) != i) continue;
        std::complex<double> sum{};
        int m = 0;
        for (std::size_t j = 0; j < raw.size(); ++j)
            if (find(j) == i) {
                sum += raw[j].z * double(raw[j].multiplicity);
                m += raw[j].multiplicity;
            }
        std::complex<double> c = sum / double(m);
        if (std::abs(c.imag()) <= tau)
            reals.push_back({c, m});
        else if (c.imag() > 0)
            upper.push_back({c, m});
        else
            lower.push_back({c, m});
    }

    RootSet rs;
    rs.leading = lc;
    int total = 0;
    for (const auto& r : reals) {
        rs.real_roots.push_back({r.z.real(), r.m});
        total += r.m;
    }
    double match_tol = std::max(4.0 * tau, 1e-9);
    std::vector<bool> used(lower.size(), false);
    for (const auto& u : upper) {
        std::size_t bestj = lower.size();
        double bestd = match_tol;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(std::conj(u.z) - lower[j].z);
            if (d <= bestd) {
                bestd = d;
                bestj = j;
            }
        }
        if (bestj == lower.size()) return std::nullopt; // unmatched mirror
        used[bestj] = true;
        int m = u.m + lower[bestj].m;
        if (m % 2 != 0) return std::nullopt;
        std::complex<double> c =
            (u.z * double(u.m) + std::conj(lower[bestj].z) * double(lower[bestj].m)) /
            double(m);
        rs.complex_pairs.push_back({c.real(), std::abs(c.imag()), m / 2});
        total += m;
    }
    for (bool b : used)
        if (!b) return std::nullopt;
    if (total != expected_degree) return std::nullopt;

    std::sort(rs.real_roots.begin(), rs.real_roots.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
    std::sort(rs.complex_pairs.begin(), rs.complex_pairs.end(),
              [](const auto& a, const auto& b) {
                  return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
              });
    return rs;
}

/// Newton-polishes every root on the derivative that makes it simple.
inline void polish_rootset(const RealPoly& f, RootSet& rs) {
    std::vector<RealPoly> derivs{f};
    auto deriv_for = [&](int m) -> const RealPoly& {
        while (static_cast<int>(derivs.size()) < m)
            derivs.push_back(derivative(derivs.back()));
        return derivs[m - 1];
    };
    for (auto& r : rs.real_roots) {
        std::complex<double> z(r.x, 0.0);
        newton_polish(deriv_for(r.multiplicity), z);
        r.x = z.real();
    }
    for (auto& p : rs.complex_pairs) {
        std::complex<double> z(p.alpha, p.beta);
        newton_polish(deriv_for(p.multiplicity), z);
        if (std::abs(z.imag()) > 1e-14 * (1.0 + std::abs(z.real()))) {
            p.alpha = z.real();
            p.beta = std::abs(z.imag());
        }
    }
}

inline double rebuild_error(const RealPoly& f, const RootSet& rs) {
    RealPoly r = rs.rebuild();
    double scale = std::max(f.max_abs(), r.max_abs());
    if (scale == 0.0) return 0.0;
    return (r - f).max_abs() / scale;
}

} // namespace detail

/// All complex roots of f with multiplicities. Multiple roots are resolved
/// through a square-free decomposition so their multiplicities come out
/// integer-exact; a plain clustered Aberth pass is kept as fallback. The
/// returned positions are Newton-polished on the square-free factors.
inline RootSet roots(const RealPoly& f) {
    if (f.is_zero())
        throw error(errc::precondition_violated, "roots of the zero polynomial");
    if (f.degree() == 0) {
        RootSet rs;
        rs.leading = f.leading();
        return rs;
    }
    int n = f.degree();
    std::optional<RootSet> best;
    double best_err = 1e300;
    // candidates arrive most-degenerate first (exact multiplicity structure,
    // then coarse-to-fine clusterings); a later candidate must win by a
    // decisive margin, so noise-level rebuild differences cannot promote a
    // spurious split of a multiple root
    auto consider = [&](std::optional<RootSet> rs) {
        if (!rs) return;
        detail::polish_rootset(f, *rs);
        // rebuild errors below the coefficient noise floor are ties
        double err = std::max(detail::rebuild_error(f, *rs), 1e-14);
        if (!best || err < 0.3 * best_err) {
            best = std::move(rs);
            best_err = err;
        }
    };
    auto radius = [](const std::vector<detail::RawRoot>& raw) {
        double r = 0.0;
        for (const auto& rr : raw) r = std::max(r, std::abs(rr.z));
        return r;
    };

    // square-free route: multiplicities come out integer-exact when the
    // approximate gcd chain holds together; the chain threshold is swept
    // and the rebuild error arbitrates
    for (double geps : {1e-7, 1e-9, 1e-5}) {
        if (best && best_err <= 1e-10) break;
        try {
            std::vector<RealPoly> levels = detail::squarefree_levels(f, geps);
            int claimed = 0;
            for (std::size_t i = 0; i < levels.size(); ++i)
                claimed += static_cast<int>(i + 1) * std::max(levels[i].degree(), 0);
            if (claimed != n) continue;
            std::vector<detail::RawRoot> raw;
            for (std::size_t i = 0; i < levels.size(); ++i) {
                if (levels[i].degree() <= 0) continue;
                auto zs = detail::aberth(levels[i]);
                for (auto& z : zs) {
                    detail::newton_polish(levels[i], z);
                    raw.push_back({z, static_cast<int>(i + 1)});
                }
            }
            consider(detail::assemble_rootset(raw, f.leading(),
                                              1e-6 * (1.0 + radius(raw)), n));
        } catch (const error&) {
            // fall through to the direct route
        }
    }

    // direct route: sweep the cluster radius and keep whatever rebuilds best
    if (!best || best_err > 1e-10) {
        try {
            auto zs = detail::aberth(f);
            std::vector<detail::RawRoot> raw;
            raw.reserve(zs.size());
            for (auto& z : zs) raw.push_back({z, 1});
            double r = radius(raw);
            for (double t : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-9, 1e-12})
                consider(detail::assemble_rootset(raw, f.leading(),
                                                  t * (1.0 + r), n));
        } catch (const error&) {
            if (!best) throw;
        }
    }

    if (!best)
        throw error(errc::root_finding_failed, "no usable root configuration");

    // residual gate
    const RootSet& rs = *best;
    for (const auto& r : rs.real_roots)
        if (std::abs(f(r.x)) >
            tolerance().root * (f.max_abs() + f.magnitude_at(r.x)))
            throw error(errc::root_finding_failed, "real root residual too large");
    for (const auto& p : rs.complex_pairs)
        if (std::abs(f(std::complex<double>(p.alpha, p.beta))) >
            tolerance().root * (f.max_abs() + f.magnitude_at(std::hypot(p.alpha, p.beta))))
            throw error(errc::root_finding_failed, "complex root residual too large");
    return rs;
}

/// Decides f(x) >= 0 for all real x: every real root must have even
/// multiplicity and samples between/beyond the roots must be nonnegative.
inline bool nonneg_even_real_zeros(const RealPoly& f) {
    if (f.is_zero())
        throw error(errc::precondition_violated, "sign analysis of zero polynomial");
    if (f.degree() == 0) return f.leading() >= 0.0;
    RootSet rs = roots(f);
    for (const auto& r : rs.real_roots)
        if (r.multiplicity % 2 != 0) return false;
    std::vector<double> samples;
    if (rs.real_roots.empty()) {
        samples.push_back(0.0);
    } else {
        samples.push_back(rs.real_roots.front().x - 1.0);
        for (std::size_t i = 0; i + 1 < rs.real_roots.size(); ++i)
            samples.push_back(0.5 * (rs.real_roots[i].x + rs.real_roots[i + 1].x));
        samples.push_back(rs.real_roots.back().x + 1.0);
    }
    for (double s : samples)
        if (f(s) < -tolerance().div * f.magnitude_at(s)) return false;
    return true;
}

/// Square root in the polynomial ring: returns s with s*s = f when f is a
/// perfect square (all root multiplicities even, positive leading
/// coefficient), normalized to a positive leading coefficient.
inline std::optional<RealPoly> sqrt_if_square(const RealPoly& f) {
    if (f.is_zero())
        throw error(errc::precondition_violated, "square root of zero polynomial");
    if (f.leading() < 0.0) return std::nullopt;
    if (f.degree() == 0) return RealPoly::constant(std::sqrt(f.leading()));
    if (f.degree() % 2 != 0) return std::nullopt;
    RootSet rs = roots(f);
    RealPoly s = RealPoly::constant(std::sqrt(rs.leading));
    for (const auto& r : rs.real_roots) {
        if (r.multiplicity % 2 != 0) return std::nullopt;
        for (int m = 0; m < r.multiplicity / 2; ++m) s = s * RealPoly({-r.x, 1.0});
    }
    for (const auto& p : rs.complex_pairs) {
        if (p.multiplicity % 2 != 0) return std::nullopt;
        for (int m = 0; m < p.multiplicity / 2; ++m)
            s = s * RealPoly({p.alpha * p.alpha + p.beta * p.beta,
                              -2.0 * p.alpha, 1.0});
    }
    RealPoly sq = s * s;
    if ((sq - f).max_abs() > tolerance().div * std::max(1.0, f.max_abs()))
        return std::nullopt;
    return s;
}

} // namespace slicereg

#endif
