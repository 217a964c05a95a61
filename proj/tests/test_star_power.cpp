#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slicereg/star_power.hpp"

using namespace slicereg;

namespace {

std::mt19937 rng(998812);

RealPoly random_real_poly(int max_degree, int min_degree = 0) {
    std::uniform_int_distribution<int> dd(min_degree, max_degree);
    std::uniform_real_distribution<double> cd(-1.0, 1.0);
    std::vector<double> c(dd(rng) + 1);
    for (double& v : c) v = cd(rng);
    if (std::abs(c.back()) < 0.2) c.back() += (c.back() < 0 ? -0.6 : 0.6);
    return RealPoly(std::move(c));
}

SlicePoly random_slice_poly(int max_degree) {
    return {random_real_poly(max_degree), random_real_poly(max_degree),
            random_real_poly(max_degree), random_real_poly(max_degree)};
}

const SlicePoly q = SlicePoly::variable();
const SlicePoly ci = SlicePoly::constant({0, 1, 0, 0});
const SlicePoly cj = SlicePoly::constant({0, 0, 1, 0});

/// Base with no preserved slice whose vector norm is the perfect square
/// (s (1+q^2))^2: components (2q s, (1-q^2) s).
SlicePoly pythagorean_base(double xi, const RealPoly& s) {
    RealPoly rho = s * RealPoly({1, 0, 1});
    return SlicePoly(xi * rho, s * RealPoly({0, 2}), s * RealPoly({1, 0, -1}), {});
}

} // namespace

TEST_CASE("binary form coefficients") {
    BinaryForm q3 = binary_form(3);
    REQUIRE(q3.coeffs.size() == 2);
    CHECK(q3.coeffs[0] == 3);
    CHECK(q3.coeffs[1] == -1);

    BinaryForm q4 = binary_form(4);
    REQUIRE(q4.coeffs.size() == 2);
    CHECK(q4.coeffs[0] == 4);
    CHECK(q4.coeffs[1] == -4);

    BinaryForm q10 = binary_form(10);
    REQUIRE(q10.coeffs.size() == 5);
    CHECK(q10.coeffs[0] == 10);
    CHECK(q10.coeffs[1] == -120);
    CHECK(q10.coeffs[2] == 252);
    CHECK(q10.coeffs[3] == -120);
    CHECK(q10.coeffs[4] == 10);
    CHECK(q10.x_exponent(0) == 9);
    CHECK(q10.y_exponent(0) == 1);

    for (int d = 2; d <= 20; ++d)
        CHECK(binary_form(d).coeffs[0] == d);

    CHECK_THROWS_AS(binary_form(1), error);
}

TEST_CASE("sigma sets match the cotangent oracle") {
    for (int d = 3; d <= 12; ++d) {
        // oracle: the affine roots are cot(k pi / d), k = 1..d-1, nonzero
        std::vector<double> expect;
        for (int k = 1; k < d; ++k) {
            double c = std::cos(k * M_PI / d) / std::sin(k * M_PI / d);
            if (std::abs(c) > 1e-12) expect.push_back(c);
        }
        std::sort(expect.begin(), expect.end());

        SigmaSet s = sigma_set(d);
        CHECK(s.values.size() == static_cast<std::size_t>(d % 2 == 0 ? d - 2 : d - 1));
        REQUIRE(s.values.size() == expect.size());
        for (std::size_t t = 0; t < expect.size(); ++t)
            CHECK(std::abs(s.values[t] - expect[t]) <= 1e-9);
        // symmetric under negation
        for (std::size_t t = 0; t < s.values.size(); ++t)
            CHECK(std::abs(s.values[t] + s.values[s.values.size() - 1 - t]) <= 1e-9);
    }
    CHECK_THROWS_AS(sigma_set(2), error);
}

TEST_CASE("sigma frozen values") {
    SigmaSet s3 = sigma_set(3);
    REQUIRE(s3.values.size() == 2);
    CHECK(s3.values[1] == doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-12));

    SigmaSet s4 = sigma_set(4);
    REQUIRE(s4.values.size() == 2);
    CHECK(s4.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s4.values[1] == doctest::Approx(1.0).epsilon(1e-12));

    SigmaSet s5 = sigma_set(5);
    REQUIRE(s5.values.size() == 4);
    CHECK(s5.values[2] == doctest::Approx(0.3249196962).epsilon(1e-8));
    CHECK(s5.values[3] == doctest::Approx(1.3763819205).epsilon(1e-8));
}

TEST_CASE("star powers") {
    CHECK(near(star_power(q + ci, 2),
               SlicePoly(RealPoly({-1, 0, 1}), RealPoly({0, 2}), {}, {})));
    CHECK(near(star_power(random_slice_poly(3), 0), SlicePoly(RealPoly::constant(1.0))));
    CHECK(near(star_power(cj, 2), SlicePoly(RealPoly::constant(-1.0))));
}

TEST_CASE("closed expansion equals the iterated power") {
    CHECK(near(power_expand(q + ci, 1), q + ci));
    // d = 3 on q + i: (q^3 - 3q) + (3q^2 - 1) i
    CHECK(near(power_expand(q + ci, 3),
               SlicePoly(RealPoly({0, -3, 0, 1}), RealPoly({-1, 0, 3}), {}, {})));

    for (int t = 0; t < 200; ++t) {
        SlicePoly f = random_slice_poly(5);
        std::uniform_int_distribution<int> dd(0, 10);
        int d = dd(rng);
        CHECK(rel_distance(power_expand(f, d), star_power(f, d)) <= 1e-8);
    }
}

TEST_CASE("vector multiplier controls the vector part of powers") {
    for (int t = 0; t < 100; ++t) {
        SlicePoly f = random_slice_poly(4);
        std::uniform_int_distribution<int> dd(1, 8);
        int d = dd(rng);
        SlicePoly p = star_power(f, d);
        SlicePoly expect = power_vector_multiplier(f, d) * vector_part(f);
        CHECK(rel_distance(vector_part(p), expect) <= 1e-8);
        bool mult_zero = near_zero(power_vector_multiplier(f, d),
                                   std::pow(std::max(1.0, f.max_abs()), d));
        bool vec_zero = near_zero(vector_part(p), p.max_abs());
        CHECK(mult_zero == vec_zero);
    }
}

TEST_CASE("slice-preserving powers via the sigma criterion") {
    // the d = 4 instance: f = (1+q^2) + 2q i + (1-q^2) j, xi = 1
    SlicePoly f = pythagorean_base(1.0, RealPoly::constant(1.0));
    REQUIRE(classify(f).no_slice());
    PowerSliceVerdict v = power_slice_preserving(f, 4);
    CHECK(v.slice_preserving());
    REQUIRE(v.xi.has_value());
    CHECK(*v.xi == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(classify(star_power(f, 4)).all_slices());

    // d = 3 with xi = sqrt(3)/3
    SlicePoly g = pythagorean_base(std::sqrt(3.0) / 3.0, RealPoly::constant(1.0));
    PowerSliceVerdict w = power_slice_preserving(g, 3);
    CHECK(w.slice_preserving());
    CHECK(*w.xi == doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-9));

    // degree mismatch between f0^2 and the vector norm
    SlicePoly mism(RealPoly::constant(1.0), RealPoly::constant(1.0), RealPoly({0, 1}), {});
    CHECK_FALSE(power_slice_preserving(mism, 4).slice_preserving());
}

TEST_CASE("non-members of the sigma family fail") {
    SlicePoly bad(RealPoly::constant(1.0), RealPoly::constant(1.0), RealPoly({0, 1}), {});
    REQUIRE(classify(bad).no_slice());
    PowerSliceVerdict v = power_slice_preserving(bad, 4);
    CHECK_FALSE(v.slice_preserving());
    CHECK(classify(star_power(bad, 4)).no_slice());
}

TEST_CASE("perturbed witnesses stop preserving") {
    for (int d = 3; d <= 8; ++d) {
        for (double xi : sigma_set(d).values) {
            if (xi <= 0) continue;
            SlicePoly f = pythagorean_base(xi, RealPoly({0.5, 1.0}));
            REQUIRE(classify(f).no_slice());
            PowerSliceVerdict v = power_slice_preserving(f, d);
            CHECK(v.slice_preserving());
            CHECK(classify(star_power(f, d)).all_slices());

            SlicePoly g = pythagorean_base(xi * (1.0 + 1e-3), RealPoly({0.5, 1.0}));
            PowerSliceVerdict w = power_slice_preserving(g, d);
            CHECK_FALSE(w.slice_preserving());
            CHECK(classify(star_power(g, d)).no_slice());
        }
    }
}

TEST_CASE("purely vectorial bases") {
    SlicePoly f({}, RealPoly({0, 1}), RealPoly({1}), {});
    REQUIRE(classify(f).no_slice());
    PowerSliceVerdict even = power_slice_preserving(f, 2);
    CHECK(even.slice_preserving());
    PowerSliceVerdict odd = power_slice_preserving(f, 3);
    CHECK_FALSE(odd.slice_preserving());

    CHECK_THROWS_AS(power_slice_preserving(q + ci, 4), error);
}
