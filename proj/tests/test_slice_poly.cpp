#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slicereg/slice_poly.hpp"
#include "slicereg/zero_structure.hpp"

using namespace slicereg;

namespace {

std::mt19937 rng(5150123);

RealPoly random_real_poly(int max_degree) {
    std::uniform_int_distribution<int> dd(0, max_degree);
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

Quaternion random_quaternion() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(rng), d(rng), d(rng), d(rng)};
}

ImaginaryUnit random_unit() {
    for (;;) {
        Quaternion q = random_quaternion().vec();
        if (q.norm() > 0.2) return ImaginaryUnit((1.0 / q.norm()) * q);
    }
}

const SlicePoly q = SlicePoly::variable();
const SlicePoly ci = SlicePoly::constant({0, 1, 0, 0});
const SlicePoly cj = SlicePoly::constant({0, 0, 1, 0});
const SlicePoly ck = SlicePoly::constant({0, 0, 0, 1});
SlicePoly cr(double v) { return SlicePoly(RealPoly::constant(v)); }

} // namespace

TEST_CASE("component and right-coefficient views round trip") {
    SlicePoly f(RealPoly::variable(), RealPoly::constant(1.0), {}, {}); // q + i
    auto a = to_right_coefficients(f);
    REQUIRE(a.size() == 2);
    CHECK(near(a[0], Quaternion{0, 1, 0, 0}));
    CHECK(near(a[1], Quaternion{1, 0, 0, 0}));
    CHECK(near(from_right_coefficients(a), f));

    CHECK(to_right_coefficients(SlicePoly()).empty());

    // q^2 + 2q i + (1 - q^2) j  <->  [j, 2i, 1 - j]
    SlicePoly g(RealPoly({0, 0, 1}), RealPoly({0, 2}), RealPoly({1, 0, -1}), {});
    auto b = to_right_coefficients(g);
    REQUIRE(b.size() == 3);
    CHECK(near(b[0], Quaternion{0, 0, 1, 0}));
    CHECK(near(b[1], Quaternion{0, 2, 0, 0}));
    CHECK(near(b[2], Quaternion{1, 0, -1, 0}));
    CHECK(near(from_right_coefficients(b), g));
}

TEST_CASE("star product on frozen examples") {
    CHECK(near(star_mul(q - ci, q + ci), SlicePoly(RealPoly({1, 0, 1}))));
    SlicePoly g = random_slice_poly(4);
    CHECK(near(star_mul(cr(1.0), g), g));

    // (q - i)*(q - j) = q^2 - q(i + j) + k
    SlicePoly p = star_mul(q - ci, q - cj);
    CHECK(near(p, SlicePoly(RealPoly({0, 0, 1}), RealPoly({0, -1}),
                            RealPoly({0, -1}), RealPoly({1}))));
}

TEST_CASE("conjugate, symmetrized, parts") {
    CHECK(near(star_conj(q + ci), q - ci));
    CHECK(near(symmetrized(q + ci), RealPoly({1, 0, 1})));
    SlicePoly f(RealPoly({0, 0, 1}), RealPoly({0, 2}), RealPoly({1}), {});
    CHECK(near(vector_part(f), SlicePoly({}, RealPoly({0, 2}), RealPoly({1}), {})));
    CHECK(near(real_part(f), RealPoly({0, 0, 1})));
    // f = f0 + fv split
    SlicePoly g = random_slice_poly(5);
    CHECK(near(SlicePoly(real_part(g)) + vector_part(g), g));
    CHECK(near(SlicePoly(real_part(g)) - vector_part(g), star_conj(g)));
}

TEST_CASE("pairing and wedge") {
    CHECK(near(pairing(q + ci, q + ci), RealPoly({1, 0, 1})));
    SlicePoly f = random_slice_poly(4);
    CHECK(near_zero(wedge(f, f), f.max_abs() * f.max_abs()));
    CHECK(near(wedge(ci, cj), ck));

    // f*g = f0 g0 - <fv,gv> + f0 gv + g0 fv + fv ^ gv
    for (int t = 0; t < 100; ++t) {
        SlicePoly a = random_slice_poly(4), b = random_slice_poly(4);
        SlicePoly lhs = star_mul(a, b);
        SlicePoly va = vector_part(a), vb = vector_part(b);
        SlicePoly rhs = SlicePoly(real_part(a) * real_part(b) - pairing(va, vb)) +
                        real_part(a) * vb + real_part(b) * va + wedge(va, vb);
        CHECK(rel_distance(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("hermitian product") {
    SlicePoly f = random_slice_poly(4);
    CHECK(near(hermitian(f, f), SlicePoly(symmetrized(f))));
    CHECK(near(hermitian(q + ci, q - ci), star_mul(q + ci, q + ci)));
    CHECK(near(hermitian(cr(1.0), cj), -cj));
    // (H(g,f))^c = H(f,g)
    SlicePoly g = random_slice_poly(4);
    CHECK(rel_distance(star_conj(hermitian(g, f)), hermitian(f, g)) <= 1e-12);
}

TEST_CASE("hermitian decomposition over the pairing") {
    for (int t = 0; t < 500; ++t) {
        SlicePoly f = random_slice_poly(4), g = random_slice_poly(4);
        SlicePoly rhs = SlicePoly(pairing(f, g)) +
                        pairing(f, star_mul(ci, g)) * ci +
                        pairing(f, star_mul(cj, g)) * cj +
                        pairing(f, star_mul(ck, g)) * ck;
        CHECK(rel_distance(hermitian(f, g), rhs) <= 1e-9);
    }
}

TEST_CASE("evaluation") {
    CHECK(near(evaluate(star_mul(q, q), Quaternion{1, 1, 0, 0}), Quaternion{0, 2, 0, 0}));
    CHECK(near(evaluate(q + ci, Quaternion{0, 1, 0, 0}), Quaternion{0, 2, 0, 0}));
    SlicePoly p = star_mul(q - ci, q - cj);
    CHECK(near(evaluate(p, Quaternion::real(2.0)), Quaternion{4, -2, -2, 1}));
}

TEST_CASE("product evaluation identity at non-real points") {
    int done = 0;
    while (done < 200) {
        SlicePoly f = random_slice_poly(4), g = random_slice_poly(4);
        Quaternion p = random_quaternion();
        if (p.vec().norm() < 0.1) continue;
        Quaternion fp = evaluate(f, p);
        if (fp.norm() < 1e-3) continue;
        Quaternion moved = inverse(fp) * p * fp;
        Quaternion lhs = evaluate(star_mul(f, g), p);
        Quaternion rhs = fp * evaluate(g, moved);
        double scale = std::max(1.0, lhs.norm());
        CHECK((lhs - rhs).norm() <= 1e-8 * scale);
        ++done;
    }
}

TEST_CASE("star algebra laws on random samples") {
    for (int t = 0; t < 300; ++t) {
        SlicePoly a = random_slice_poly(6), b = random_slice_poly(6),
                  c = random_slice_poly(6);
        CHECK(rel_distance(star_mul(star_mul(a, b), c),
                           star_mul(a, star_mul(b, c))) <= 1e-9);
        CHECK(rel_distance(star_conj(star_mul(a, b)),
                           star_mul(star_conj(b), star_conj(a))) <= 1e-9);
        RealPoly lhs = symmetrized(star_mul(a, b));
        RealPoly rhs = symmetrized(a) * symmetrized(b);
        double scale = std::max(lhs.max_abs(), rhs.max_abs());
        CHECK((lhs - rhs).max_abs() <= 1e-9 * std::max(scale, 1.0));
        // the symmetrized has no vector part by construction (it is RealPoly)
    }
}

TEST_CASE("slice preserving factors commute") {
    for (int t = 0; t < 100; ++t) {
        RealPoly r1 = random_real_poly(4), r2 = random_real_poly(4);
        Quaternion a1 = random_quaternion(), a2 = random_quaternion();
        SlicePoly f = r1 * SlicePoly::constant(a1);
        SlicePoly g = r2 * SlicePoly::constant(a2);
        CHECK(rel_distance(star_mul(f, g),
                           (r1 * r2) * SlicePoly::constant(a1 * a2)) <= 1e-10);

        SlicePoly real = SlicePoly(r1);
        SlicePoly h = random_slice_poly(4);
        CHECK(rel_distance(star_mul(real, h), star_mul(h, real)) <= 1e-12);
        CHECK(rel_distance(star_mul(real, h), r1 * h) <= 1e-12);
    }
    // one-slice pairs with a common axis commute
    for (int t = 0; t < 50; ++t) {
        ImaginaryUnit u = random_unit();
        RealPoly a0 = random_real_poly(4), a1 = random_real_poly(4);
        RealPoly b0 = random_real_poly(4), b1 = random_real_poly(4);
        SlicePoly f = SlicePoly(a0) + a1 * SlicePoly::constant(u.axis());
        SlicePoly g = SlicePoly(b0) + b1 * SlicePoly::constant(u.axis());
        CHECK(rel_distance(star_mul(f, g), star_mul(g, f)) <= 1e-10);
    }
}

TEST_CASE("classification") {
    CHECK(classify(SlicePoly(RealPoly({3, 1, 1}))).all_slices());

    SliceClass one = classify(q + ci);
    REQUIRE(one.one_slice());
    CHECK(near(one.axis->axis(), Quaternion{0, 1, 0, 0}));

    CHECK(classify(ci + star_mul(q, cj)).no_slice());
    CHECK_THROWS_AS(classify(SlicePoly()), error);

    // axis is sign-normalized: first nonzero coordinate positive
    SliceClass neg = classify(q - cj);
    REQUIRE(neg.one_slice());
    CHECK(near(neg.axis->axis(), Quaternion{0, 0, 1, 0}));

    for (int t = 0; t < 100; ++t) {
        ImaginaryUnit u = random_unit();
        SlicePoly f = SlicePoly(random_real_poly(5)) +
                      random_real_poly(5) * SlicePoly::constant(u.axis());
        SliceClass c = classify(f);
        REQUIRE(c.one_slice());
        CHECK(std::abs(dot3(*c.axis, u)) > 1.0 - 1e-9);
    }
}

TEST_CASE("one-slice iff vector norm is a square with constant direction") {
    for (int t = 0; t < 50; ++t) {
        ImaginaryUnit u = random_unit();
        RealPoly f1 = random_real_poly(5);
        SlicePoly f = SlicePoly(random_real_poly(5)) +
                      f1 * SlicePoly::constant(u.axis());
        SliceClass c = classify(f);
        REQUIRE(c.one_slice());
        auto s = sqrt_if_square(symmetrized(vector_part(f)));
        REQUIRE(s.has_value());
        SlicePoly expect = *s * SlicePoly::constant(c.axis->axis());
        SlicePoly v = vector_part(f);
        bool plus = rel_distance(expect, v) <= 1e-6;
        bool minus = rel_distance(-expect, v) <= 1e-6;
        CHECK((plus || minus));
    }
}

TEST_CASE("products in the real ring iff conjugate-dependent factors") {
    for (int t = 0; t < 50; ++t) {
        // f = r1 * w, h = r2 * w^c gives f*h = r1 r2 w^s in the real ring
        SlicePoly w = random_slice_poly(3);
        RealPoly r1 = random_real_poly(3), r2 = random_real_poly(3);
        SlicePoly f = r1 * w;
        SlicePoly h = r2 * star_conj(w);
        CHECK(classify(star_mul(f, h)).all_slices());
        CHECK(classify(star_mul(h, f)).all_slices());
        // and h^s scales f against (f*h)*h^c proportionally
        SlicePoly lhs = star_mul(star_mul(f, h), star_conj(h));
        SlicePoly rhs = symmetrized(h) * f;
        CHECK(rel_distance(lhs, rhs) <= 1e-9);
    }
    for (int t = 0; t < 50; ++t) {
        SlicePoly f = random_slice_poly(3), h = random_slice_poly(3);
        SliceClass cf = classify(star_mul(f, h));
        SliceClass ch = classify(star_mul(h, f));
        CHECK(cf.all_slices() == ch.all_slices()); // generic: both false
    }
}

TEST_CASE("bilinear slice test") {
    CHECK(bilinear_slice_test(q + ci, q - ci, ImaginaryUnit::i()));
    CHECK_FALSE(bilinear_slice_test(q + ci, q - cj, ImaginaryUnit::i()));
    SlicePoly f = SlicePoly(random_real_poly(4));
    SlicePoly g = SlicePoly(random_real_poly(4));
    CHECK(bilinear_slice_test(f, g, random_unit()));

    for (int t = 0; t < 100; ++t) {
        SlicePoly a = random_slice_poly(3), b = random_slice_poly(3);
        ImaginaryUnit u = random_unit();
        SliceClass c = classify(star_mul(a, b));
        bool in_u = c.all_slices() ||
                    (c.one_slice() && std::abs(dot3(*c.axis, u)) > 1.0 - 1e-9);
        CHECK(bilinear_slice_test(a, b, u) == in_u);
    }
}
