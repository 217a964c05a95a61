#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slicereg/quaternion.hpp"

using namespace slicereg;

namespace {

std::mt19937 rng(20260808);

Quaternion random_quaternion() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(rng), d(rng), d(rng), d(rng)};
}

ImaginaryUnit random_unit() {
    for (;;) {
        Quaternion q = random_quaternion().vec();
        double n = q.norm();
        if (n > 0.2) return ImaginaryUnit((1.0 / n) * q);
    }
}

} // namespace

TEST_CASE("basis products") {
    Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(near(i * j, k));
    CHECK(near(j * i, -k));
    CHECK(near(j * k, i));
    CHECK(near(k * i, j));
    CHECK(near(i * i, Quaternion::real(-1)));

    Quaternion q = random_quaternion();
    CHECK(near(q * Quaternion::real(1), q));

    Quaternion a{1, 1, 0, 0}, b{1, 0, 1, 0};
    CHECK(near(a * b, Quaternion{1, 1, 1, 1}));
}

TEST_CASE("conjugate, norm, inverse") {
    CHECK(near(conj(Quaternion{1, 2, 0, 0}), Quaternion{1, -2, 0, 0}));
    CHECK(norm(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0));
    CHECK(near(inverse(Quaternion{0, 1, 0, 0}), Quaternion{0, -1, 0, 0}));
    CHECK_THROWS_AS(inverse(Quaternion{}), error);

    Quaternion q = random_quaternion();
    CHECK(near(q * conj(q), Quaternion::real(q.norm_sq())));
}

TEST_CASE("product laws on random samples") {
    for (int t = 0; t < 1000; ++t) {
        Quaternion p = random_quaternion();
        Quaternion q = random_quaternion();
        Quaternion r = random_quaternion();
        Quaternion lhs = (p * q) * r;
        Quaternion rhs = p * (q * r);
        double scale = std::max(lhs.norm(), 1.0);
        CHECK((lhs - rhs).norm() <= 1e-12 * scale);
        CHECK((conj(p * q) - conj(q) * conj(p)).norm() <= 1e-12);
        CHECK(norm(p * q) == doctest::Approx(norm(p) * norm(q)).epsilon(1e-12));
    }
}

TEST_CASE("imaginary unit constructor") {
    ImaginaryUnit u(0.6, 0.8, 0);
    CHECK(u.axis().x == doctest::Approx(0.6));
    CHECK(u.axis().y == doctest::Approx(0.8));
    CHECK(near(u.axis() * u.axis(), Quaternion::real(-1)));
    CHECK_THROWS_AS(ImaginaryUnit(3, 4, 0), error);

    // small drift is renormalized, large drift rejected
    CHECK_NOTHROW(ImaginaryUnit(Quaternion{0, 1.0 + 5e-7, 0, 0}));
    CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0, 1.1, 0, 0}), error);
    CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0.5, 1, 0, 0}), error);
}

TEST_CASE("adapted frame on the standard pair") {
    Frame f = adapted_frame(ImaginaryUnit::i(), ImaginaryUnit::j());
    CHECK(near(f.I0.axis(), Quaternion{0, 1, 0, 0}));
    CHECK(near(f.J0.axis(), Quaternion{0, 0, 1, 0}));
    CHECK(near(f.K0.axis(), Quaternion{0, 0, 0, 1}));
    CHECK(f.a == doctest::Approx(0.0));
    CHECK(f.b == doctest::Approx(1.0));
}

TEST_CASE("adapted frame splits a tilted axis") {
    double s = 1.0 / std::sqrt(2.0);
    Frame f = adapted_frame(ImaginaryUnit::i(), ImaginaryUnit(s, s, 0));
    CHECK(f.a == doctest::Approx(s));
    CHECK(f.b == doctest::Approx(s));
    CHECK(near(f.J0.axis(), Quaternion{0, 0, 1, 0}));
    CHECK(near(f.K0.axis(), Quaternion{0, 0, 0, 1}));
}

TEST_CASE("degenerate frame is rejected") {
    CHECK_THROWS_AS(adapted_frame(ImaginaryUnit::i(), ImaginaryUnit::i()), error);
    CHECK_THROWS_AS(adapted_frame(ImaginaryUnit::i(), -ImaginaryUnit::i()), error);
}

TEST_CASE("frame properties on random pairs") {
    for (int t = 0; t < 200; ++t) {
        ImaginaryUnit I0 = random_unit();
        ImaginaryUnit M0 = random_unit();
        if (std::abs(dot3(I0, M0)) > 1.0 - 1e-3) continue;
        Frame f = adapted_frame(I0, M0);
        CHECK(f.b > 0.0);
        CHECK(f.a * f.a + f.b * f.b == doctest::Approx(1.0));
        CHECK((f.I0.axis() * f.J0.axis() - f.K0.axis()).norm() <= 1e-12);
        CHECK((f.J0.axis() * f.K0.axis() - f.I0.axis()).norm() <= 1e-12);
        CHECK((f.K0.axis() * f.I0.axis() - f.J0.axis()).norm() <= 1e-12);
        CHECK((f.m0() - M0.axis()).norm() <= 1e-9);

        Frame g = adapted_frame(I0, M0, /*positive_a=*/true);
        CHECK(g.a >= 0.0);
        CHECK(g.b > 0.0);
        CHECK((g.I0.axis() * g.J0.axis() - g.K0.axis()).norm() <= 1e-12);
        CHECK((g.m0() - M0.axis()).norm() <= 1e-9);
    }
}
