#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slicereg/expr.hpp"
#include "slicereg/json_io.hpp"

using namespace slicereg;

namespace {

std::mt19937 rng(246801);

Expr random_expr(int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 4);
    Expr e;
    switch (pick(rng)) {
        case 0: e.kind = Expr::Kind::Variable; return e;
        case 1: e.kind = Expr::Kind::UnitI; return e;
        case 2: e.kind = Expr::Kind::UnitJ; return e;
        case 3: e.kind = Expr::Kind::UnitK; return e;
        case 4: {
            e.kind = Expr::Kind::Number;
            std::uniform_real_distribution<double> v(0.0, 8.0);
            std::uniform_int_distribution<int> style(0, 2);
            double x = v(rng);
            if (style(rng) == 0) x = std::floor(x);
            e.value = x;
            return e;
        }
        case 5:
            e.kind = Expr::Kind::Negate;
            e.kids.push_back(random_expr(depth - 1));
            return e;
        case 6:
        case 7: {
            e.kind = pick(rng) % 2 == 0 ? Expr::Kind::Add : Expr::Kind::Subtract;
            e.kids.push_back(random_expr(depth - 1));
            e.kids.push_back(random_expr(depth - 1));
            return e;
        }
        case 8: {
            e.kind = Expr::Kind::Multiply;
            e.kids.push_back(random_expr(depth - 1));
            e.kids.push_back(random_expr(depth - 1));
            return e;
        }
        default: {
            e.kind = Expr::Kind::Power;
            std::uniform_int_distribution<int> p(0, 4);
            e.exponent = p(rng);
            e.kids.push_back(random_expr(depth - 1));
            return e;
        }
    }
}

bool same_tree(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Expr::Kind::Number && a.value != b.value) return false;
    if (a.kind == Expr::Kind::Power && a.exponent != b.exponent) return false;
    if (a.kids.size() != b.kids.size()) return false;
    for (std::size_t t = 0; t < a.kids.size(); ++t)
        if (!same_tree(a.kids[t], b.kids[t])) return false;
    return true;
}

} // namespace

TEST_CASE("parsing worked examples") {
    SlicePoly p = eval_expr("(q - i)*(q + i)");
    CHECK(near(p, SlicePoly(RealPoly({1, 0, 1}))));

    SlicePoly s = eval_expr("q^2*k + 3");
    CHECK(near(s, SlicePoly(RealPoly({3}), {}, {}, RealPoly({0, 0, 1}))));

    CHECK(near(eval_expr("i*j"), SlicePoly::constant({0, 0, 0, 1})));
    CHECK(near(eval_expr("(1+i)*(1+j)"), SlicePoly::constant({1, 1, 1, 1})));
    CHECK(eval_expr("q*i - i*q").is_zero());
    CHECK(near(eval_expr("2.5"), SlicePoly(RealPoly::constant(2.5))));
    CHECK(near(eval_expr("-q^2"), SlicePoly(RealPoly({0, 0, -1}))));
    CHECK(near(eval_expr("1e2"), SlicePoly(RealPoly::constant(100.0))));
}

TEST_CASE("precedence: caret binds tighter than star") {
    CHECK(near(eval_expr("q^2*k"), SlicePoly({}, {}, {}, RealPoly({0, 0, 1}))));
    CHECK(near(eval_expr("2*q^2"), SlicePoly(RealPoly({0, 0, 2}))));
    CHECK(near(eval_expr("(2*q)^2"), SlicePoly(RealPoly({0, 0, 4}))));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse("(q -");
        FAIL("expected a syntax error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(e.offset() == 4);
    }
    try {
        parse("q + * i");
        FAIL("expected a syntax error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(e.offset() == 4);
    }
    try {
        parse("q ^ i");
        FAIL("expected a syntax error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(parse("q q"), error);
    CHECK_THROWS_AS(parse("q $ 1"), error);
    CHECK_THROWS_AS(parse(""), error);
    CHECK_THROWS_AS(parse("q * x"), error);
}

TEST_CASE("print-parse fixpoint on random trees") {
    for (int t = 0; t < 1000; ++t) {
        Expr e = random_expr(4);
        std::string s1 = print(e);
        Expr back = parse(s1);
        CHECK(same_tree(e, back));
        CHECK(print(back) == s1);
        // evaluation agrees as well
        CHECK(rel_distance(eval_expr(e), eval_expr(back)) == 0.0);
    }
}

TEST_CASE("json round trips are bit-exact") {
    CHECK(to_json(eval_expr("q + i")).dump() ==
          R"({"basis":["1","i","j","k"],"components":[[0.0,1.0],[1.0],[],[]]})");

    CHECK(to_json(SlicePoly()).dump() ==
          R"({"basis":["1","i","j","k"],"components":[[],[],[],[]]})");

    std::uniform_real_distribution<double> v(-1.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        Expr e = random_expr(4);
        SlicePoly f = eval_expr(e);
        SlicePoly back = slice_poly_from_json(nlohmann::json::parse(to_json(f).dump()));
        for (int c = 0; c < 4; ++c) {
            REQUIRE(back[c].coeffs().size() == f[c].coeffs().size());
            for (std::size_t k = 0; k < f[c].coeffs().size(); ++k)
                CHECK(back[c][k] == f[c][k]); // exact
        }
    }

    CHECK_THROWS_AS(slice_poly_from_json(nlohmann::json::parse("{}")), error);
    CHECK_THROWS_AS(
        slice_poly_from_json(nlohmann::json::parse(R"({"components":[[],[]]})")),
        error);
    CHECK_THROWS_AS(slice_poly_from_json(nlohmann::json::parse(
                        R"({"basis":["1","x","y","z"],"components":[[],[],[],[]]})")),
                    error);
}
