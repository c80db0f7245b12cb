#include <doctest.h>

#include <random>

#include "spinfactor/scalar.hpp"

using namespace spinfactor;

namespace {

Scalar P(const char* s) { return Scalar::parse(s); }

Scalar random_poly(std::mt19937& rng, const std::vector<Scalar>& vars, int terms) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> exp(0, 2);
    Scalar out;
    for (int k = 0; k < terms; ++k) {
        Scalar m(coeff(rng));
        for (const auto& v : vars) m *= v.pow(exp(rng));
        out += m;
    }
    return out;
}

}  // namespace

TEST_CASE("t of S(alpha,E) as a rational function") {
    const Scalar a = Scalar::variable("alpha");
    const Scalar t = (a * a - 1) / (a * (a - 2));
    CHECK(t == P("(alpha^2 - 1)/(alpha^2 - 2*alpha)"));
    CHECK(t.to_string() == "(alpha^2 - 1)/(alpha^2 - 2*alpha)");
    CHECK(t.substitute({{"alpha", Scalar(3)}}) == Scalar::fraction(8, 3));
    CHECK(t.substitute({{"alpha", Scalar(-1)}}).is_zero());
    CHECK(t.substitute({{"alpha", a}}) == t);
}

TEST_CASE("relations on reserved generators") {
    const Scalar l = Scalar::variable("lambda");
    CHECK((l * l).is_zero());
    CHECK(((1 + l) * (1 - l)).is_one());
    CHECK(Scalar(1) / (1 + l) == 1 - l);
    CHECK_THROWS_AS(Scalar(1) / l, NonInvertibleError);
    const Scalar i = Scalar::variable("i");
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar(1) / i == -i);
    CHECK(Scalar(2) / (1 + i) == 1 - i);
    CHECK(P("(1+i)^4") == Scalar(-4));
}

TEST_CASE("division and poles") {
    const Scalar a = Scalar::variable("alpha");
    CHECK(a / a == Scalar(1));
    CHECK(((a + 1) * (a - 1) - (a * a - 1)).is_zero());
    CHECK_THROWS_AS(a / Scalar(0), DivisionByZeroError);
    const Scalar f = Scalar(1) / (a - 2);
    try {
        (void)f.substitute({{"alpha", Scalar(2)}});
        FAIL("expected pole");
    } catch (const PoleError& e) {
        CHECK(e.factor() == "alpha - 2");
    }
    const Scalar t = Scalar::variable("t");
    CHECK_FALSE(((2 * a - 1) * (t - 1)).is_zero());
}

TEST_CASE("multivariate gcd reduction") {
    const Scalar x = Scalar::variable("x"), y = Scalar::variable("y"), z = Scalar::variable("z");
    const Scalar g = x * y + z * z - 3;
    const Scalar f = (g * (x + y)) / (g * (x - z * y));
    CHECK(f == (x + y) / (x - z * y));
    CHECK(f.denominator() == (y * z - x).numerator());
    const Scalar h = ((x * x - y * y) * (z + 1)) / ((x + y) * (z * z - 1));
    CHECK(h == (x - y) / (z - 1));
}

TEST_CASE("parse and print round trip") {
    std::mt19937 rng(7);
    const std::vector<Scalar> vars{Scalar::variable("a"), Scalar::variable("b"), Scalar::variable("lambda")};
    for (int k = 0; k < 40; ++k) {
        Scalar p = random_poly(rng, vars, 4);
        Scalar q = random_poly(rng, {vars[0], vars[1]}, 3);
        if (q.is_zero()) continue;
        const Scalar r = p / q;
        CHECK(Scalar::parse(r.to_string()) == r);
        CHECK(Scalar::parse(Scalar::parse(r.to_string()).to_string()).to_string() == r.to_string());
    }
    CHECK(P("-3/2*a^2 + 1/3") .to_string() == "-3/2*a^2 + 1/3");
    CHECK_THROWS_AS(P("a +* b"), ParseError);
    CHECK_THROWS_AS(P("(a"), ParseError);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    const std::vector<Scalar> vars{Scalar::variable("a"), Scalar::variable("b"), Scalar::variable("c")};
    const Assignment at{{"a", Scalar::fraction(3, 2)}, {"b", Scalar(-2)}, {"c", Scalar::variable("b") + 1}};
    for (int k = 0; k < 25; ++k) {
        Scalar x = random_poly(rng, vars, 4);
        Scalar y = random_poly(rng, vars, 3);
        CHECK((x * y).substitute(at) == x.substitute(at) * y.substitute(at));
        CHECK((x + y).substitute(at) == x.substitute(at) + y.substitute(at));
    }
}

TEST_CASE("gcd reduction is sound") {
    std::mt19937 rng(5);
    const std::vector<Scalar> vars{Scalar::variable("a"), Scalar::variable("b")};
    for (int k = 0; k < 25; ++k) {
        const Scalar common = random_poly(rng, vars, 2);
        const Scalar n = random_poly(rng, vars, 3) * common;
        const Scalar d = random_poly(rng, vars, 3) * common;
        if (d.is_zero() || n.is_zero()) continue;
        const Scalar r = n / d;
        CHECK((r.numerator() * d.numerator() - n.numerator() * r.denominator()).is_zero());
        CHECK(Scalar(r.numerator()) / Scalar(r.denominator()) == r);
    }
}
