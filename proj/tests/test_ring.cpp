#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hdlab/matrix.hpp>
#include <hdlab/multipoly.hpp>

using namespace hdlab;

TEST_CASE("Rational canonical form and arithmetic") {
    Rational a(BigInt(6), BigInt(-4));
    CHECK(a.numerator() == BigInt(-3));
    CHECK(a.denominator() == BigInt(2));
    CHECK(a.to_string() == "-3/2");
    CHECK(Rational::from_string("-3/2") == a);
    CHECK(Rational(BigInt(0), BigInt(7)).is_zero());
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
    CHECK(Rational(2) + Rational(BigInt(1), BigInt(2)) == Rational(BigInt(5), BigInt(2)));
    CHECK((Rational(3) / Rational(BigInt(1), BigInt(3))) == Rational(9));
    // factorial growth stays exact
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(pow_big(BigInt(6), 6) == BigInt(46656));
}

TEST_CASE("Ring axioms hold on random elements") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    auto rnd_rat = [&] { return Rational(BigInt(d(rng)), BigInt(2 * std::abs(d(rng)) + 1)); };
    for (int c = 0; c < 200; ++c) {
        Rational a = rnd_rat(), b = rnd_rat(), e = rnd_rat();
        CHECK((a + b) * e == a * e + b * e);
        CHECK((a * b) * e == a * (b * e));
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        GaussianRational x(rnd_rat(), rnd_rat()), y(rnd_rat(), rnd_rat()), z(rnd_rat(), rnd_rat());
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("GaussianRational serialization round trip") {
    for (const char* s : {"0", "3", "-1/2", "2i", "-1i", "1/2-3i", "1/2+3/4i", "1i"}) {
        auto v = GaussianRational::from_string(s);
        CHECK(GaussianRational::from_string(v.to_string()) == v);
    }
    CHECK(GaussianRational::i_power(2) == GaussianRational(-1));
    CHECK(GaussianRational::i_power(-1) == GaussianRational(Rational(0), Rational(-1)));
    CHECK((GaussianRational::i() * GaussianRational::i()) == GaussianRational(-1));
}

TEST_CASE("poly_eval examples") {
    // p = x0^2 - x1^2
    MultiPoly p = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 0) -
                  MultiPoly::variable(2, 1) * MultiPoly::variable(2, 1);
    std::vector<GaussianRational> p11{GaussianRational(1), GaussianRational(1)};
    std::vector<GaussianRational> p21{GaussianRational(2), GaussianRational(1)};
    CHECK(poly_eval<GaussianRational>(p, p11) == GaussianRational(0));
    CHECK(poly_eval<GaussianRational>(p, p21) == GaussianRational(3));
    MultiPoly c5 = MultiPoly::constant(2, GaussianRational(5));
    CHECK(poly_eval<GaussianRational>(c5, p21) == GaussianRational(5));
    std::vector<GaussianRational> wrong{GaussianRational(1)};
    CHECK_THROWS(poly_eval<GaussianRational>(p, wrong));
}

TEST_CASE("poly_coefficient examples") {
    MultiPoly p = (MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1)).scaled(GaussianRational(3)) +
                  MultiPoly::variable(2, 0) * MultiPoly::variable(2, 0);
    CHECK(poly_coefficient(p, {1, 1}) == GaussianRational(3));
    CHECK(poly_coefficient(p, {2, 0}) == GaussianRational(1));
    MultiPoly q = (MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1)).scaled(GaussianRational(3));
    CHECK(poly_coefficient(q, {2, 0}) == GaussianRational(0));
    // det_2 of [[x0,x1],[x1,x0]]: coefficient of x1^2 is -1 (2x2 cofactor expansion)
    SquareMatrix<MultiPoly> m(2);
    m.at(0, 0) = MultiPoly::variable(2, 0);
    m.at(0, 1) = MultiPoly::variable(2, 1);
    m.at(1, 0) = MultiPoly::variable(2, 1);
    m.at(1, 1) = MultiPoly::variable(2, 0);
    CHECK(poly_coefficient(determinant(m), {0, 2}) == GaussianRational(-1));
}

TEST_CASE("eval is multiplicative at random points over exact rings") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    auto rnd_poly = [&](int nvars) {
        MultiPoly p(nvars);
        for (int t = 0; t < 5; ++t) {
            Monomial m(nvars, 0);
            for (int k = 0; k < nvars; ++k) m[k] = std::abs(d(rng)) % 3;
            p.add_term(std::move(m), GaussianRational(d(rng), d(rng)));
        }
        return p;
    };
    for (int c = 0; c < 100; ++c) {
        auto p = rnd_poly(3), q = rnd_poly(3);
        std::vector<GaussianRational> z{GaussianRational(d(rng), d(rng)), GaussianRational(d(rng), d(rng)),
                                        GaussianRational(d(rng), d(rng))};
        CHECK((p * q).eval<GaussianRational>(z) == p.eval<GaussianRational>(z) * q.eval<GaussianRational>(z));
    }
}

TEST_CASE("MultiPoly canonical serialization is graded-lex and parses back") {
    MultiPoly p(3);
    p.add_term({0, 0, 0}, GaussianRational(7));
    p.add_term({1, 0, 1}, GaussianRational(Rational(-1), Rational(2)));
    p.add_term({2, 0, 0}, GaussianRational(1));
    p.add_term({0, 1, 0}, GaussianRational(Rational(0), Rational(1)));
    CHECK(p.to_string() == "1 * x0^2 + -1/2i * x0*x2 + 1i * x1 + 7");
    CHECK(MultiPoly::parse(p.to_string(), 3) == p);
    CHECK(MultiPoly(4).to_string() == "0");
    CHECK(MultiPoly::parse("0", 4) == MultiPoly(4));
    // total degree of a product adds for nonzero operands
    MultiPoly q = MultiPoly::variable(3, 1) + MultiPoly::constant(3, GaussianRational(2));
    CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
}

TEST_CASE("MultiPoly substitution composes with evaluation") {
    // p(x0,x1) = x0^2 + x1, substitute x0 -> y0+y1, x1 -> y0*y1
    MultiPoly p = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    std::vector<MultiPoly> images{MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1),
                                  MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1)};
    auto s = p.substitute(images);
    std::vector<GaussianRational> y{GaussianRational(2), GaussianRational(-3)};
    std::vector<GaussianRational> x{y[0] + y[1], y[0] * y[1]};
    CHECK(s.eval<GaussianRational>(y) == p.eval<GaussianRational>(x));
}
