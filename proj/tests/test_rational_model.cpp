#include <doctest.h>

#include <orbcc/model.hpp>
#include <orbcc/rational.hpp>

using namespace orbcc;

TEST_CASE("parse/render round trip") {
    for (const char* s : {"0", "1", "-1", "5/3", "-7/2", "223729/4761",
                          "1079/96", "100000000000000000000/3"}) {
        CHECK(render_rational(parse_rational(s)) == s);
    }
}

TEST_CASE("parse_rational normalizes") {
    CHECK(render_rational(parse_rational("4/6")) == "2/3");
    CHECK(render_rational(parse_rational("-4/6")) == "-2/3");
    CHECK(render_rational(parse_rational("0/7")) == "0");
    CHECK(render_rational(parse_rational("6/3")) == "2");
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* s : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5",
                          "1 / 2", "1//2", "--1"}) {
        CHECK_THROWS_AS(parse_rational(s), ParseError);
    }
}

TEST_CASE("render_approx gives 6 significant digits") {
    CHECK(render_approx(parse_rational("1/3")) == "0.333333");
    CHECK(render_approx(parse_rational("-7/2")) == "-3.5");
    CHECK(render_approx(parse_rational("0")) == "0");
}

TEST_CASE("multiplicity reciprocal and infinity") {
    CHECK(Multiplicity(1).reciprocal() == Rational(1));
    CHECK(Multiplicity(5).reciprocal() == Rational(1, 5));
    CHECK(Multiplicity::infinity().reciprocal() == Rational(0));
    CHECK(Multiplicity::infinity().is_infinite());
    CHECK(Multiplicity::infinity().str() == "inf");
    CHECK(Multiplicity(42).str() == "42");
    CHECK_THROWS_AS(Multiplicity(0), InvalidMultiplicity);
    CHECK_THROWS_AS(Multiplicity(-3), InvalidMultiplicity);
}

TEST_CASE("reciprocals decrease strictly in m") {
    Rational prev = 2;
    for (long long m = 1; m <= 200; ++m) {
        Rational r = Multiplicity(m).reciprocal();
        CHECK(r < prev);
        CHECK(r > Multiplicity::infinity().reciprocal());
        prev = r;
    }
}

TEST_CASE("parse_multiplicity") {
    CHECK(parse_multiplicity("7") == Multiplicity(7));
    CHECK(parse_multiplicity("inf") == Multiplicity::infinity());
    CHECK_THROWS_AS(parse_multiplicity("seven"), ParseError);
    CHECK_THROWS_AS(parse_multiplicity(""), ParseError);
    CHECK_THROWS_AS(parse_multiplicity("0"), InvalidMultiplicity);
}

TEST_CASE("intersection matrix shape checks") {
    CHECK_THROWS_AS(IntersectionMatrix({{1, 2}, {2}}), DimensionMismatch);
    IntersectionMatrix m({{2, 3}, {3, -1}});
    CHECK(m.size() == 2);
    CHECK(m.at(0, 1) == 3);
    CHECK(m.at(1, 1) == -1);
}

TEST_CASE("surface validation names the offending entry") {
    SmoothOrbifoldSurface s{Rational(49), Rational(48),
                            {{"C1", 6, Multiplicity(5)},
                             {"C2", 6, Multiplicity(5)}},
                            IntersectionMatrix({{25, 25}, {25, 25}})};
    CHECK_NOTHROW(validate_surface(s));

    SmoothOrbifoldSurface wrong_dim = s;
    wrong_dim.intersections =
        IntersectionMatrix(std::vector<std::vector<long long>>{{25}});
    CHECK_THROWS_AS(validate_surface(wrong_dim), DimensionMismatch);

    SmoothOrbifoldSurface asym = s;
    asym.intersections = IntersectionMatrix({{25, 24}, {25, 25}});
    CHECK_THROWS_AS(validate_surface(asym), AsymmetricMatrix);

    SmoothOrbifoldSurface neg_off = s;
    neg_off.intersections = IntersectionMatrix({{25, -1}, {-1, 25}});
    CHECK_THROWS_AS(validate_surface(neg_off), NegativeOffDiagonal);

    // Negative diagonal entries are fine (exceptional curves).
    SmoothOrbifoldSurface neg_diag = s;
    neg_diag.intersections = IntersectionMatrix({{-2, 1}, {1, -2}});
    CHECK_NOTHROW(validate_surface(neg_diag));

    SmoothOrbifoldSurface neg_genus = s;
    neg_genus.components[0].genus = -1;
    CHECK_THROWS_AS(validate_surface(neg_genus), NegativeGenus);
}

TEST_CASE("has_infinite_multiplicity") {
    std::vector<CurveComponent> comps{{"C1", 0, Multiplicity(3)}};
    CHECK_FALSE(has_infinite_multiplicity(comps));
    comps.push_back({"C2", 1, Multiplicity::infinity()});
    CHECK(has_infinite_multiplicity(comps));
}
