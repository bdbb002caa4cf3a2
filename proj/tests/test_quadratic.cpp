#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heights/quadratic.hpp"

#include <random>

using namespace heights;

static QuadElement elem(long a, long b, const QuadraticField& F) {
    return {Rational(a), Rational(b), F};
}

TEST_CASE("field construction") {
    CHECK_THROWS_AS(QuadraticField::make(Int(0)), InvalidField);
    CHECK_THROWS_AS(QuadraticField::make(Int(1)), InvalidField);
    CHECK_THROWS_AS(QuadraticField::make(Int(4)), InvalidField);
    CHECK_THROWS_AS(QuadraticField::make(Int(12)), InvalidField);

    CHECK(QuadraticField::make(Int(2)).discriminant() == 8);
    CHECK(QuadraticField::make(Int(5)).discriminant() == 5);
    CHECK(QuadraticField::make(Int(-1)).discriminant() == -4);
    CHECK(QuadraticField::make(Int(-7)).discriminant() == -7);
    CHECK(QuadraticField::make(Int(-1)).str() == "Q(sqrt(-1))");
    CHECK_FALSE(QuadraticField::make(Int(-1)).is_real());
}

TEST_CASE("element arithmetic") {
    auto F = QuadraticField::make(Int(2));
    auto x = elem(1, 1, F), y = elem(3, 1, F);
    CHECK(x * y == elem(5, 4, F));
    CHECK((x * y) / y == x);
    CHECK(x + y - y == x);
    CHECK(x.conjugate() == elem(1, -1, F));
    CHECK(x.norm() == Rational(-1));
    CHECK(x.trace() == Rational(2));
    CHECK(x.str() == "1+sqrt(2)");
    CHECK((-x).str() == "-1-sqrt(2)");
    CHECK(elem(0, -2, QuadraticField::make(Int(-1))).str() == "-2*sqrt(-1)");
    CHECK(QuadElement(Rational(-5, 2), Rational(5, 3), F).str() == "-5/2+5/3*sqrt(2)");
    CHECK_THROWS_AS(x / elem(0, 0, F), Error);
    CHECK_THROWS_AS(x + elem(1, 1, QuadraticField::make(Int(3))), FieldMismatch);
}

TEST_CASE("splitting of places") {
    auto F2 = QuadraticField::make(Int(2));

    auto arch = places_above(Place::archimedean(), F2);
    REQUIRE(arch.size() == 2);
    CHECK(arch[0].kind() == ExtPlace::Kind::RealPlus);
    CHECK(arch[1].kind() == ExtPlace::Kind::RealMinus);
    CHECK(arch[0].local_degree() == 1);
    CHECK(arch[0].str() == "inf:+");

    auto p7 = places_above(Place::finite(Int(7)), F2);
    REQUIRE(p7.size() == 2);
    CHECK(p7[0].root_seed() == 3);
    CHECK(p7[1].root_seed() == 4);
    CHECK(p7[0].str() == "p=7:split(root=3)");

    auto p17 = places_above(Place::finite(Int(17)), F2);
    REQUIRE(p17.size() == 2);
    CHECK(p17[0].root_seed() == 6);
    CHECK(p17[1].root_seed() == 11);

    CHECK(places_above(Place::finite(Int(2)), F2)[0].kind() == ExtPlace::Kind::Ramified);
    CHECK(places_above(Place::finite(Int(3)), F2)[0].kind() == ExtPlace::Kind::Inert);
    CHECK(places_above(Place::finite(Int(5)), F2)[0].kind() == ExtPlace::Kind::Inert);

    auto Fi = QuadraticField::make(Int(-1));
    auto iarch = places_above(Place::archimedean(), Fi);
    REQUIRE(iarch.size() == 1);
    CHECK(iarch[0].kind() == ExtPlace::Kind::ComplexPair);
    CHECK(iarch[0].local_degree() == 2);
    CHECK(places_above(Place::finite(Int(2)), Fi)[0].kind() == ExtPlace::Kind::Ramified);
    auto i5 = places_above(Place::finite(Int(5)), Fi);
    CHECK(i5[0].root_seed() == 2);
    CHECK(i5[1].root_seed() == 3);
    CHECK(places_above(Place::finite(Int(3)), Fi)[0].kind() == ExtPlace::Kind::Inert);

    auto F5 = QuadraticField::make(Int(5));
    CHECK(places_above(Place::finite(Int(5)), F5)[0].kind() == ExtPlace::Kind::Ramified);
    CHECK(places_above(Place::finite(Int(2)), F5)[0].kind() == ExtPlace::Kind::Inert);
    auto f11 = places_above(Place::finite(Int(11)), F5);
    CHECK(f11[0].root_seed() == 4);
    CHECK(f11[1].root_seed() == 7);

    // d = 17 = 1 mod 8: 2 splits, places told apart by the root mod 4
    auto F17 = QuadraticField::make(Int(17));
    auto p2 = places_above(Place::finite(Int(2)), F17);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].root_seed() == 1);
    CHECK(p2[1].root_seed() == 3);
}

TEST_CASE("hensel lifting") {
    CHECK(hensel_sqrt(Int(2), Int(7), 1) == 3);
    CHECK(hensel_sqrt(Int(2), Int(7), 3) == 108); // 108^2 = 2 mod 343, 108 = 3 mod 7
    Int r = hensel_sqrt(Int(2), Int(7), 6);
    Int mod = 1;
    for (int i = 0; i < 6; ++i) mod *= 7;
    CHECK((r * r - 2) % mod == 0);
    CHECK(r % 7 == 3);

    CHECK_THROWS_AS(hensel_sqrt(Int(17), Int(2), 4), UnsupportedHensel);
    CHECK_THROWS_AS(hensel_sqrt(Int(7), Int(7), 2), UnsupportedHensel);
    CHECK_THROWS_AS(hensel_sqrt(Int(3), Int(7), 1), NotSplit);
}

TEST_CASE("valuations at extension places") {
    auto F2 = QuadraticField::make(Int(2));
    auto p7 = places_above(Place::finite(Int(7)), F2);
    auto alpha = elem(3, 1, F2); // norm 7
    CHECK(ext_valuation(alpha, p7[0]) == Rational(0));
    CHECK(ext_valuation(alpha, p7[1]) == Rational(1));

    // Split over 2 with denominators in play: d = 17, roots 9 and 7 mod 16.
    auto F17 = QuadraticField::make(Int(17));
    auto p2 = places_above(Place::finite(Int(2)), F17);
    auto at2 = [&](Rational a, Rational b, long v1, long v2) {
        QuadElement x(std::move(a), std::move(b), F17);
        CHECK(ext_valuation(x, p2[0]) == Rational(v1));
        CHECK(ext_valuation(x, p2[1]) == Rational(v2));
    };
    at2(Rational(1, 2), Rational(1, 2), 0, 2);
    at2(Rational(1), Rational(1), 1, 3);
    at2(Rational(3), Rational(1), 2, 1);
    at2(Rational(7, 4), Rational(1, 4), 2, -1);

    // ramified: v extends with index 2
    auto Fi = QuadraticField::make(Int(-1));
    auto ram = places_above(Place::finite(Int(2)), Fi)[0];
    CHECK(ext_valuation(elem(1, 1, Fi), ram) == Rational(1, 2));

    // inert: valuation of the norm halves back to the base valuation
    auto p3 = places_above(Place::finite(Int(3)), F2)[0];
    CHECK(ext_valuation(elem(3, 3, F2), p3) == Rational(1));

    CHECK_THROWS_AS(ext_valuation(elem(0, 0, F2), p7[0]), InfiniteValuation);
    CHECK_THROWS_AS(ext_valuation(elem(1, 1, F2), places_above(Place::archimedean(), F2)[0]),
                    InvalidPlace);
}

TEST_CASE("absolute values at extension places") {
    auto Fi = QuadraticField::make(Int(-1));
    auto cpx = places_above(Place::archimedean(), Fi)[0];
    CHECK(ext_absolute_value(elem(1, 1, Fi), cpx) == Magnitude::sqrt_rational(Rational(2)));

    auto F2 = QuadraticField::make(Int(2));
    auto arch = places_above(Place::archimedean(), F2);
    CHECK(ext_absolute_value(elem(1, 1, F2), arch[0]).str() == "1+sqrt(2)");
    CHECK(ext_absolute_value(elem(1, 1, F2), arch[1]).str() == "-1+sqrt(2)");

    auto p7 = places_above(Place::finite(Int(7)), F2);
    CHECK(ext_absolute_value(elem(3, 1, F2), p7[1]).str() == "1/7");
    CHECK(ext_absolute_value(elem(3, 1, F2), p7[0]) == Magnitude(Rational(1)));
}

TEST_CASE("degree formula at sampled places") {
    for (long d : {-7L, -1L, 2L, 5L, 17L}) {
        auto F = QuadraticField::make(Int(d));
        for (long p : {0L, 2L, 3L, 5L, 7L, 11L, 13L}) {
            Place v = p == 0 ? Place::archimedean() : Place::finite(Int(p));
            auto rep = check_degree_formula(F, v);
            CHECK(rep.ok);
            CHECK(rep.degree_sum == 2);
        }
    }
}

TEST_CASE("norm formula, exact") {
    auto F2 = QuadraticField::make(Int(2));
    auto alpha = elem(3, 1, F2);
    for (long p : {0L, 2L, 3L, 7L}) {
        Place v = p == 0 ? Place::archimedean() : Place::finite(Int(p));
        auto rep = check_norm_formula(alpha, v);
        CHECK(rep.ok);
        CHECK(rep.lhs_log == rep.rhs_log);
    }

    // seeded sweep across fields and places
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coef(-40, 40), den(1, 12);
    for (long d : {-1L, 2L, 5L, 17L}) {
        auto F = QuadraticField::make(Int(d));
        int done = 0;
        while (done < 50) {
            Rational a(coef(rng), den(rng)), b(coef(rng), den(rng));
            a.canonicalize();
            b.canonicalize();
            QuadElement x(a, b, F);
            if (x.is_zero()) continue;
            for (long p : {0L, 2L, 3L, 5L, 7L, 11L}) {
                Place v = p == 0 ? Place::archimedean() : Place::finite(Int(p));
                CHECK(check_norm_formula(x, v).ok);
            }
            ++done;
        }
    }
}
