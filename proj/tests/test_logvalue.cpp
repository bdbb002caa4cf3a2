#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heights/logvalue.hpp"

#include <cmath>
#include <random>

using namespace heights;

TEST_CASE("coordinatewise arithmetic") {
    LogValue a = LogValue::log_prime(Int(2), Rational(2));
    LogValue b = LogValue::log_prime(Int(2), Rational(3));
    CHECK(add(a, b).str() == "5*log(2)");
    CHECK(scale(Rational(-1, 2), a).str() == "-log(2)");
    CHECK((a - a).is_zero());
    CHECK(LogValue::zero().str() == "0");
    CHECK((-b).signum() < 0);
    CHECK((-b).abs() == b);
}

TEST_CASE("canonicalization folds rational logs into prime coordinates") {
    LogValue v = LogValue::log_magnitude(Magnitude(Rational(12, 5)));
    CHECK(v.canonicalized().str() == "2*log(2) + log(3) - log(5)");
    CHECK(v == LogValue::log_prime(Int(2), Rational(2)) + LogValue::log_prime(Int(3), Rational(1)) -
                   LogValue::log_prime(Int(5), Rational(1)));

    // log(sqrt(2)) is a prime coordinate in disguise
    LogValue r = LogValue::log_magnitude(Magnitude::sqrt_rational(Rational(2)));
    CHECK(r == LogValue::log_prime(Int(2), Rational(1, 2)));
}

TEST_CASE("equality by exponentiation certificate") {
    // (1+sqrt(2))^2 = 3+2*sqrt(2)
    LogValue u = LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(1), Rational(1), Int(2)),
                                         Rational(2));
    LogValue w =
        LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(3), Rational(2), Int(2)));
    CHECK(u == w);

    // (2+sqrt(2))(2-sqrt(2)) = 2
    LogValue s =
        LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(2), Rational(1), Int(2))) +
        LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(2), Rational(-1), Int(2)));
    CHECK(s == LogValue::log_prime(Int(2), Rational(1)));

    CHECK_FALSE(u == s);
}

TEST_CASE("signum") {
    CHECK(LogValue::zero().signum() == 0);
    CHECK(LogValue::infinity().signum() > 0);
    CHECK(LogValue::log_prime(Int(3), Rational(-2)).signum() < 0);
    // log(3-2*sqrt(2)) < 0 < log(3+2*sqrt(2))
    CHECK(LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(3), Rational(-2), Int(2)))
              .signum() < 0);
    CHECK(LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(3), Rational(2), Int(2)))
              .signum() > 0);
}

TEST_CASE("min and max need a common place") {
    LogValue a = LogValue::log_prime(Int(3), Rational(1));
    LogValue b = LogValue::log_prime(Int(3), Rational(2));
    std::vector<LogValue> vals{b, a};
    CHECK(logvalue_min(vals) == a);
    CHECK(logvalue_max(vals) == b);

    std::vector<LogValue> with_inf{a, LogValue::infinity()};
    CHECK(logvalue_max(with_inf).is_infinite());
    CHECK(logvalue_min(with_inf) == a);

    std::vector<LogValue> mixed{a, LogValue::log_prime(Int(2), Rational(1))};
    CHECK_THROWS_AS(logvalue_min(mixed), MixedPlaceComparison);
}

TEST_CASE("float evaluation") {
    LogValue v = LogValue::log_magnitude(Magnitude(Rational(3, 2)));
    CHECK(std::fabs(to_float(v, 53) - 0.4054651081081644) < 1e-15);
    CHECK(to_float(LogValue::infinity()) == HUGE_VAL);
    CHECK(to_float(LogValue::zero()) == 0.0);

    // 53 bits prints the shortest-faithful double
    CHECK(to_decimal_string(LogValue::log_prime(Int(3), Rational(1)), 53) ==
          "1.0986122886681098");
    CHECK(to_decimal_string(LogValue::infinity(), 53) == "inf");
    CHECK(to_decimal_string(LogValue::zero(), 53) == "0");
}

TEST_CASE("rendering") {
    LogValue v = LogValue::log_prime(Int(5), Rational(-1)) + LogValue::log_prime(Int(2), Rational(1)) +
                 LogValue::log_magnitude(Magnitude::abs_quadratic(Rational(1), Rational(1), Int(2)));
    CHECK(v.str() == "log(2) - log(5) + log(1+sqrt(2))");
    CHECK(LogValue::infinity().str() == "inf");
}

TEST_CASE("product formula oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    int checked = 0;
    while (checked < 200) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (q == 0) continue;
        LogValue v = log_abs_sum(q);
        CHECK(v.is_zero());
        CHECK(v.canonicalized().str() == "0");
        ++checked;
    }
    CHECK(log_abs_sum(Rational(-1)).is_zero());
    CHECK_THROWS_AS(log_abs_sum(Rational(0)), InfiniteValuation);
}

TEST_CASE("bound profiles") {
    BoundProfile p;
    CHECK(p.at(Place::archimedean()) == 0.0);
    p.record(Place::archimedean(), 0.25);
    p.record(Place::archimedean(), 0.125); // keeps the max
    p.record(Place::finite(Int(3)), 0.0);  // dropped
    CHECK(p.at(Place::archimedean()) == 0.25);
    CHECK(p.entries().size() == 1);

    BoundProfile q;
    q.record(Place::archimedean(), 0.3);
    CHECK(p.dominated_by(q));
    CHECK_FALSE(q.dominated_by(p));
    CHECK(q.dominated_by(p, 0.1)); // slack covers the excess
}
