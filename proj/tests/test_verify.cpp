#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heights/verify.hpp"

#include <cmath>

using namespace heights;

static const Ambient P1 = Ambient::projective(1);

static SubschemePresentation hyperplane(const std::string& s, const Ambient& amb) {
    return SubschemePresentation{{hypersurface_presentation(parse_polynomial(s, amb))}, s};
}

TEST_CASE("sampling is deterministic and honors the predicate") {
    SampleSpec spec;
    spec.count = 20;
    spec.seed = 5;
    auto a = sample_points(P1, spec);
    auto b = sample_points(P1, spec);
    REQUIRE(a.size() == 20);
    for (size_t i = 0; i < a.size(); ++i) CHECK(points_equal(a[i], b[i]));

    spec.seed = 6;
    auto c = sample_points(P1, spec);
    bool all_same = true;
    for (size_t i = 0; i < a.size(); ++i) all_same = all_same && points_equal(a[i], c[i]);
    CHECK_FALSE(all_same);

    auto off_zero = [](const ProjectivePoint& x) {
        return x.rational_coords()[0][0] != 0;
    };
    for (const auto& x : sample_points(P1, spec, off_zero)) CHECK(off_zero(x));

    CHECK_THROWS_AS(sample_points(P1, spec, [](const ProjectivePoint&) { return false; }),
                    SampleExhausted);

    spec.field = QuadraticField::make(Int(2));
    auto q = sample_points(P1, spec);
    REQUIRE(q.size() == 20);
    for (const auto& x : q) CHECK(x.quad_field()->d() == 2);
}

TEST_CASE("sum identity check") {
    SampleSpec spec;
    spec.count = 30;
    auto D = hypersurface_presentation(parse_polynomial("x0", P1));
    auto E = hypersurface_presentation(parse_polynomial("x0 + x1", P1));
    auto rep = check_sum_identity(D, E, spec);
    CHECK(rep.passed());
    CHECK(rep.status == CheckReport::Status::ExactPass);
    CHECK(rep.samples_used == 30);
    CHECK(rep.witnesses.empty());

    spec.field = QuadraticField::make(Int(2));
    spec.count = 10;
    CHECK(check_sum_identity(D, E, spec).passed());
}

TEST_CASE("functoriality and basic properties") {
    SampleSpec spec;
    spec.count = 25;
    auto sq = Morphism::make(P1, P1,
                             {{parse_polynomial("x0^2", P1), parse_polynomial("x1^2", P1)}});
    auto D = hypersurface_presentation(parse_polynomial("x0", P1));
    CHECK(check_functoriality(sq, D, spec).passed());

    auto Y = hyperplane("x0", P1);
    auto W = hyperplane("x0 + x1", P1);
    auto rep = check_basic_properties(Y, W, spec);
    CHECK(rep.passed());
    CHECK(rep.status == CheckReport::Status::ExactPass);
}

TEST_CASE("independence bounds") {
    SampleSpec spec;
    spec.count = 40;
    auto Y = hyperplane("x0", P1);
    auto D2 = hypersurface_presentation(
        parse_polynomial("x0", P1),
        {{parse_polynomial("x0", P1), parse_polynomial("x0 + x1", P1)}});
    SubschemePresentation Y2{{D2}, {}};

    auto rep = check_independence(Y, Y2, spec);
    CHECK(rep.status == CheckReport::Status::BoundPass);
    REQUIRE(rep.profile.has_value());
    CHECK(rep.profile->at(Place::archimedean()) <= std::log(2.0) + 1e-12);

    BoundProfile claimed;
    claimed.record(Place::archimedean(), std::log(2.0));
    CHECK(check_independence(Y, Y2, spec, claimed).status == CheckReport::Status::BoundPass);

    // claim half of log 2: (1:1)-like samples break it
    BoundProfile tight;
    tight.record(Place::archimedean(), std::log(2.0) / 2);
    auto viol = check_independence(Y, Y2, spec, tight);
    CHECK(viol.status == CheckReport::Status::BoundViolation);
    CHECK_FALSE(viol.witnesses.empty());
}

TEST_CASE("distance properties") {
    SampleSpec spec;
    spec.count = 15;
    BoundProfile gamma;
    gamma.record(Place::archimedean(), std::log(4.0));
    auto rep = check_distance_properties(1, spec, gamma, hyperplane("x0", P1));
    CHECK(rep.status == CheckReport::Status::BoundPass);
    bool noted = false;
    for (const auto& n : rep.notes)
        noted = noted || n.find("empirical minimal gamma(inf)") != std::string::npos;
    CHECK(noted);

    // gamma = 0 everywhere cannot hold at the archimedean place
    auto viol = check_distance_properties(1, spec, BoundProfile{});
    CHECK(viol.status == CheckReport::Status::BoundViolation);
    CHECK_FALSE(viol.witnesses.empty());
}

TEST_CASE("global properties and field independence") {
    SampleSpec spec;
    spec.count = 20;
    auto sq = Morphism::make(P1, P1,
                             {{parse_polynomial("x0^2", P1), parse_polynomial("x1^2", P1)}});
    CHECK(check_global_properties(hyperplane("x0", P1), hyperplane("x1", P1), sq, spec).passed());

    auto x = ProjectivePoint::rational(P1, {{Rational(1), Rational(3)}});
    auto rep = check_field_independence(hyperplane("x0", P1), x, Int(-1));
    CHECK(rep.status == CheckReport::Status::ExactPass);

    CHECK_THROWS_AS(check_field_independence(hyperplane("x0", P1), x, Int(4)), InvalidField);
    auto on = ProjectivePoint::rational(P1, {{Rational(0), Rational(1)}});
    CHECK_THROWS_AS(check_field_independence(hyperplane("x0", P1), on, Int(2)), OnSubscheme);
}

TEST_CASE("suites") {
    auto names = suite_names();
    CHECK(names.size() == 7);
    CHECK(names[0] == "sum-identity");

    SampleSpec spec;
    spec.count = 10;
    auto reports = run_suite({"sum-identity"}, spec);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].passed());
    CHECK(reports[0].check_name.find("sum-identity") != std::string::npos);

    // identical seeds reproduce the reports verbatim
    auto again = run_suite({"sum-identity"}, spec);
    CHECK(reports[0].str() == again[0].str());

    auto all = run_suite({"all"}, spec);
    CHECK(all.size() == 7);
    for (const auto& r : all) CHECK(r.passed());

    CHECK_THROWS_AS(run_suite({"no-such-suite"}, spec), UnknownSuite);
}
