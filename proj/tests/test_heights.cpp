#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heights/global_height.hpp"
#include "heights/local_height.hpp"

#include <cmath>

using namespace heights;

static const Ambient P1 = Ambient::projective(1);
static const Ambient P2 = Ambient::projective(2);

static ProjectivePoint rat_pt(const Ambient& amb, std::vector<std::vector<long>> coords) {
    RationalCoords rc;
    for (auto& blk : coords) {
        rc.emplace_back();
        for (long c : blk) rc.back().emplace_back(c);
    }
    return ProjectivePoint::rational(amb, std::move(rc));
}

static SubschemePresentation hyperplane(const std::string& s, const Ambient& amb) {
    return SubschemePresentation{{hypersurface_presentation(parse_polynomial(s, amb))}, s};
}

TEST_CASE("local height of a hyperplane") {
    auto H = hyperplane("x0", P1);
    auto x = rat_pt(P1, {{1, 3}});

    auto arch = local_height(H, x, Place::archimedean());
    CHECK(arch.value == LogValue::log_magnitude(Magnitude(Rational(3))));
    CHECK(arch.value.str() == "log(3)");
    REQUIRE(arch.witnesses.has_value());
    CHECK(*arch.witnesses == std::array<int, 3>{0, 1, 0});

    auto at3 = local_height(H, x, Place::finite(Int(3)));
    CHECK(at3.value.is_zero());
    CHECK(*at3.witnesses == std::array<int, 3>{0, 0, 0});

    // v_p formula at work: lambda((9:1), 3) = log|x1/x0|_3 = 2*log(3)
    auto y = rat_pt(P1, {{9, 1}});
    CHECK(local_height(H, y, Place::finite(Int(3))).value ==
          LogValue::log_prime(Int(3), Rational(2)));

    auto on = local_height(H, rat_pt(P1, {{0, 1}}), Place::archimedean());
    CHECK(on.value.is_infinite());
    CHECK_FALSE(on.witnesses.has_value());
}

TEST_CASE("support enumeration") {
    auto H = hyperplane("x0", P1);

    // lambda((2:1), v): arch term log(2/2) = 0, only p=2 contributes
    auto sup = local_height_support(H, rat_pt(P1, {{2, 1}}));
    REQUIRE(sup.size() == 1);
    CHECK(std::get<Place>(sup[0].place) == Place::finite(Int(2)));
    CHECK(sup[0].value == LogValue::log_prime(Int(2), Rational(1)));

    // (1:3): the whole height sits at the archimedean place
    auto sup2 = local_height_support(H, rat_pt(P1, {{1, 3}}));
    REQUIRE(sup2.size() == 1);
    CHECK(std::get<Place>(sup2[0].place).is_archimedean());

    // quadratic point (1 : sqrt(2)): 1/2*log(2) at each real place
    auto F = QuadraticField::make(Int(2));
    QuadCoords qc{{QuadElement::from_rational(Rational(1), F),
                   QuadElement(Rational(0), Rational(1), F)}};
    auto xq = ProjectivePoint::quadratic(P1, F, qc);
    auto supq = local_height_support(H, xq);
    REQUIRE(supq.size() == 2);
    CHECK(std::get<ExtPlace>(supq[0].place).kind() == ExtPlace::Kind::RealPlus);
    CHECK(std::get<ExtPlace>(supq[1].place).kind() == ExtPlace::Kind::RealMinus);
    CHECK(supq[0].value == LogValue::log_prime(Int(2), Rational(1, 2)));
    CHECK(supq[1].value == LogValue::log_prime(Int(2), Rational(1, 2)));
}

TEST_CASE("plain places require rational points") {
    auto F = QuadraticField::make(Int(2));
    QuadCoords qc{{QuadElement::from_rational(Rational(1), F),
                   QuadElement(Rational(0), Rational(1), F)}};
    auto xq = ProjectivePoint::quadratic(P1, F, qc);
    auto H = hyperplane("x0", P1);
    CHECK_THROWS_AS(local_height(H, xq, Place::archimedean()), InvalidPlace);

    // extension places accept rational points by embedding
    auto w = places_above(Place::finite(Int(7)), F)[0];
    CHECK(local_height(H, rat_pt(P1, {{1, 3}}), w).value.is_zero());
}

TEST_CASE("degenerate presentations refuse to answer") {
    // L sections {x1} with s_D = x0: at (1:0) every L section vanishes but
    // s_D does not, so no value is faithful.
    auto D = make_divisor_presentation(
        parse_polynomial("x0", P1), {1}, {parse_polynomial("x1", P1)}, {0},
        {MultihomogPolynomial::constant(P1, Rational(1))});
    SubschemePresentation Y{{D}, {}};
    CHECK_THROWS_AS(local_height(Y, rat_pt(P1, {{1, 0}}), Place::archimedean()),
                    DegeneratePresentation);
}

TEST_CASE("global height") {
    auto H = hyperplane("x0", P1);
    auto h = global_height(H, rat_pt(P1, {{1, 3}}));
    CHECK(h.value.str() == "log(3)");
    CHECK_FALSE(h.field_used.has_value());

    auto F = QuadraticField::make(Int(2));
    QuadCoords qc{{QuadElement::from_rational(Rational(1), F),
                   QuadElement(Rational(0), Rational(1), F)}};
    auto hq = global_height(H, ProjectivePoint::quadratic(P1, F, qc));
    CHECK(hq.value == LogValue::log_prime(Int(2), Rational(1, 2)));
    REQUIRE(hq.field_used.has_value());
    CHECK(hq.field_used->d() == 2);

    CHECK_THROWS_AS(global_height(H, rat_pt(P1, {{0, 1}})), OnSubscheme);
}

TEST_CASE("heights of points") {
    CHECK(weil_height(rat_pt(P1, {{1, 3}})).value.str() == "log(3)");
    // (2 : 3/2) = (4 : 3)
    auto x = ProjectivePoint::rational(P1, {{Rational(2), Rational(3, 2)}});
    CHECK(weil_height(x).value == LogValue::log_prime(Int(2), Rational(2)));
    CHECK(weil_height(rat_pt(P2, {{2, -6, 3}})).value ==
          LogValue::log_magnitude(Magnitude(Rational(6))));

    auto F = QuadraticField::make(Int(2));
    QuadCoords qc{{QuadElement::from_rational(Rational(1), F),
                   QuadElement(Rational(0), Rational(1), F)}};
    CHECK(weil_height(ProjectivePoint::quadratic(P1, F, qc)).value ==
          LogValue::log_prime(Int(2), Rational(1, 2)));

    CHECK_THROWS_AS(weil_height(rat_pt(Ambient::make({2, 2}), {{1, 2}, {1, 3}})), AmbientMismatch);
}

TEST_CASE("arithmetic distance") {
    auto x = rat_pt(P1, {{1, 2}});
    auto y = rat_pt(P1, {{1, 3}});

    // delta(x,y) = h of the pair along the diagonal: here log(6)
    auto g = arithmetic_distance_global(x, y);
    CHECK(g.value == LogValue::log_prime(Int(2), Rational(1)) +
                         LogValue::log_prime(Int(3), Rational(1)));

    auto arch = arithmetic_distance_local(x, y, Place::archimedean());
    CHECK(arch.value == g.value);
    CHECK(arithmetic_distance_local(x, y, Place::finite(Int(2))).value.is_zero());
    CHECK(arithmetic_distance_local(x, y, Place::finite(Int(5))).value.is_zero());

    CHECK(arithmetic_distance_local(x, x, Place::archimedean()).value.is_infinite());
    CHECK_THROWS_AS(arithmetic_distance_global(x, x), IdenticalPoints);
    CHECK_THROWS_AS(arithmetic_distance_global(x, rat_pt(P1, {{2, 4}})), IdenticalPoints);

    // mixed fields: rational against quadratic promotes, distinct d's refuse
    auto F = QuadraticField::make(Int(2));
    QuadCoords qc{{QuadElement::from_rational(Rational(1), F),
                   QuadElement(Rational(0), Rational(1), F)}};
    auto xq = ProjectivePoint::quadratic(P1, F, qc);
    CHECK(arithmetic_distance_global(x, xq).value.signum() >= 0);
    auto F3 = QuadraticField::make(Int(3));
    QuadCoords q3{{QuadElement::from_rational(Rational(1), F3),
                   QuadElement(Rational(0), Rational(1), F3)}};
    CHECK_THROWS_AS(arithmetic_distance_global(xq, ProjectivePoint::quadratic(P1, F3, q3)),
                    FieldMismatch);
}

TEST_CASE("pair points") {
    auto x = rat_pt(P1, {{1, 2}});
    auto y = rat_pt(P1, {{1, 3}});
    auto p = pair_point(x, y);
    CHECK(p.ambient() == Ambient::make({2, 2}));
    CHECK(p.is_rational());

    auto F = QuadraticField::make(Int(2));
    QuadCoords qc{{QuadElement::from_rational(Rational(1), F),
                   QuadElement(Rational(0), Rational(1), F)}};
    auto xq = ProjectivePoint::quadratic(P1, F, qc);
    auto q = pair_point(x, xq);
    CHECK_FALSE(q.is_rational());
    CHECK(q.quad_field()->d() == 2);
}

TEST_CASE("bound profiles between presentations") {
    auto Y = hyperplane("x0", P1);
    auto D2 = hypersurface_presentation(
        parse_polynomial("x0", P1),
        {{parse_polynomial("x0", P1), parse_polynomial("x0 + x1", P1)}});
    SubschemePresentation Y2{{D2}, {}};

    std::vector<ProjectivePoint> samples{rat_pt(P1, {{1, 1}}), rat_pt(P1, {{1, 3}}),
                                         rat_pt(P1, {{2, 5}}), rat_pt(P1, {{-1, 7}})};
    auto prof = estimate_bound_profile(Y, Y2, samples);
    // at (1:1) the two archimedean values differ by exactly log 2
    CHECK(std::fabs(prof.at(Place::archimedean()) - std::log(2.0)) < 1e-12);
    for (const auto& [v, bound] : prof.entries())
        CHECK(v.is_archimedean());

    // same divisor re-presented with L = O(2), M = O(1): no difference anywhere
    auto big = make_divisor_presentation(
        parse_polynomial("x0", P1), {2}, monomial_basis(P1, {2}), {1}, monomial_basis(P1, {1}));
    auto prof2 = estimate_bound_profile(Y, SubschemePresentation{{big}, {}}, samples);
    CHECK(prof2.entries().empty());
}
