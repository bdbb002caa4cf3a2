#include "heights/verify.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace heights {

std::string CheckReport::status_str() const {
    switch (status) {
        case Status::ExactPass: return "EXACT-PASS";
        case Status::ExactFail: return "EXACT-FAIL";
        case Status::BoundPass: return "BOUND-PASS";
        case Status::BoundViolation: return "BOUND-VIOLATION";
    }
    return "?";
}

std::string CheckReport::str() const {
    std::ostringstream os;
    os << check_name << ": " << status_str();
    if (profile) os << " [" << profile->str() << "]";
    os << " (" << samples_used << " samples)";
    for (const auto& w : witnesses) os << "\n  witness: " << w;
    for (const auto& n : notes) os << "\n  note: " << n;
    return os.str();
}

std::vector<ProjectivePoint> sample_points(
    const Ambient& amb, const SampleSpec& spec,
    const std::function<bool(const ProjectivePoint&)>& accept) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<long> num(-spec.coordinate_height_bound,
                                            spec.coordinate_height_bound);
    std::uniform_int_distribution<long> den(1, spec.coordinate_height_bound);
    auto draw = [&rng, &num, &den]() {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
    };
    std::vector<ProjectivePoint> out;
    out.reserve(spec.count);
    size_t attempts = 0, cap = 100 * spec.count;
    while (out.size() < spec.count) {
        if (++attempts > cap)
            throw SampleExhausted("no accepted sample in " + std::to_string(cap) + " attempts");
        try {
            ProjectivePoint pt = [&]() {
                if (!spec.field) {
                    RationalCoords coords;
                    for (int b = 0; b < amb.num_blocks(); ++b) {
                        std::vector<Rational> row;
                        for (int j = 0; j < amb.block_size(b); ++j) row.push_back(draw());
                        coords.push_back(std::move(row));
                    }
                    return ProjectivePoint::rational(amb, std::move(coords));
                }
                QuadCoords coords;
                for (int b = 0; b < amb.num_blocks(); ++b) {
                    std::vector<QuadElement> row;
                    for (int j = 0; j < amb.block_size(b); ++j)
                        row.emplace_back(draw(), draw(), *spec.field);
                    coords.push_back(std::move(row));
                }
                return ProjectivePoint::quadratic(amb, *spec.field, std::move(coords));
            }();
            if (!accept || accept(pt)) out.push_back(std::move(pt));
        } catch (const InvalidPoint&) {
            // an all-zero factor was drawn; try again
        }
    }
    return out;
}

namespace {

using AnyPlace = std::variant<Place, ExtPlace>;

bool on_divisor(const DivisorPresentation& D, const ProjectivePoint& x) {
    if (x.is_rational()) return D.s_D.evaluate(x.rational_coords()) == 0;
    return D.s_D.evaluate(x.quad_coords()).is_zero();
}

bool on_subscheme(const SubschemePresentation& Y, const ProjectivePoint& x) {
    for (const auto& D : Y.divisors)
        if (!on_divisor(D, x)) return false;
    return true;
}

LogValue lh(const SubschemePresentation& Y, const ProjectivePoint& x, const AnyPlace& w) {
    return std::visit([&](const auto& p) { return local_height(Y, x, p).value; }, w);
}

LogValue lh(const DivisorPresentation& D, const ProjectivePoint& x, const AnyPlace& w) {
    return std::visit([&](const auto& p) { return local_height_divisor(D, x, p).value; }, w);
}

std::string place_str(const AnyPlace& w) {
    return std::visit([](const auto& p) { return p.str(); }, w);
}

Place base_place(const AnyPlace& w) {
    return std::visit(
        [](const auto& p) {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ExtPlace>)
                return p.base();
            else
                return p;
        },
        w);
}

// The archimedean place(s) of the point's field plus every place occurring
// in the support of one of the listed heights at the given point. Keyed by
// rendered name for set semantics.
class PlaceSet {
public:
    void add_archimedean(const ProjectivePoint& x) {
        if (x.is_rational()) {
            insert(Place::archimedean());
        } else {
            for (const auto& w : places_above(Place::archimedean(), *x.quad_field())) insert(w);
        }
    }
    void add_support(const SubschemePresentation& Y, const ProjectivePoint& x) {
        for (const auto& e : local_height_support(Y, x))
            std::visit([this](const auto& p) { insert(p); }, e.place);
    }
    const std::map<std::string, AnyPlace>& places() const { return places_; }

private:
    void insert(AnyPlace w) { places_.emplace(place_str(w), std::move(w)); }
    std::map<std::string, AnyPlace> places_;
};

void add_witness(CheckReport& rep, const std::string& text) {
    if (rep.witnesses.size() < 5)
        rep.witnesses.push_back(text);
    else if (rep.witnesses.size() == 5)
        rep.witnesses.push_back("(further witnesses suppressed)");
}

} // namespace

CheckReport check_sum_identity(const DivisorPresentation& D, const DivisorPresentation& E,
                               const SampleSpec& spec) {
    CheckReport rep{.check_name = "sum-identity"};
    DivisorPresentation S = sum(D, E);
    auto YD = make_subscheme_presentation({D});
    auto YE = make_subscheme_presentation({E});
    auto YS = make_subscheme_presentation({S});
    auto off = [&](const ProjectivePoint& x) { return !on_divisor(D, x) && !on_divisor(E, x); };
    for (const auto& x : sample_points(D.ambient, spec, off)) {
        PlaceSet ps;
        ps.add_archimedean(x);
        ps.add_support(YD, x);
        ps.add_support(YE, x);
        ps.add_support(YS, x);
        for (const auto& [name, w] : ps.places()) {
            LogValue lhs = lh(S, x, w);
            LogValue rhs = lh(D, x, w) + lh(E, x, w);
            if (!(lhs == rhs)) {
                rep.status = CheckReport::Status::ExactFail;
                add_witness(rep, "x=" + x.str() + ", w=" + name + ": lambda_{D+E}=" + lhs.str() +
                                     ", lambda_D+lambda_E=" + rhs.str());
            }
        }
        ++rep.samples_used;
    }
    return rep;
}

CheckReport check_functoriality(const Morphism& phi, const DivisorPresentation& D,
                                const SampleSpec& spec) {
    CheckReport rep{.check_name = "functoriality"};
    DivisorPresentation pullD = pullback(phi, D);
    auto YD = make_subscheme_presentation({D});
    auto Ypull = make_subscheme_presentation({pullD});
    auto off = [&](const ProjectivePoint& x) { return !on_divisor(pullD, x); };
    for (const auto& x : sample_points(phi.source(), spec, off)) {
        ProjectivePoint fx = [&]() -> ProjectivePoint {
            try {
                return apply_morphism(phi, x);
            } catch (const IndeterminacyPoint&) {
                rep.notes.push_back("skipped indeterminacy point " + x.str());
                return x; // placeholder, flagged below
            }
        }();
        if (fx.ambient() != phi.target()) continue;
        PlaceSet ps;
        ps.add_archimedean(x);
        ps.add_support(Ypull, x);
        ps.add_support(YD, fx);
        for (const auto& [name, w] : ps.places()) {
            LogValue lhs = lh(pullD, x, w);
            LogValue rhs = lh(D, fx, w);
            if (!(lhs == rhs)) {
                rep.status = CheckReport::Status::ExactFail;
                add_witness(rep, "x=" + x.str() + ", w=" + name + ": lambda_{f*D}=" + lhs.str() +
                                     ", lambda_D(f(x))=" + rhs.str());
            }
        }
        ++rep.samples_used;
    }
    return rep;
}

CheckReport check_basic_properties(const SubschemePresentation& Y,
                                   const SubschemePresentation& W, const SampleSpec& spec) {
    CheckReport rep{.check_name = "basic-properties"};
    SubschemePresentation I = intersect(Y, W);
    SubschemePresentation A = add_subschemes(Y, W);
    auto off = [&](const ProjectivePoint& x) {
        return !on_subscheme(Y, x) && !on_subscheme(W, x);
    };
    for (const auto& x : sample_points(Y.ambient(), spec, off)) {
        PlaceSet ps;
        ps.add_archimedean(x);
        ps.add_support(Y, x);
        ps.add_support(W, x);
        ps.add_support(I, x);
        ps.add_support(A, x);
        for (const auto& [name, w] : ps.places()) {
            LogValue ly = lh(Y, x, w), lw = lh(W, x, w);
            LogValue li = lh(I, x, w), la = lh(A, x, w);
            LogValue lmin = LogValue::compare(ly, lw) <= 0 ? ly : lw;
            if (!(li == lmin)) {
                rep.status = CheckReport::Status::ExactFail;
                add_witness(rep, "x=" + x.str() + ", w=" + name +
                                     ": lambda_{Y&W}=" + li.str() + ", min=" + lmin.str());
            }
            if (!(la == ly + lw)) {
                rep.status = CheckReport::Status::ExactFail;
                add_witness(rep, "x=" + x.str() + ", w=" + name +
                                     ": lambda_{Y+W}=" + la.str() + ", sum=" + (ly + lw).str());
            }
        }
        ++rep.samples_used;
    }
    return rep;
}

CheckReport check_independence(const SubschemePresentation& Y, const SubschemePresentation& Yp,
                               const SampleSpec& spec,
                               const std::optional<BoundProfile>& claimed) {
    CheckReport rep{.check_name = "independence"};
    auto off = [&](const ProjectivePoint& x) {
        return !on_subscheme(Y, x) && !on_subscheme(Yp, x);
    };
    auto samples = sample_points(Y.ambient(), spec, off);
    BoundProfile profile = estimate_bound_profile(Y, Yp, samples);
    rep.samples_used = samples.size();
    rep.profile = profile;
    rep.status = CheckReport::Status::BoundPass;
    if (claimed && !profile.dominated_by(*claimed, 1e-12)) {
        rep.status = CheckReport::Status::BoundViolation;
        for (const auto& [v, val] : profile.entries())
            if (val > claimed->at(v) + 1e-12)
                add_witness(rep, "at " + v.str() + ": observed " + std::to_string(val) +
                                     " > claimed " + std::to_string(claimed->at(v)));
    }
    return rep;
}

CheckReport check_distance_properties(int N, const SampleSpec& spec, const BoundProfile& gamma,
                                      const std::optional<SubschemePresentation>& Y) {
    CheckReport rep{.check_name = "distance-properties"};
    rep.status = CheckReport::Status::BoundPass;
    Ambient amb = Ambient::projective(N);
    SubschemePresentation diag = diagonal_presentation(N);
    auto off_Y = [&](const ProjectivePoint& p) { return !Y || !on_subscheme(*Y, p); };
    SampleSpec triple_spec = spec;
    triple_spec.count = spec.count * 3;
    auto pts = sample_points(amb, triple_spec, off_Y);
    BoundProfile observed; // max positive excess per base place
    double arch_excess = 0; // empirical minimal passing gamma(inf)

    // gamma(w) = 0 keeps the comparison exact; only a nonzero bound brings in
    // floats, with a 1e-12 slack for the conversion.
    auto check_bound = [&](const LogValue& small, const LogValue& big, const Place& base,
                           const std::string& what, const std::string& who) {
        LogValue excess = small - big;
        int sgn = excess.signum();
        if (sgn <= 0) return;
        double e = to_float(excess);
        observed.record(base, e);
        if (base.is_archimedean()) arch_excess = std::max(arch_excess, e);
        if (e > gamma.at(base) + 1e-12) {
            rep.status = CheckReport::Status::BoundViolation;
            add_witness(rep, what + " exceeds gamma(" + base.str() + ")=" +
                                 std::to_string(gamma.at(base)) + " by excess " +
                                 std::to_string(e) + " at " + who);
        }
    };

    for (size_t t = 0; t + 2 < pts.size(); t += 3) {
        const auto &x = pts[t], &y = pts[t + 1], &z = pts[t + 2];
        if (points_equal(x, y) || points_equal(y, z) || points_equal(x, z)) {
            rep.notes.push_back("skipped degenerate triple starting at " + x.str());
            continue;
        }
        auto pxy = pair_point(x, y), pyx = pair_point(y, x);
        auto pyz = pair_point(y, z), pxz = pair_point(x, z);
        PlaceSet ps;
        ps.add_archimedean(pxy);
        ps.add_support(diag, pxy);
        ps.add_support(diag, pyz);
        ps.add_support(diag, pxz);
        if (Y) {
            ps.add_support(*Y, x);
            ps.add_support(*Y, y);
        }
        for (const auto& [name, w] : ps.places()) {
            LogValue dxy = lh(diag, pxy, w);
            LogValue dyx = lh(diag, pyx, w);
            if (!(dxy == dyx)) {
                rep.status = CheckReport::Status::ExactFail;
                add_witness(rep, "symmetry: delta(x,y)=" + dxy.str() + " != delta(y,x)=" +
                                     dyx.str() + " at " + name + ", x=" + x.str() +
                                     ", y=" + y.str());
                continue;
            }
            LogValue dyz = lh(diag, pyz, w), dxz = lh(diag, pxz, w);
            LogValue lhs = LogValue::compare(dxy, dyz) <= 0 ? dxy : dyz;
            check_bound(lhs, dxz, base_place(w), "triangle I",
                        "x=" + x.str() + " y=" + y.str() + " z=" + z.str() + ", w=" + name);
            if (Y) {
                LogValue lyx = lh(*Y, x, w), lyy = lh(*Y, y, w);
                LogValue lhs2 = LogValue::compare(lyx, dxy) <= 0 ? lyx : dxy;
                check_bound(lhs2, lyy, base_place(w), "triangle II",
                            "x=" + x.str() + " y=" + y.str() + ", w=" + name);
            }
        }
        ++rep.samples_used;
    }
    rep.profile = observed;
    {
        std::ostringstream os;
        os << "empirical minimal gamma(inf) over the samples: " << arch_excess;
        rep.notes.push_back(os.str());
    }
    return rep;
}

CheckReport check_global_properties(const SubschemePresentation& Y,
                                    const SubschemePresentation& W, const Morphism& phi,
                                    const SampleSpec& spec) {
    CheckReport rep{.check_name = "global-properties"};
    SubschemePresentation A = add_subschemes(Y, W);
    auto off = [&](const ProjectivePoint& x) {
        return !on_subscheme(Y, x) && !on_subscheme(W, x);
    };
    for (const auto& x : sample_points(Y.ambient(), spec, off)) {
        HeightValue hA = global_height(A, x);
        LogValue hsum = (global_height(Y, x).value + global_height(W, x).value).canonicalized();
        if (!(hA.value == hsum)) {
            rep.status = CheckReport::Status::ExactFail;
            add_witness(rep, "additivity: x=" + x.str() + ": h_{Y+W}=" + hA.value.str() +
                                 ", h_Y+h_W=" + hsum.str());
        }
        ++rep.samples_used;
    }
    SubschemePresentation pullY = pullback(phi, Y);
    auto off_pull = [&](const ProjectivePoint& x) {
        if (on_subscheme(pullY, x)) return false;
        try {
            apply_morphism(phi, x);
            return true;
        } catch (const IndeterminacyPoint&) {
            return false;
        }
    };
    SampleSpec pull_spec = spec;
    pull_spec.seed = spec.seed + 1;
    for (const auto& x : sample_points(phi.source(), pull_spec, off_pull)) {
        ProjectivePoint fx = apply_morphism(phi, x);
        HeightValue lhs = global_height(Y, fx);
        HeightValue rhs = global_height(pullY, x);
        if (!(lhs.value == rhs.value)) {
            rep.status = CheckReport::Status::ExactFail;
            add_witness(rep, "functoriality: x=" + x.str() + ": h_Y(f(x))=" + lhs.value.str() +
                                 ", h_{f*Y}(x)=" + rhs.value.str());
        }
        ++rep.samples_used;
    }
    return rep;
}

CheckReport check_field_independence(const SubschemePresentation& Y, const ProjectivePoint& x,
                                     const Int& d) {
    CheckReport rep{.check_name = "field-independence"};
    if (!x.is_rational()) throw Error("field independence compares Q against Q(sqrt(d))");
    QuadraticField F = QuadraticField::make(d);
    HeightValue hQ = global_height(Y, x);
    ProjectivePoint xF = ProjectivePoint::quadratic(x.ambient(), F, x.coords_in(F));
    HeightValue hF = global_height(Y, xF);
    rep.samples_used = 1;
    if (!(hQ.value == hF.value)) {
        rep.status = CheckReport::Status::ExactFail;
        add_witness(rep, "x=" + x.str() + ", d=" + to_string(d) + ": over Q " + hQ.value.str() +
                             ", over " + F.str() + " " + hF.value.str());
    }
    return rep;
}

namespace {

CheckReport merge(std::string name, std::vector<CheckReport> parts) {
    CheckReport out{.check_name = std::move(name)};
    for (auto& p : parts) {
        out.samples_used += p.samples_used;
        if (!p.passed()) out.status = p.status;
        for (auto& w : p.witnesses) out.witnesses.push_back(std::move(w));
        for (auto& n : p.notes) out.notes.push_back(std::move(n));
        if (p.profile && !out.profile) out.profile = std::move(p.profile);
    }
    return out;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"sum-identity",        "functoriality", "basic-properties", "independence",
            "distance-properties", "global-properties", "field-independence"};
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& names,
                                   const SampleSpec& spec) {
    Ambient P1 = Ambient::projective(1);
    Ambient P2 = Ambient::projective(2);
    std::vector<CheckReport> out;
    std::vector<std::string> expanded;
    for (const auto& n : names) {
        if (n == "all") {
            auto all = suite_names();
            expanded.insert(expanded.end(), all.begin(), all.end());
        } else {
            expanded.push_back(n);
        }
    }
    for (const auto& name : expanded) {
        if (name == "sum-identity") {
            out.push_back(check_sum_identity(
                hypersurface_presentation(parse_polynomial("x0", P1)),
                hypersurface_presentation(parse_polynomial("x1", P1)), spec));
        } else if (name == "functoriality") {
            auto square = Morphism::make(
                P1, P1, {{parse_polynomial("x0^2", P1), parse_polynomial("x1^2", P1)}});
            out.push_back(check_functoriality(
                square, hypersurface_presentation(parse_polynomial("x0", P1)), spec));
        } else if (name == "basic-properties") {
            out.push_back(check_basic_properties(
                subscheme_presentation(
                    {parse_polynomial("x0", P2), parse_polynomial("x1", P2)}),
                subscheme_presentation({parse_polynomial("x0*x2 - x1^2", P2)}), spec));
        } else if (name == "independence") {
            auto Y = subscheme_presentation({parse_polynomial("x0", P1)});
            auto Yp = make_subscheme_presentation({hypersurface_presentation(
                parse_polynomial("x0", P1),
                std::vector<MultihomogPolynomial>{parse_polynomial("x0", P1),
                                                  parse_polynomial("x0 + x1", P1)})});
            BoundProfile claimed;
            claimed.record(Place::archimedean(), std::log(2.0));
            out.push_back(check_independence(Y, Yp, spec, claimed));
        } else if (name == "distance-properties") {
            BoundProfile gamma;
            gamma.record(Place::archimedean(), std::log(4.0));
            out.push_back(check_distance_properties(
                1, spec, gamma, subscheme_presentation({parse_polynomial("x0", P1)})));
        } else if (name == "global-properties") {
            auto square = Morphism::make(
                P1, P1, {{parse_polynomial("x0^2", P1), parse_polynomial("x1^2", P1)}});
            out.push_back(check_global_properties(
                subscheme_presentation({parse_polynomial("x0", P1)}),
                subscheme_presentation({parse_polynomial("x1", P1)}), square, spec));
        } else if (name == "field-independence") {
            auto Y = subscheme_presentation({parse_polynomial("x0", P1)});
            std::vector<CheckReport> parts;
            for (long d : {2L, -1L, 5L}) {
                auto x = ProjectivePoint::rational(P1, {{Rational(1), Rational(3)}});
                parts.push_back(check_field_independence(Y, x, Int(d)));
                parts.back().notes.push_back("d=" + std::to_string(d));
            }
            out.push_back(merge("field-independence", std::move(parts)));
        } else {
            throw UnknownSuite("no suite named '" + name + "'; known: sum-identity, "
                               "functoriality, basic-properties, independence, "
                               "distance-properties, global-properties, field-independence, all");
        }
    }
    return out;
}

} // namespace heights
