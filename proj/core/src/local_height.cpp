#include "heights/local_height.hpp"

namespace heights {

std::string LocalHeightResult::place_str() const {
    return std::visit([](const auto& p) { return p.str(); }, place);
}

namespace {

// The finite-place formula in valuation arithmetic: every ratio satisfies
// |s_j/(s_D t_k)|_w = p^{v(s_D)+v(t_k)-v(s_j)}, so
// lambda = (v(s_D) + min_k v(t_k) - min_j v(s_j)) log p, with v(0) = +inf.
struct FiniteCore {
    bool infinite = false;
    Rational coeff;
    int j = -1, k = -1;
};

FiniteCore finite_core(const std::vector<std::optional<Rational>>& vj,
                       const std::vector<std::optional<Rational>>& vk,
                       const std::optional<Rational>& vD) {
    FiniteCore out;
    for (size_t j = 0; j < vj.size(); ++j)
        if (vj[j] && (out.j < 0 || *vj[j] < *vj[static_cast<size_t>(out.j)]))
            out.j = static_cast<int>(j);
    if (out.j < 0) throw DegeneratePresentation("every L section vanishes at the point");
    for (size_t k = 0; k < vk.size(); ++k)
        if (vk[k] && (out.k < 0 || *vk[k] < *vk[static_cast<size_t>(out.k)]))
            out.k = static_cast<int>(k);
    if (out.k < 0) throw DegeneratePresentation("every M section vanishes at the point");
    if (!vD) {
        out.infinite = true;
        return out;
    }
    out.coeff = *vD + *vk[static_cast<size_t>(out.k)] - *vj[static_cast<size_t>(out.j)];
    return out;
}

// Archimedean: lambda = log( max_j|s_j| / (|s_D| max_k|t_k|) ).
struct ArchCore {
    bool infinite = false;
    Magnitude m;
    int j = -1, k = -1;
};

ArchCore arch_core(const std::vector<Magnitude>& mj, const std::vector<Magnitude>& mk,
                   const Magnitude& mD) {
    ArchCore out;
    for (size_t j = 0; j < mj.size(); ++j)
        if (out.j < 0 || Magnitude::compare(mj[j], mj[static_cast<size_t>(out.j)]) > 0)
            out.j = static_cast<int>(j);
    if (mj[static_cast<size_t>(out.j)].is_zero())
        throw DegeneratePresentation("every L section vanishes at the point");
    for (size_t k = 0; k < mk.size(); ++k)
        if (out.k < 0 || Magnitude::compare(mk[k], mk[static_cast<size_t>(out.k)]) > 0)
            out.k = static_cast<int>(k);
    if (mk[static_cast<size_t>(out.k)].is_zero())
        throw DegeneratePresentation("every M section vanishes at the point");
    if (mD.is_zero()) {
        out.infinite = true;
        return out;
    }
    out.m = mj[static_cast<size_t>(out.j)] / (mD * mk[static_cast<size_t>(out.k)]);
    return out;
}

struct RationalValues {
    Rational sD;
    std::vector<Rational> sj, tk;
};

RationalValues eval_rational(const DivisorPresentation& D, const RationalCoords& rep) {
    RationalValues out;
    out.sD = D.s_D.evaluate(rep);
    out.sj.reserve(D.L_sections.size());
    for (const auto& s : D.L_sections) out.sj.push_back(s.evaluate(rep));
    out.tk.reserve(D.M_sections.size());
    for (const auto& t : D.M_sections) out.tk.push_back(t.evaluate(rep));
    return out;
}

struct QuadValues {
    std::optional<QuadElement> sD;
    std::vector<QuadElement> sj, tk;
};

QuadValues eval_quad(const DivisorPresentation& D, const QuadCoords& rep) {
    QuadValues out;
    out.sD = D.s_D.evaluate(rep);
    out.sj.reserve(D.L_sections.size());
    for (const auto& s : D.L_sections) out.sj.push_back(s.evaluate(rep));
    out.tk.reserve(D.M_sections.size());
    for (const auto& t : D.M_sections) out.tk.push_back(t.evaluate(rep));
    return out;
}

LocalHeightResult pack(const FiniteCore& core, const Int& p,
                       std::variant<Place, ExtPlace> place, int divisor_index) {
    LocalHeightResult r{core.infinite ? LogValue::infinity()
                                      : LogValue::log_prime(p, core.coeff),
                        std::move(place), std::nullopt};
    if (!core.infinite) r.witnesses = {divisor_index, core.j, core.k};
    return r;
}

LocalHeightResult pack(const ArchCore& core, std::variant<Place, ExtPlace> place,
                       int divisor_index) {
    LocalHeightResult r{core.infinite ? LogValue::infinity() : LogValue::log_magnitude(core.m),
                        std::move(place), std::nullopt};
    if (!core.infinite) r.witnesses = {divisor_index, core.j, core.k};
    return r;
}

void check_point(const DivisorPresentation& D, const ProjectivePoint& x) {
    if (x.ambient() != D.ambient)
        throw AmbientMismatch("point lives on " + x.ambient().str() + ", presentation on " +
                              D.ambient.str());
}

} // namespace

LocalHeightResult local_height_divisor(const DivisorPresentation& D, const ProjectivePoint& x,
                                       const Place& v) {
    check_point(D, x);
    if (!x.is_rational())
        throw InvalidPlace("a quadratic point needs an extension place, e.g. p=7:split1 or "
                           "inf:+");
    RationalValues vals = eval_rational(D, x.rational_coords());
    if (v.is_archimedean()) {
        std::vector<Magnitude> mj, mk;
        for (const auto& q : vals.sj) mj.push_back(absolute_value(q, v));
        for (const auto& q : vals.tk) mk.push_back(absolute_value(q, v));
        return pack(arch_core(mj, mk, absolute_value(vals.sD, v)), v, 0);
    }
    auto val = [&v](const Rational& q) -> std::optional<Rational> {
        if (q == 0) return std::nullopt;
        return Rational(valuation(q, v.prime()));
    };
    std::vector<std::optional<Rational>> vj, vk;
    for (const auto& q : vals.sj) vj.push_back(val(q));
    for (const auto& q : vals.tk) vk.push_back(val(q));
    return pack(finite_core(vj, vk, val(vals.sD)), v.prime(), v, 0);
}

LocalHeightResult local_height_divisor(const DivisorPresentation& D, const ProjectivePoint& x,
                                       const ExtPlace& w) {
    check_point(D, x);
    QuadCoords rep = x.coords_in(w.field());
    QuadValues vals = eval_quad(D, rep);
    if (w.is_archimedean()) {
        std::vector<Magnitude> mj, mk;
        for (const auto& q : vals.sj) mj.push_back(ext_absolute_value(q, w));
        for (const auto& q : vals.tk) mk.push_back(ext_absolute_value(q, w));
        return pack(arch_core(mj, mk, ext_absolute_value(*vals.sD, w)), w, 0);
    }
    auto val = [&w](const QuadElement& q) -> std::optional<Rational> {
        if (q.is_zero()) return std::nullopt;
        return ext_valuation(q, w);
    };
    std::vector<std::optional<Rational>> vj, vk;
    for (const auto& q : vals.sj) vj.push_back(val(q));
    for (const auto& q : vals.tk) vk.push_back(val(q));
    return pack(finite_core(vj, vk, val(*vals.sD)), w.base().prime(), w, 0);
}

namespace {

template <class PlaceT>
LocalHeightResult min_over_divisors(const SubschemePresentation& Y, const ProjectivePoint& x,
                                    const PlaceT& w) {
    std::optional<LocalHeightResult> best;
    for (size_t i = 0; i < Y.divisors.size(); ++i) {
        LocalHeightResult r = local_height_divisor(Y.divisors[i], x, w);
        if (r.witnesses) (*r.witnesses)[0] = static_cast<int>(i);
        if (!best || LogValue::compare(r.value, best->value) < 0) best = std::move(r);
    }
    return *best;
}

} // namespace

LocalHeightResult local_height(const SubschemePresentation& Y, const ProjectivePoint& x,
                               const Place& v) {
    return min_over_divisors(Y, x, v);
}

LocalHeightResult local_height(const SubschemePresentation& Y, const ProjectivePoint& x,
                               const ExtPlace& w) {
    return min_over_divisors(Y, x, w);
}

namespace {

void collect_primes(const Rational& q, std::set<Int>& into) {
    if (q == 0) return;
    for (const auto& [p, e] : factor(q.get_num())) into.insert(p);
    for (const auto& [p, e] : factor(q.get_den())) into.insert(p);
}

// Primes where a quadratic value might have a nonzero valuation at some
// place above. val_w != 0 with val at both places of one sign forces
// p | norm (numerator or denominator); opposite signs force a denominator
// prime of a or b. Inert and ramified places are read off the norm directly.
void collect_primes(const QuadElement& q, std::set<Int>& into) {
    if (q.is_zero()) return;
    collect_primes(q.norm(), into);
    for (const auto& [p, e] : factor(q.a().get_den())) into.insert(p);
    for (const auto& [p, e] : factor(q.b().get_den())) into.insert(p);
}

} // namespace

std::vector<LocalHeightResult> local_height_support(const SubschemePresentation& Y,
                                                    const ProjectivePoint& x) {
    ProjectivePoint xn = normalize_point(x);
    std::set<Int> primes;
    bool off_subscheme = false;
    if (xn.is_rational()) {
        const auto& rep = xn.rational_coords();
        for (const auto& D : Y.divisors) {
            RationalValues vals = eval_rational(D, rep);
            off_subscheme = off_subscheme || vals.sD != 0;
            collect_primes(vals.sD, primes);
            for (const auto& q : vals.sj) collect_primes(q, primes);
            for (const auto& q : vals.tk) collect_primes(q, primes);
        }
    } else {
        const auto& rep = xn.quad_coords();
        for (const auto& D : Y.divisors) {
            QuadValues vals = eval_quad(D, rep);
            off_subscheme = off_subscheme || !vals.sD->is_zero();
            collect_primes(*vals.sD, primes);
            for (const auto& q : vals.sj) collect_primes(q, primes);
            for (const auto& q : vals.tk) collect_primes(q, primes);
        }
    }
    if (!off_subscheme) {
        std::string who = Y.label ? "\"" + *Y.label + "\"" : "the presented subscheme";
        std::string divisors = Y.divisors.size() == 1 ? "s_D of its only divisor vanishes"
                                                      : "s_D of divisors 0";
        for (size_t i = 1; i < Y.divisors.size(); ++i) divisors += ", " + std::to_string(i);
        if (Y.divisors.size() > 1) divisors += " all vanish";
        throw OnSubscheme("the point lies on " + who + " (" + divisors +
                          " at it); its local height is +infinity at every place");
    }

    std::vector<LocalHeightResult> out;
    auto keep = [&out](LocalHeightResult r) {
        if (!r.value.is_zero()) out.push_back(std::move(r));
    };
    if (xn.is_rational()) {
        keep(local_height(Y, xn, Place::archimedean()));
        for (const auto& p : primes) keep(local_height(Y, xn, Place::finite(p)));
    } else {
        const QuadraticField& F = *xn.quad_field();
        for (const auto& w : places_above(Place::archimedean(), F)) keep(local_height(Y, xn, w));
        for (const auto& p : primes)
            for (const auto& w : places_above(Place::finite(p), F)) keep(local_height(Y, xn, w));
    }
    return out;
}

} // namespace heights
