#include "heights/global_height.hpp"

#include <map>

namespace heights {

HeightValue global_height(const SubschemePresentation& Y, const ProjectivePoint& x) {
    auto support = local_height_support(Y, x);
    LogValue h;
    if (x.is_rational()) {
        for (const auto& entry : support) h = h + entry.value;
        return HeightValue{h.canonicalized(), std::nullopt};
    }
    for (const auto& entry : support) {
        const auto& w = std::get<ExtPlace>(entry.place);
        Rational weight(w.local_degree(), 2);
        weight.canonicalize();
        h = h + entry.value * weight;
    }
    return HeightValue{h.canonicalized(), x.quad_field()};
}

namespace {

SubschemePresentation coordinate_hyperplane(const Ambient& amb, int index) {
    return subscheme_presentation({MultihomogPolynomial::variable(amb, 0, index)});
}

} // namespace

HeightValue weil_height(const ProjectivePoint& x) {
    if (x.ambient().num_blocks() != 1)
        throw AmbientMismatch("the Weil height is defined on a single projective space");
    ProjectivePoint xn = normalize_point(x);
    if (xn.is_rational()) {
        const auto& row = xn.rational_coords()[0];
        Magnitude best;
        int first_nonzero = -1;
        for (size_t i = 0; i < row.size(); ++i) {
            Magnitude m = absolute_value(row[i], Place::archimedean());
            if (Magnitude::compare(m, best) > 0) best = m;
            if (first_nonzero < 0 && row[i] != 0) first_nonzero = static_cast<int>(i);
        }
        HeightValue direct{LogValue::log_magnitude(best).canonicalized(), std::nullopt};
        // By the product formula the hyperplane height is coordinate-free and
        // equals the direct formula; a disagreement means a computation bug.
        HeightValue viaH = global_height(coordinate_hyperplane(x.ambient(), first_nonzero), xn);
        if (!(direct.value == viaH.value))
            throw Error("internal: Weil height cross-check failed at " + xn.str() + ": " +
                        direct.value.str() + " vs " + viaH.value.str());
        return direct;
    }
    const auto& row = xn.quad_coords()[0];
    int first = -1, second = -1;
    for (size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) {
            if (first < 0) first = static_cast<int>(i);
            else if (second < 0) second = static_cast<int>(i);
        }
    HeightValue h = global_height(coordinate_hyperplane(x.ambient(), first), xn);
    if (second >= 0) {
        HeightValue h2 = global_height(coordinate_hyperplane(x.ambient(), second), xn);
        if (!(h.value == h2.value))
            throw Error("internal: Weil height cross-check failed at " + xn.str() + ": " +
                        h.value.str() + " vs " + h2.value.str());
    }
    return h;
}

ProjectivePoint pair_point(const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x.ambient() != y.ambient())
        throw AmbientMismatch("pair points need a common ambient");
    if (x.ambient().num_blocks() != 1)
        throw AmbientMismatch("arithmetic distance is defined on a single projective space");
    int N = x.ambient().block_size(0) - 1;
    Ambient amb2 = Ambient::make({N + 1, N + 1});
    if (x.is_rational() && y.is_rational())
        return ProjectivePoint::rational(amb2, {x.rational_coords()[0], y.rational_coords()[0]});
    if (!x.is_rational() && !y.is_rational() && !(*x.quad_field() == *y.quad_field()))
        throw FieldMismatch("points live in " + x.quad_field()->str() + " and " +
                            y.quad_field()->str() + "; a common field is required");
    const QuadraticField& F = x.is_rational() ? *y.quad_field() : *x.quad_field();
    return ProjectivePoint::quadratic(amb2, F, {x.coords_in(F)[0], y.coords_in(F)[0]});
}

LocalHeightResult arithmetic_distance_local(const ProjectivePoint& x, const ProjectivePoint& y,
                                            const Place& v) {
    ProjectivePoint pair = pair_point(x, y);
    return local_height(diagonal_presentation(x.ambient().block_size(0) - 1), pair, v);
}

LocalHeightResult arithmetic_distance_local(const ProjectivePoint& x, const ProjectivePoint& y,
                                            const ExtPlace& w) {
    ProjectivePoint pair = pair_point(x, y);
    return local_height(diagonal_presentation(x.ambient().block_size(0) - 1), pair, w);
}

HeightValue arithmetic_distance_global(const ProjectivePoint& x, const ProjectivePoint& y) {
    ProjectivePoint pair = pair_point(x, y);
    if (points_equal(x, y))
        throw IdenticalPoints("the global arithmetic distance needs two distinct points");
    return global_height(diagonal_presentation(x.ambient().block_size(0) - 1), pair);
}

BoundProfile estimate_bound_profile(const SubschemePresentation& Y,
                                    const SubschemePresentation& Yprime,
                                    const std::vector<ProjectivePoint>& samples) {
    if (Y.ambient() != Yprime.ambient())
        throw AmbientMismatch("comparing presentations on different ambients");
    BoundProfile profile;
    for (const auto& x : samples) {
        // Support is exactly the nonzero places, so the union of the two
        // supports covers every place where the difference can be nonzero.
        std::map<std::string, std::pair<LogValue, LogValue>> by_place;
        std::map<std::string, Place> base_of;
        auto fold = [&](const std::vector<LocalHeightResult>& entries, bool second) {
            for (const auto& e : entries) {
                std::string key = e.place_str();
                base_of.emplace(key, std::visit(
                                         [](const auto& p) {
                                             if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                                                          ExtPlace>)
                                                 return p.base();
                                             else
                                                 return p;
                                         },
                                         e.place));
                auto& slot = by_place[key];
                (second ? slot.second : slot.first) = e.value;
            }
        };
        fold(local_height_support(Y, x), false);
        fold(local_height_support(Yprime, x), true);
        for (const auto& [key, pair] : by_place) {
            LogValue diff = (pair.first - pair.second).abs();
            if (!diff.is_zero()) profile.record(base_of.at(key), to_float(diff));
        }
    }
    return profile;
}

} // namespace heights
