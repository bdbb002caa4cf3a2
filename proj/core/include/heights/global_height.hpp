#ifndef HEIGHTS_GLOBAL_HEIGHT_HPP
#define HEIGHTS_GLOBAL_HEIGHT_HPP

#include "heights/local_height.hpp"

namespace heights {

// h = (1/[L':Q]) sum_w [L'_w : Q_v] lambda(x, w), taken over the field L'
// of definition of the point. Always finite: the point must avoid Y.
struct HeightValue {
    LogValue value;
    std::optional<QuadraticField> field_used; // empty: summed over M_Q

    std::string str() const { return value.str(); }
};

HeightValue global_height(const SubschemePresentation& Y, const ProjectivePoint& x);

// Height of a point of P^N. Rational points: log of the largest absolute
// coordinate after normalizing to coprime integers; cross-checked internally
// against the global height of a coordinate hyperplane presentation, which
// must agree by the product formula. Quadratic points: the hyperplane route.
HeightValue weil_height(const ProjectivePoint& x);

// delta(x,y,w) = lambda of the diagonal presentation at the pair point; the
// value is +infinity iff x = y (all minors vanish), matching the convention.
LocalHeightResult arithmetic_distance_local(const ProjectivePoint& x, const ProjectivePoint& y,
                                            const Place& v);
LocalHeightResult arithmetic_distance_local(const ProjectivePoint& x, const ProjectivePoint& y,
                                            const ExtPlace& w);

// Global delta; distinct points only.
HeightValue arithmetic_distance_global(const ProjectivePoint& x, const ProjectivePoint& y);

// The pair point (x, y) on P^N x P^N over the smallest common field.
ProjectivePoint pair_point(const ProjectivePoint& x, const ProjectivePoint& y);

// sup over samples of |lambda_Y - lambda_Y'| per place, as floats. Quadratic
// samples record the max over the places above each base place. Places where
// the two heights agree everywhere are absent (profile reads 0 there).
BoundProfile estimate_bound_profile(const SubschemePresentation& Y,
                                    const SubschemePresentation& Yprime,
                                    const std::vector<ProjectivePoint>& samples);

} // namespace heights

#endif
