#ifndef HEIGHTS_LOCAL_HEIGHT_HPP
#define HEIGHTS_LOCAL_HEIGHT_HPP

#include "heights/logvalue.hpp"
#include "heights/presentation.hpp"

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace heights {

// lambda = log max_j min_k |s_j / (s_D t_k)|_w, with divisor/section indices
// (i, j, k) witnessing the attained min-max-min. Witnesses are present iff
// the value is finite (ties broken toward the lowest index); the value is
// +infinity exactly when s_D vanishes at the point.
struct LocalHeightResult {
    LogValue value;
    std::variant<Place, ExtPlace> place;
    std::optional<std::array<int, 3>> witnesses;

    std::string place_str() const;
};

// Single-divisor local height. The plain-Place overloads require a rational
// point (a quadratic point needs a choice of extension place); the ExtPlace
// overloads accept rational points (coordinates embed) and quadratic points
// of the matching field. Sections are evaluated on the stored representative;
// the value is representative-independent because every ratio has degree 0.
LocalHeightResult local_height_divisor(const DivisorPresentation& D, const ProjectivePoint& x,
                                       const Place& v);
LocalHeightResult local_height_divisor(const DivisorPresentation& D, const ProjectivePoint& x,
                                       const ExtPlace& w);

// min over the divisors of the presentation; +infinity iff x lies on Y.
LocalHeightResult local_height(const SubschemePresentation& Y, const ProjectivePoint& x,
                               const Place& v);
LocalHeightResult local_height(const SubschemePresentation& Y, const ProjectivePoint& x,
                               const ExtPlace& w);

// The finitely many places where lambda is nonzero, in canonical order
// (archimedean first, then by prime). For a quadratic point the entries are
// keyed by ExtPlace and every place over a contributing prime is listed.
// Completeness: the point is normalized first, candidate primes divide a
// numerator or denominator of some evaluated section value (or of its norm),
// and every candidate is checked by direct recomputation.
std::vector<LocalHeightResult> local_height_support(const SubschemePresentation& Y,
                                                    const ProjectivePoint& x);

} // namespace heights

#endif
