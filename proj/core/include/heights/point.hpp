#ifndef HEIGHTS_POINT_HPP
#define HEIGHTS_POINT_HPP

#include "heights/ambient.hpp"
#include "heights/quadratic.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace heights {

using RationalCoords = std::vector<std::vector<Rational>>;
using QuadCoords = std::vector<std::vector<QuadElement>>;

// A point of a multiprojective space with coordinates in Q or in Q(sqrt(d)).
// Coordinates are stored per factor; each factor needs a nonzero entry.
class ProjectivePoint {
public:
    static ProjectivePoint rational(const Ambient& amb, RationalCoords coords);
    static ProjectivePoint quadratic(const Ambient& amb, const QuadraticField& F,
                                     QuadCoords coords);

    const Ambient& ambient() const { return ambient_; }
    bool is_rational() const { return std::holds_alternative<RationalCoords>(coords_); }
    // The declared coordinate field; empty for rational points.
    const std::optional<QuadraticField>& quad_field() const { return field_; }

    const RationalCoords& rational_coords() const;
    const QuadCoords& quad_coords() const;
    // Coordinates embedded into F (requires a rational point or the same field).
    QuadCoords coords_in(const QuadraticField& F) const;

    std::string str() const;

private:
    ProjectivePoint(Ambient amb, std::optional<QuadraticField> F,
                    std::variant<RationalCoords, QuadCoords> coords)
        : ambient_(std::move(amb)), field_(std::move(F)), coords_(std::move(coords)) {}
    Ambient ambient_;
    std::optional<QuadraticField> field_;
    std::variant<RationalCoords, QuadCoords> coords_;
};

// Canonical representative. Rational points get coprime integer coordinates
// per factor with the first nonzero one positive; quadratic points get
// cleared denominators, the common rational content of all a,b components
// removed, and the first nonzero component positive. Projectively a no-op.
ProjectivePoint normalize_point(const ProjectivePoint& pt);

// Exact projective equality: all per-factor 2x2 minors vanish. Points over
// two genuinely different quadratic fields are not comparable.
bool points_equal(const ProjectivePoint& p, const ProjectivePoint& q);

} // namespace heights

#endif
