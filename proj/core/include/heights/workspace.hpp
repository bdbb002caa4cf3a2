#ifndef HEIGHTS_WORKSPACE_HPP
#define HEIGHTS_WORKSPACE_HPP

#include "heights/presentation.hpp"

#include <map>
#include <string>

namespace heights {

// A named bundle of objects over one shared ambient, loaded from a single
// JSON document:
//
//   {"ambient": {"blocks": [2]},
//    "presentations": {"H": {"divisors": [{"s_D": "x0",
//        "L": {"degree": [1], "sections": ["x0", "x1"]},
//        "M": {"degree": [0], "sections": ["1"]}}]}},
//    "points": {"P": {"field": null, "coords": [["1", "3"]]}},
//    "morphisms": {"sq": {"target_blocks": [2],
//                         "components": [["x0^2", "x1^2"]]}}}
//
// "blocks" lists the coordinate count of each factor, so P^1 is [2] and
// P^2 x P^1 is [3, 2].
//
// Rationals serialize as strings "p/q" (never binary floats). A coordinate
// entry is such a string, or a pair ["a", "b"] meaning a + b*sqrt(d) with the
// field declared once per point as {"d": d}; "field": null means Q.
struct Workspace {
    Ambient ambient;
    std::map<std::string, SubschemePresentation> presentations;
    std::map<std::string, ProjectivePoint> points;
    std::map<std::string, Morphism> morphisms;
};

// Full validation at load: every polynomial is parsed and homogeneity-checked,
// every degree is re-verified, every point is shape-checked. The first
// offender aborts the load, and its JSON path is prefixed to the message.
// Duplicate keys anywhere in the document raise DuplicateName.
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);

} // namespace heights

#endif
