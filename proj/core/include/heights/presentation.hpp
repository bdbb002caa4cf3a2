#ifndef HEIGHTS_PRESENTATION_HPP
#define HEIGHTS_PRESENTATION_HPP

#include "heights/morphism.hpp"
#include "heights/point.hpp"
#include "heights/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heights {

// The data (s_D; L, s_0..s_n; M, t_0..t_m) presenting an effective divisor:
// s_D cuts out D, the s_i generate L, the t_j generate M, and
// O(D) = L (x) M^{-1}, which on a multiprojective ambient is pure degree
// bookkeeping: multidegree(s_D) = L_degree - M_degree.
struct DivisorPresentation {
    Ambient ambient;
    MultihomogPolynomial s_D;
    std::vector<int> L_degree;
    std::vector<MultihomogPolynomial> L_sections;
    std::vector<int> M_degree;
    std::vector<MultihomogPolynomial> M_sections;
};

// A closed subscheme presented as an intersection of presented divisors.
struct SubschemePresentation {
    std::vector<DivisorPresentation> divisors;
    std::optional<std::string> label;

    const Ambient& ambient() const { return divisors.front().ambient; }
};

// Validating constructors.
DivisorPresentation make_divisor_presentation(MultihomogPolynomial s_D,
                                              std::vector<int> L_degree,
                                              std::vector<MultihomogPolynomial> L_sections,
                                              std::vector<int> M_degree,
                                              std::vector<MultihomogPolynomial> M_sections);
SubschemePresentation make_subscheme_presentation(std::vector<DivisorPresentation> divisors,
                                                  std::optional<std::string> label = {});

// Divisor of g with L = O(multidegree(g)) and trivial M. Sections default to
// the full monomial basis of the degree; a supplied list is validated.
DivisorPresentation hypersurface_presentation(
    const MultihomogPolynomial& g,
    const std::optional<std::vector<MultihomogPolynomial>>& sections = {});

// One hypersurface presentation per generator; presents the intersection.
SubschemePresentation subscheme_presentation(const std::vector<MultihomogPolynomial>& generators,
                                             std::optional<std::string> label = {});

// (s_D s'_D; L(x)L', {s_i s'_j}; M(x)M', {t_k t'_l}).
DivisorPresentation sum(const DivisorPresentation& D, const DivisorPresentation& E);

// Concatenation: presents Y intersect W.
SubschemePresentation intersect(const SubschemePresentation& Y, const SubschemePresentation& W);
// All pairwise divisor sums: presents Y + W.
SubschemePresentation add_subschemes(const SubschemePresentation& Y,
                                     const SubschemePresentation& W);

// Composition with phi. Well-definedness on the integral source reduces to:
// no composed polynomial vanishes identically.
DivisorPresentation pullback(const Morphism& phi, const DivisorPresentation& D);
SubschemePresentation pullback(const Morphism& phi, const SubschemePresentation& Y);

// The diagonal of P^N x P^N: divisors V(x_i y_j - x_j y_i) for i < j, each
// with the full {x_k y_l} monomial sections and trivial M.
SubschemePresentation diagonal_presentation(int N);

struct ValidationReport {
    bool degrees_ok = true;
    bool proven_fail = false;
    std::vector<std::string> notes;

    bool ok() const { return degrees_ok && !proven_fail; }
    // DEGREE-FAIL beats PROVEN-FAIL beats HEURISTIC-PASS.
    std::string status() const {
        return !degrees_ok ? "DEGREE-FAIL" : (proven_fail ? "PROVEN-FAIL" : "HEURISTIC-PASS");
    }
    std::string str() const;
};

// Exact degree bookkeeping plus a heuristic probe of "the sections generate":
// each section family is evaluated at the trial points (exactly) and at
// pseudo-random points modulo a few primes; a mod-p common zero is confirmed
// by exact re-evaluation before it is reported as PROVEN-FAIL.
ValidationReport validate(const SubschemePresentation& Y,
                          const std::vector<ProjectivePoint>& trial_points = {},
                          std::uint64_t seed = 0);

} // namespace heights

#endif
