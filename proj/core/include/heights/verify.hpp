#ifndef HEIGHTS_VERIFY_HPP
#define HEIGHTS_VERIFY_HPP

#include "heights/global_height.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace heights {

// Outcome of one identity or bound check. Exact checks compare canonicalized
// exact values and never consult floating point on the pass path; bound
// checks carry the empirical profile. Failures always carry a replayable
// witness (point, place, both values).
struct CheckReport {
    enum class Status { ExactPass, ExactFail, BoundPass, BoundViolation };

    std::string check_name;
    Status status = Status::ExactPass;
    size_t samples_used = 0;
    std::vector<std::string> witnesses;
    std::optional<BoundProfile> profile;
    std::vector<std::string> notes;

    bool passed() const { return status == Status::ExactPass || status == Status::BoundPass; }
    std::string status_str() const;
    std::string str() const;
};

// Deterministic sampling plan: numerators and denominators of every sampled
// coordinate are bounded by coordinate_height_bound; identical (seed, spec)
// yields identical samples.
struct SampleSpec {
    size_t count = 100;
    std::uint64_t seed = 1;
    long coordinate_height_bound = 50;
    std::optional<QuadraticField> field; // empty: sample over Q
};

// Rejection-samples points accepted by the predicate (always-accept when
// empty); gives up with SampleExhausted after 100x count attempts.
std::vector<ProjectivePoint> sample_points(
    const Ambient& amb, const SampleSpec& spec,
    const std::function<bool(const ProjectivePoint&)>& accept = {});

// lambda_{D+E} = lambda_D + lambda_E at every sampled point off D and E and
// every place in the joint support plus the archimedean one. Exact.
CheckReport check_sum_identity(const DivisorPresentation& D, const DivisorPresentation& E,
                               const SampleSpec& spec);

// lambda_{phi^* D}(x, w) = lambda_D(phi(x), w). Samples at indeterminacy
// points are skipped with a note. Exact.
CheckReport check_functoriality(const Morphism& phi, const DivisorPresentation& D,
                                const SampleSpec& spec);

// lambda_{Y cap W} = min(lambda_Y, lambda_W) and lambda_{Y+W} = lambda_Y +
// lambda_W at sampled points off both loci. Exact.
CheckReport check_basic_properties(const SubschemePresentation& Y,
                                   const SubschemePresentation& W, const SampleSpec& spec);

// Empirical profile of |lambda_Y - lambda_Y'| over samples; BOUND-PASS with
// the profile, BOUND-VIOLATION if a claimed profile is exceeded anywhere.
CheckReport check_independence(const SubschemePresentation& Y, const SubschemePresentation& Yp,
                               const SampleSpec& spec,
                               const std::optional<BoundProfile>& claimed = {});

// On P^N: symmetry of delta (exact); triangle inequality I
//   min{delta(x,y,w), delta(y,z,w)} <= delta(x,z,w) + gamma(w)
// over sampled triples; with a subscheme, triangle inequality II
//   min{lambda_Y(x,w), delta(x,y,w)} <= lambda_Y(y,w) + gamma(w).
// Notes report the empirical minimal archimedean constant found.
CheckReport check_distance_properties(int N, const SampleSpec& spec, const BoundProfile& gamma,
                                      const std::optional<SubschemePresentation>& Y = {});

// h_{Y+W} = h_Y + h_W and h_Y(phi(x)) = h_{phi^* Y}(x), exact HeightValue
// equalities over samples.
CheckReport check_global_properties(const SubschemePresentation& Y,
                                    const SubschemePresentation& W, const Morphism& phi,
                                    const SampleSpec& spec);

// The Q-summed and Q(sqrt(d))-summed global heights of a rational point
// agree after canonicalization. Exact.
CheckReport check_field_independence(const SubschemePresentation& Y, const ProjectivePoint& x,
                                     const Int& d);

// Named standard instances of the checks above; "all" runs every suite.
// Deterministic given spec.seed; unknown names raise UnknownSuite.
std::vector<CheckReport> run_suite(const std::vector<std::string>& names, const SampleSpec& spec);
std::vector<std::string> suite_names();

} // namespace heights

#endif
