#ifndef HEIGHTS_MORPHISM_HPP
#define HEIGHTS_MORPHISM_HPP

#include "heights/point.hpp"
#include "heights/polynomial.hpp"

#include <vector>

namespace heights {

// A tuple-of-polynomials map between multiprojective spaces: one polynomial
// per target coordinate, grouped by target factor, all polynomials of one
// target factor sharing a multidegree on the source. Totality is not decided
// symbolically; evaluation raises IndeterminacyPoint where every component of
// some factor vanishes.
class Morphism {
public:
    static Morphism make(Ambient source, Ambient target,
                         std::vector<std::vector<MultihomogPolynomial>> components);

    const Ambient& source() const { return source_; }
    const Ambient& target() const { return target_; }
    const std::vector<std::vector<MultihomogPolynomial>>& components() const {
        return components_;
    }
    // Source multidegree shared by the components of target factor b.
    const std::vector<int>& block_multidegree(int b) const {
        return components_.at(static_cast<size_t>(b)).front().multidegree();
    }

private:
    Morphism(Ambient s, Ambient t, std::vector<std::vector<MultihomogPolynomial>> c)
        : source_(std::move(s)), target_(std::move(t)), components_(std::move(c)) {}
    Ambient source_, target_;
    std::vector<std::vector<MultihomogPolynomial>> components_;
};

ProjectivePoint apply_morphism(const Morphism& phi, const ProjectivePoint& pt);

// P composed with phi: substitute phi's component polynomials for the target
// coordinates of P. Degrees transform by phi's per-factor multidegrees.
MultihomogPolynomial substitute(const Morphism& phi, const MultihomogPolynomial& P);

} // namespace heights

#endif
