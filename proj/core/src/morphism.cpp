#include "heights/morphism.hpp"

namespace heights {

Morphism Morphism::make(Ambient source, Ambient target,
                        std::vector<std::vector<MultihomogPolynomial>> components) {
    if (components.size() != static_cast<size_t>(target.num_blocks()))
        throw AmbientMismatch("need one component tuple per target factor");
    for (int b = 0; b < target.num_blocks(); ++b) {
        const auto& tuple = components[static_cast<size_t>(b)];
        if (tuple.size() != static_cast<size_t>(target.block_size(b)))
            throw AmbientMismatch("target factor " + std::to_string(b) + " needs " +
                                  std::to_string(target.block_size(b)) + " components");
        for (const auto& P : tuple) {
            if (P.ambient() != source)
                throw AmbientMismatch("component polynomial lives on " + P.ambient().str() +
                                      ", not on the source " + source.str());
            if (P.multidegree() != tuple.front().multidegree())
                throw DegreeMismatch("components of target factor " + std::to_string(b) +
                                     " have mixed multidegrees");
        }
    }
    return Morphism(std::move(source), std::move(target), std::move(components));
}

namespace {

template <class T>
std::vector<std::vector<T>> map_coords(const Morphism& phi,
                                       const std::vector<std::vector<T>>& rep) {
    std::vector<std::vector<T>> out;
    for (int b = 0; b < phi.target().num_blocks(); ++b) {
        std::vector<T> row;
        bool nonzero = false;
        for (const auto& P : phi.components()[static_cast<size_t>(b)]) {
            row.push_back(P.evaluate(rep));
            if constexpr (std::is_same_v<T, Rational>) {
                nonzero = nonzero || row.back() != 0;
            } else {
                nonzero = nonzero || !row.back().is_zero();
            }
        }
        if (!nonzero)
            throw IndeterminacyPoint("every component of target factor " + std::to_string(b) +
                                     " vanishes at the point");
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

ProjectivePoint apply_morphism(const Morphism& phi, const ProjectivePoint& pt) {
    if (pt.ambient() != phi.source())
        throw AmbientMismatch("point lives on " + pt.ambient().str() + ", morphism source is " +
                              phi.source().str());
    if (pt.is_rational())
        return ProjectivePoint::rational(phi.target(), map_coords(phi, pt.rational_coords()));
    return ProjectivePoint::quadratic(phi.target(), *pt.quad_field(),
                                      map_coords(phi, pt.quad_coords()));
}

MultihomogPolynomial substitute(const Morphism& phi, const MultihomogPolynomial& P) {
    if (P.ambient() != phi.target())
        throw AmbientMismatch("polynomial lives on " + P.ambient().str() +
                              ", morphism target is " + phi.target().str());
    const Ambient& src = phi.source();
    const Ambient& tgt = phi.target();
    // deg(P o phi) over source factor s: sum_b deg_b(P) * deg_s(phi_b).
    std::vector<int> deg(static_cast<size_t>(src.num_blocks()), 0);
    for (int b = 0; b < tgt.num_blocks(); ++b) {
        const auto& phid = phi.block_multidegree(b);
        for (size_t s = 0; s < deg.size(); ++s)
            deg[s] += P.multidegree()[static_cast<size_t>(b)] * phid[s];
    }
    auto acc = MultihomogPolynomial::zero(src, deg);
    for (const auto& [e, c] : P.terms()) {
        auto term = MultihomogPolynomial::constant(src, c);
        size_t idx = 0;
        for (int b = 0; b < tgt.num_blocks(); ++b)
            for (int j = 0; j < tgt.block_size(b); ++j, ++idx)
                if (e[idx] > 0)
                    term = term * phi.components()[static_cast<size_t>(b)][static_cast<size_t>(j)]
                                      .pow(e[idx]);
        // A vanishing product (zero component) contributes nothing but must
        // still carry the right multidegree to be addable.
        if (term.is_zero()) continue;
        acc = acc + term;
    }
    return acc;
}

} // namespace heights
