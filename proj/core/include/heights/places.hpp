#ifndef HEIGHTS_PLACES_HPP
#define HEIGHTS_PLACES_HPP

#include "heights/numeric.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace heights {

// A place of Q: the archimedean absolute value or the p-adic one. The proper
// set M_Q is exactly {archimedean} + {finite(p) : p prime} and is hard-coded;
// there is no user-defined place set.
class Place {
public:
    static Place archimedean() { return Place(Int(0)); }
    static Place finite(Int p);

    bool is_archimedean() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    const Int& prime() const;

    // epsilon(v): the exponent with which the triangle inequality degrades,
    // 1 at the archimedean place, 0 at ultrametric ones.
    int epsilon() const { return is_archimedean() ? 1 : 0; }

    std::string str() const;

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
    // Archimedean sorts first, then primes in order.
    friend bool operator<(const Place& a, const Place& b) { return a.p_ < b.p_; }

private:
    explicit Place(Int p) : p_(std::move(p)) {}
    Int p_; // 0 encodes the archimedean place
};

// An exact nonnegative real algebraic number of the form q + r*sqrt(d) with
// d squarefree >= 1 (d = 1 iff the value is rational). This class is closed
// under the products and quotients that occur at any single place: rational
// magnitudes, real-embedding values |a + b sqrt(d)| (fixed d), and pure
// radicals r*sqrt(d) (complex moduli, ramified p^{-k/2}). All comparisons are
// exact sign computations; floating point never participates.
class Magnitude {
public:
    Magnitude() : q_(0), r_(0), d_(1) {}
    explicit Magnitude(const Rational& nonneg);

    // |a + b*sqrt(d)| evaluated under the real embedding sending sqrt(d) to
    // the positive root; the sign is decided exactly and folded in.
    static Magnitude abs_quadratic(const Rational& a, const Rational& b, const Int& d);
    // sqrt(m) for rational m >= 0, rewritten as r*sqrt(f) with f squarefree.
    static Magnitude sqrt_rational(const Rational& m);
    // p^e for half-integral e (denominator of e divides 2).
    static Magnitude prime_power(const Int& p, const Rational& e);

    bool is_zero() const { return q_ == 0 && r_ == 0; }
    bool is_rational() const { return r_ == 0; }
    bool is_pure_radical() const { return q_ == 0 && r_ != 0 && d_ != 1; }
    const Rational& rational_part() const { return q_; }
    const Rational& radical_coeff() const { return r_; }
    const Int& radicand() const { return d_; }

    Magnitude operator*(const Magnitude& o) const;
    Magnitude operator/(const Magnitude& o) const;

    // Exact three-way comparison; throws MixedPlaceComparison for radical
    // classes that cannot be compared inside one quadratic field (these never
    // arise from values at a single place).
    static int compare(const Magnitude& a, const Magnitude& b);
    friend bool operator==(const Magnitude& a, const Magnitude& b) { return compare(a, b) == 0; }
    friend bool operator<(const Magnitude& a, const Magnitude& b) { return compare(a, b) < 0; }

    std::string str() const;

private:
    Rational q_, r_;
    Int d_;
    void normalize();
};

// Exact sign of a + b*sqrt(d) for squarefree d >= 1.
int sign_quadratic(const Rational& a, const Rational& b, const Int& d);

// |x|_v as an exact Magnitude: p^{-v_p(x)} at finite places, |x| at the
// archimedean place, 0 for x = 0.
Magnitude absolute_value(const Rational& x, const Place& v);

// The exact set of primes p with |x|_p != 1 for some x in the list.
std::set<Int> support(const std::vector<Rational>& values);

} // namespace heights

#endif
