#ifndef HEIGHTS_LOGVALUE_HPP
#define HEIGHTS_LOGVALUE_HPP

#include "heights/places.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heights {

// An exact real number of the form
//
//     sum_p c_p * log(p)  +  sum_i w_i * log(m_i)      (or +infinity)
//
// with rational c_p over primes p and exact magnitudes m_i > 0. Local and
// global heights live here; identities from the height machine are verified
// as exact equalities of these values, never through floats.
//
// Equality and sign are decided by an exponentiation certificate: clearing
// denominators turns "value = 0" into an identity of exact products inside at
// most one real quadratic field per squarefree radicand, which is decidable.
class LogValue {
public:
    LogValue() = default;

    static LogValue zero() { return LogValue(); }
    static LogValue infinity();
    static LogValue log_prime(const Int& p, const Rational& coeff);
    // weight * log(m); m must be a nonzero magnitude.
    static LogValue log_magnitude(const Magnitude& m, const Rational& weight = Rational(1));

    bool is_infinite() const { return infinite_; }

    const std::map<Int, Rational>& finite_part() const { return finite_; }
    const std::vector<std::pair<Rational, Magnitude>>& arch_part() const { return arch_; }

    LogValue operator+(const LogValue& o) const;
    LogValue operator-(const LogValue& o) const;
    LogValue operator-() const;
    LogValue operator*(const Rational& scalar) const;

    // Normal form: archimedean logs of rationals and pure radicals are folded
    // into log-p coordinates; at most one irreducible quadratic log term per
    // radicand remains, with a primitive integer representative.
    LogValue canonicalized() const;

    bool is_zero() const;
    friend bool operator==(const LogValue& a, const LogValue& b) { return (a - b).is_zero(); }

    // Exact sign (-1, 0, +1); +infinity compares greater than everything.
    int signum() const;
    static int compare(const LogValue& a, const LogValue& b);

    LogValue abs() const;

    // Canonical rendering such as "log(3)", "1/2*log(2) + log(1+sqrt(2))",
    // "0", "inf". Finite terms sorted by prime, residual quadratic terms last.
    std::string str() const;

    std::string str_uncanonicalized() const;

private:
    std::map<Int, Rational> finite_;
    std::vector<std::pair<Rational, Magnitude>> arch_;
    bool infinite_ = false;

    void add_log_rational(const Rational& weight, const Rational& positive);
};

// Free-function aliases for the coordinatewise operations.
inline LogValue add(const LogValue& a, const LogValue& b) { return a + b; }
inline LogValue scale(const Rational& c, const LogValue& v) { return v * c; }

// sum over all places of log|x|_v, assembled symbolically: coefficient
// -v_p(x) at every support prime plus the archimedean term log|x|. By the
// product formula this canonicalizes to the exact zero; `verify` leans on it
// as an oracle. Zero input raises InfiniteValuation.
LogValue log_abs_sum(const Rational& x);

// min/max over values at one common place: every entry must be +infinity,
// zero, a pure p-part for one fixed p, or purely archimedean. Heterogeneous
// mixtures raise MixedPlaceComparison.
const LogValue& logvalue_min(std::span<const LogValue> values);
const LogValue& logvalue_max(std::span<const LogValue> values);

// Evaluates at >= precision_bits bits of working precision via MPFR
// (correctly rounded primitives), so the accumulated error stays below
// 2^{-precision_bits+4} per term. +infinity maps to HUGE_VAL.
double to_float(const LogValue& v, unsigned precision_bits = 64);

// Decimal rendering at the requested precision (digits sized to the bits).
std::string to_decimal_string(const LogValue& v, unsigned precision_bits);

// An empirical M_K-constant: a nonnegative float per place, finitely
// supported. Places of quadratic fields report under their base place, which
// is exactly the "factors through M_K" requirement.
class BoundProfile {
public:
    double at(const Place& v) const;
    void record(const Place& v, double value); // keeps the max, drops zeros
    const std::map<Place, double>& entries() const { return entries_; }
    bool dominated_by(const BoundProfile& other, double tolerance = 0.0) const;
    std::string str() const;

private:
    std::map<Place, double> entries_;
};

} // namespace heights

#endif
