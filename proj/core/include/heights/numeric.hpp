#ifndef HEIGHTS_NUMERIC_HPP
#define HEIGHTS_NUMERIC_HPP

#include "heights/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace heights {

// GMP supplies arbitrary precision and keeps rationals canonical
// (gcd(num, den) = 1, den > 0), which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

// Deterministic Miller-Rabin, exact for n < 2^64. Larger candidates are
// rejected rather than answered probabilistically.
bool is_prime(const Int& n);

// Throws InvalidPlace unless p is a verified prime.
void require_prime(const Int& p);

// Prime factorization of |n|, n != 0, by trial division plus Brent's rho.
// Cofactors that cannot be certified prime below 2^64 raise NumberTooLarge;
// everything produced at desk scale stays far below that.
std::map<Int, unsigned> factor(Int n);

// v_p(n) for n != 0.
long valuation_int(const Int& n, const Int& p);

// v_p(x) = v_p(num) - v_p(den) for x != 0; throws InfiniteValuation on 0
// and InvalidPlace on composite p.
long valuation(const Rational& x, const Int& p);

// Write |n| = s^2 * f with f squarefree; returns {s, f}. n != 0.
std::pair<Int, Int> squarefree_decompose(const Int& n);

bool is_squarefree(const Int& n);

// Parses "a" or "a/b" with optional leading '-'; used by the workspace
// loader and by round-trips of exact output.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);
std::string to_string(const Int& x);

} // namespace heights

#endif
