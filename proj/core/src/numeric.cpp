#include "heights/numeric.hpp"

#include "heights/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace heights {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic witness set for all n < 2^64 (Jaeschke, Sorenson-Webster).
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses)
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : kWitnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool fits_u64(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Int& n) {
    u64 lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 32) {
        Int hi = n >> 32;
        lo = (u64(mpz_get_ui(hi.get_mpz_t())) << 32) | (lo & 0xffffffffull);
    }
    return lo;
}

u64 brent_rho_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y, q = 1, r = 1;
        const u64 m = 128;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_u64(u64 n, std::map<Int, unsigned>& out) {
    while (n > 1) {
        if (miller_rabin_u64(n)) {
            ++out[Int(std::to_string(n))];
            return;
        }
        for (u64 p = 3; p * p <= n && p < 10000; p += 2) {
            while (n % p == 0) {
                ++out[Int(std::to_string(p))];
                n /= p;
            }
            if (n == 1) return;
            if (miller_rabin_u64(n)) {
                ++out[Int(std::to_string(n))];
                return;
            }
        }
        u64 d = brent_rho_u64(n);
        factor_u64(d, out);
        n /= d;
    }
}

// Brent's rho over mpz for inputs past 2^64; bounded so pathological inputs
// fail loudly instead of spinning.
Int brent_rho_mpz(const Int& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dul);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Int c = rng.get_z_range(n - 3) + 1;
        Int x = rng.get_z_range(n - 2) + 2, y = x, d = 1;
        for (long i = 0; i < (1L << 21) && d == 1; ++i) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != 1 && d != n) return d;
    }
    throw NumberTooLarge("failed to split " + to_string(n) + " within the rho iteration budget");
}

void factor_mpz(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (fits_u64(n)) {
        factor_u64(to_u64(n), out);
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 40))
        throw NumberTooLarge("prime factor " + to_string(n) +
                             " exceeds the 2^64 certification bound");
    Int d = brent_rho_mpz(n);
    factor_mpz(d, out);
    factor_mpz(n / d, out);
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (!fits_u64(n))
        throw NumberTooLarge("primality certification restricted to n < 2^64, got " + to_string(n));
    return miller_rabin_u64(to_u64(n));
}

void require_prime(const Int& p) {
    bool ok;
    try {
        ok = is_prime(p);
    } catch (const NumberTooLarge&) {
        throw InvalidPlace("finite place rejects p >= 2^64: " + to_string(p));
    }
    if (!ok) throw InvalidPlace(to_string(p) + " is not prime");
}

std::map<Int, unsigned> factor(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw Error("factor expects a nonzero argument");
    std::map<Int, unsigned> out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++out[Int(std::to_string(p))];
        }
    }
    factor_mpz(n, out);
    return out;
}

long valuation_int(const Int& n, const Int& p) {
    if (n == 0) throw InfiniteValuation("v_p(0) is +infinity");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& x, const Int& p) {
    require_prime(p);
    if (x == 0) throw InfiniteValuation("v_p(0) is +infinity");
    return valuation_int(x.get_num(), p) - valuation_int(x.get_den(), p);
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n == 0) throw Error("squarefree_decompose expects n != 0");
    Int s = 1, f = 1;
    for (const auto& [p, e] : factor(abs(n))) {
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) f *= p;
    }
    return {s, f};
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    return squarefree_decompose(n).first == 1;
}

Rational parse_rational(const std::string& text) {
    auto digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!num.empty() && num[0] == '-') num = num.substr(1);
    if (!digits(num) || !digits(den))
        throw ParseError("bad rational literal '" + text + "'");
    Rational q;
    mpq_set_str(q.get_mpq_t(), text.c_str(), 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

} // namespace heights
