#include "heights/places.hpp"

#include "heights/errors.hpp"

namespace heights {

Place Place::finite(Int p) {
    require_prime(p);
    return Place(std::move(p));
}

const Int& Place::prime() const {
    if (is_archimedean()) throw InvalidPlace("archimedean place carries no prime");
    return p_;
}

std::string Place::str() const {
    return is_archimedean() ? "inf" : "p=" + to_string(p_);
}

int sign_quadratic(const Rational& a, const Rational& b, const Int& d) {
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    int sa = sgn(a), sb = sgn(b);
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decides, compare squares.
    int cmp2 = cmp(a * a, b * b * d);
    return cmp2 == 0 ? 0 : (cmp2 > 0 ? sa : sb);
}

Magnitude::Magnitude(const Rational& nonneg) : q_(nonneg), r_(0), d_(1) {
    if (nonneg < 0) throw Error("Magnitude requires a nonnegative rational");
}

void Magnitude::normalize() {
    if (r_ == 0) {
        d_ = 1;
    } else if (d_ == 1) {
        q_ += r_;
        r_ = 0;
    }
    if (sign_quadratic(q_, r_, d_) < 0)
        throw Error("internal: negative magnitude");
}

Magnitude Magnitude::abs_quadratic(const Rational& a, const Rational& b, const Int& d) {
    if (d < 2 || !is_squarefree(d)) throw Error("abs_quadratic needs squarefree d >= 2");
    Magnitude m;
    int s = sign_quadratic(a, b, d);
    m.q_ = s < 0 ? Rational(-a) : a;
    m.r_ = s < 0 ? Rational(-b) : b;
    m.d_ = d;
    m.normalize();
    return m;
}

Magnitude Magnitude::sqrt_rational(const Rational& m) {
    if (m < 0) throw Error("sqrt_rational of a negative rational");
    if (m == 0) return Magnitude();
    // sqrt(u/v) = sqrt(u*v)/v; split u*v into square * squarefree.
    Int uv = m.get_num() * m.get_den();
    auto [s, f] = squarefree_decompose(uv);
    Magnitude out;
    out.q_ = 0;
    out.r_ = Rational(s) / Rational(m.get_den());
    out.d_ = f;
    out.normalize();
    return out;
}

Magnitude Magnitude::prime_power(const Int& p, const Rational& e) {
    Rational twice = e * 2;
    if (twice.get_den() != 1)
        throw Error("prime_power exponent must be half-integral");
    Int whole; // floor(e), remainder contributes sqrt(p)
    unsigned long half = mpz_fdiv_q_ui(whole.get_mpz_t(), twice.get_num().get_mpz_t(), 2);
    Int pw;
    Int aw = abs(whole);
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), mpz_get_ui(aw.get_mpz_t()));
    Magnitude out(whole < 0 ? Rational(1) / Rational(pw) : Rational(pw));
    if (half) out = out * sqrt_rational(Rational(p));
    return out;
}

Magnitude Magnitude::operator*(const Magnitude& o) const {
    if (is_zero() || o.is_zero()) return Magnitude();
    Magnitude out;
    if (d_ == o.d_ || is_rational() || o.is_rational()) {
        const Int& d = d_ == 1 ? o.d_ : d_;
        // (q1 + r1 s)(q2 + r2 s) with s^2 = d; valid when at most one distinct
        // radical is present.
        out.q_ = q_ * o.q_ + r_ * o.r_ * d;
        out.r_ = q_ * o.r_ + r_ * o.q_;
        out.d_ = d;
    } else if (is_pure_radical() && o.is_pure_radical()) {
        // r1 sqrt(d1) * r2 sqrt(d2) = r1 r2 g sqrt(d1 d2 / g^2), g = gcd.
        Int g = gcd(d_, o.d_);
        out.q_ = 0;
        out.r_ = r_ * o.r_ * Rational(g);
        out.d_ = (d_ / g) * (o.d_ / g);
    } else {
        throw Error("magnitude product leaves the quadratic field Q(sqrt(" +
                    to_string(d_) + "))");
    }
    out.normalize();
    return out;
}

Magnitude Magnitude::operator/(const Magnitude& o) const {
    if (o.is_zero()) throw Error("division by zero magnitude");
    Magnitude inv;
    if (o.is_rational()) {
        inv.q_ = 1 / o.q_;
        inv.r_ = 0;
        inv.d_ = 1;
    } else {
        Rational n = o.q_ * o.q_ - o.r_ * o.r_ * Rational(o.d_); // field norm, nonzero
        inv.q_ = o.q_ / n;
        inv.r_ = -o.r_ / n;
        inv.d_ = o.d_;
    }
    inv.normalize();
    return *this * inv;
}

int Magnitude::compare(const Magnitude& a, const Magnitude& b) {
    if (a.d_ == b.d_ || a.is_rational() || b.is_rational()) {
        const Int& d = a.d_ == 1 ? b.d_ : a.d_;
        return sign_quadratic(a.q_ - b.q_, a.r_ - b.r_, d);
    }
    if (a.is_pure_radical() && b.is_pure_radical()) {
        // Both nonnegative: compare squares r^2 d.
        return cmp(a.r_ * a.r_ * Rational(a.d_), b.r_ * b.r_ * Rational(b.d_));
    }
    throw MixedPlaceComparison("cannot compare magnitudes from sqrt(" + to_string(a.d_) +
                               ") and sqrt(" + to_string(b.d_) + ") classes");
}

std::string Magnitude::str() const {
    if (is_rational()) return to_string(q_);
    std::string rad = (r_ == 1 ? "" : (r_ == -1 ? "-" : to_string(r_) + "*")) +
                      "sqrt(" + to_string(d_) + ")";
    if (q_ == 0) return rad;
    if (r_ > 0) return to_string(q_) + "+" + rad;
    return to_string(q_) + rad; // negative coefficient prints its own sign
}

Magnitude absolute_value(const Rational& x, const Place& v) {
    if (x == 0) return Magnitude();
    if (v.is_archimedean()) return Magnitude(abs(x));
    long e = valuation(x, v.prime());
    return Magnitude::prime_power(v.prime(), Rational(-e));
}

std::set<Int> support(const std::vector<Rational>& values) {
    std::set<Int> out;
    for (const Rational& x : values) {
        if (x == 0) throw InfiniteValuation("support of 0 is not finite");
        for (const auto& [p, e] : factor(abs(x.get_num()))) out.insert(p);
        for (const auto& [p, e] : factor(x.get_den())) out.insert(p);
    }
    return out;
}

} // namespace heights
