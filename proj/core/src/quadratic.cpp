#include "heights/quadratic.hpp"

#include "heights/errors.hpp"

#include <algorithm>

namespace heights {

namespace {

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow_int(const Int& p, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

Int powm(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Tonelli-Shanks: square root of a mod odd prime p, assuming legendre = 1.
Int sqrt_mod_p(Int a, const Int& p) {
    a = mod_pos(a, p);
    if (mod_pos(p, Int(4)) == 3) return powm(a, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int m = static_cast<long>(s);
    Int c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        long i = 0;
        while (t2 != 1) { t2 = t2 * t2 % p; ++i; }
        Int b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Newton lift of a square root of d from the given mod-p seed to mod p^k.
Int lift_root_odd(const Int& d, const Int& p, unsigned k, const Int& seed) {
    Int r = seed;
    Int pk = p;
    unsigned prec = 1;
    while (prec < k) {
        prec = std::min(prec * 2, k);
        Int pk2 = pow_int(p, prec);
        Int inv;
        Int two_r = mod_pos(r * 2, pk2);
        if (mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), pk2.get_mpz_t()) == 0)
            throw Error("internal: Newton step not invertible");
        r = mod_pos(r - (r * r - d) * inv, pk2);
        pk = pk2;
    }
    return r;
}

// 2-adic square root for d = 1 mod 8; returns the root that is = seed mod 4
// (seed in {1, 3}), reduced mod 2^k.
Int lift_root_two(const Int& d, unsigned k, const Int& seed) {
    unsigned kk = std::max(k, 3u);
    Int r = 1;
    for (unsigned j = 3; j < kk; ++j) {
        // r^2 = d mod 2^j; the next bit is fixed by adding 2^{j-1} if needed.
        if (mod_pos(r * r - d, pow_int(Int(2), j + 1)) != 0) r += pow_int(Int(2), j - 1);
    }
    Int mod = pow_int(Int(2), k);
    if (mod_pos(r, Int(4)) != mod_pos(seed, Int(4))) r = -r;
    return mod_pos(r, mod);
}

} // namespace

QuadraticField QuadraticField::make(const Int& d) {
    if (d == 0 || d == 1) throw InvalidField("d must not be 0 or 1");
    if (!is_squarefree(d)) throw InvalidField(to_string(d) + " is not squarefree");
    return QuadraticField(d);
}

Int QuadraticField::discriminant() const {
    return mod_pos(d_, Int(4)) == 1 ? d_ : Int(4 * d_);
}

void QuadElement::require_same_field(const QuadElement& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("operands live in " + field_.str() + " and " + o.field_.str());
}

QuadElement QuadElement::operator+(const QuadElement& o) const {
    require_same_field(o);
    return {a_ + o.a_, b_ + o.b_, field_};
}

QuadElement QuadElement::operator-(const QuadElement& o) const {
    require_same_field(o);
    return {a_ - o.a_, b_ - o.b_, field_};
}

QuadElement QuadElement::operator*(const QuadElement& o) const {
    require_same_field(o);
    return {a_ * o.a_ + Rational(field_.d()) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, field_};
}

QuadElement QuadElement::operator/(const QuadElement& o) const {
    require_same_field(o);
    if (o.is_zero()) throw Error("division by zero in " + field_.str());
    Rational n = o.norm();
    QuadElement scaled_conj{o.a_ / n, -o.b_ / n, field_};
    return *this * scaled_conj;
}

std::string QuadElement::str() const {
    if (b_ == 0) return to_string(a_);
    std::string rad = (b_ == 1 ? "" : (b_ == -1 ? "-" : to_string(b_) + "*")) + "sqrt(" +
                      to_string(field_.d()) + ")";
    if (a_ == 0) return rad;
    return to_string(a_) + (b_ > 0 ? "+" : "") + rad;
}

ExtPlace::ExtPlace(Place base, Kind kind, QuadraticField field, Int root_seed)
    : base_(std::move(base)), kind_(kind), field_(std::move(field)), seed_(std::move(root_seed)) {
    bool arch_kind = kind == Kind::RealPlus || kind == Kind::RealMinus || kind == Kind::ComplexPair;
    if (base_.is_archimedean() != arch_kind)
        throw InvalidPlace("place kind inconsistent with base place");
    if ((kind == Kind::RealPlus || kind == Kind::RealMinus) && !field_.is_real())
        throw InvalidPlace("real embeddings need d > 0");
    if (kind == Kind::ComplexPair && field_.is_real())
        throw InvalidPlace("complex pair needs d < 0");
}

int ExtPlace::local_degree() const {
    switch (kind_) {
        case Kind::RealPlus:
        case Kind::RealMinus:
        case Kind::Split:
            return 1;
        default:
            return 2;
    }
}

const Int& ExtPlace::root_seed() const {
    if (kind_ != Kind::Split) throw InvalidPlace("root_seed is defined for split places only");
    return seed_;
}

std::string ExtPlace::str() const {
    switch (kind_) {
        case Kind::RealPlus: return "inf:+";
        case Kind::RealMinus: return "inf:-";
        case Kind::ComplexPair: return "inf:complex";
        case Kind::Split:
            return base_.str() + ":split(root=" + to_string(seed_) + ")";
        case Kind::Inert: return base_.str() + ":inert";
        case Kind::Ramified: return base_.str() + ":ram";
    }
    return "?";
}

std::vector<ExtPlace> places_above(const Place& v, const QuadraticField& F) {
    std::vector<ExtPlace> out;
    if (v.is_archimedean()) {
        if (F.is_real()) {
            out.emplace_back(v, ExtPlace::Kind::RealPlus, F);
            out.emplace_back(v, ExtPlace::Kind::RealMinus, F);
        } else {
            out.emplace_back(v, ExtPlace::Kind::ComplexPair, F);
        }
        return out;
    }
    const Int& p = v.prime();
    if (F.discriminant() % p == 0) {
        out.emplace_back(v, ExtPlace::Kind::Ramified, F);
        return out;
    }
    if (p == 2) {
        // Unramified at 2: d odd, d != 3 mod 4, so d mod 8 is 1 (split) or 5.
        if (mod_pos(F.d(), Int(8)) == 1) {
            out.emplace_back(v, ExtPlace::Kind::Split, F, Int(1));
            out.emplace_back(v, ExtPlace::Kind::Split, F, Int(3));
        } else {
            out.emplace_back(v, ExtPlace::Kind::Inert, F);
        }
        return out;
    }
    if (mpz_legendre(F.d().get_mpz_t(), p.get_mpz_t()) == 1) {
        Int r = sqrt_mod_p(F.d(), p);
        Int r2 = p - r;
        if (r2 < r) std::swap(r, r2);
        out.emplace_back(v, ExtPlace::Kind::Split, F, r);
        out.emplace_back(v, ExtPlace::Kind::Split, F, r2);
    } else {
        out.emplace_back(v, ExtPlace::Kind::Inert, F);
    }
    return out;
}

Int hensel_sqrt(const Int& d, const Int& p, unsigned k) {
    require_prime(p);
    if (k < 1) throw Error("hensel_sqrt needs k >= 1");
    if (p == 2 || d % p == 0)
        throw UnsupportedHensel("hensel_sqrt handles odd p with p not dividing d");
    int leg = mpz_legendre(d.get_mpz_t(), p.get_mpz_t());
    if (leg != 1) throw NotSplit(to_string(d) + " is not a nonzero square mod " + to_string(p));
    Int r = sqrt_mod_p(d, p);
    r = std::min(r, Int(p - r));
    return lift_root_odd(d, p, k, r);
}

Rational ext_valuation(const QuadElement& alpha, const ExtPlace& w) {
    if (alpha.is_zero()) throw InfiniteValuation("valuation of 0 is +infinity");
    if (w.is_archimedean()) throw InvalidPlace("ext_valuation needs a finite place");
    const Int& p = w.base().prime();
    if (w.kind() != ExtPlace::Kind::Split) {
        Rational n = alpha.norm();
        return Rational(valuation(n, p)) / 2;
    }
    // Split: embed alpha into Q_p through the chosen root and read v_p there.
    Int c = lcm(alpha.a().get_den(), alpha.b().get_den());
    Rational as = alpha.a() * Rational(c), bs = alpha.b() * Rational(c);
    Int A = as.get_num(), B = bs.get_num();
    long shift = valuation_int(c, p);
    Int N = A * A - w.field().d() * B * B;
    long vN = valuation_int(N, p);
    unsigned k = static_cast<unsigned>(vN) + 1;
    if (p == 2) k = std::max(k, 3u);
    for (int rounds = 0; rounds < 4; ++rounds) {
        Int pk = pow_int(p, k);
        Int rhat = (p == 2) ? lift_root_two(w.field().d(), k, w.root_seed())
                            : lift_root_odd(w.field().d(), p, k, mod_pos(w.root_seed(), p));
        Int t = mod_pos(A + B * rhat, pk);
        if (t != 0) return Rational(valuation_int(t, p) - shift);
        k *= 2;
    }
    throw Error("internal: split valuation did not stabilize below the norm bound");
}

Magnitude ext_absolute_value(const QuadElement& alpha, const ExtPlace& w) {
    if (alpha.is_zero()) return Magnitude();
    if (!w.is_archimedean())
        return Magnitude::prime_power(w.base().prime(), -ext_valuation(alpha, w));
    switch (w.kind()) {
        case ExtPlace::Kind::RealPlus:
            return Magnitude::abs_quadratic(alpha.a(), alpha.b(), w.field().d());
        case ExtPlace::Kind::RealMinus:
            return Magnitude::abs_quadratic(alpha.a(), -alpha.b(), w.field().d());
        case ExtPlace::Kind::ComplexPair: {
            Rational mod2 = alpha.a() * alpha.a() +
                            Rational(-w.field().d()) * alpha.b() * alpha.b();
            return Magnitude::sqrt_rational(mod2);
        }
        default:
            throw InvalidPlace("unexpected archimedean kind");
    }
}

DegreeFormulaReport check_degree_formula(const QuadraticField& F, const Place& v) {
    DegreeFormulaReport rep{v};
    rep.places = places_above(v, F);
    for (const auto& w : rep.places) rep.degree_sum += w.local_degree();
    rep.ok = rep.degree_sum == 2;
    return rep;
}

NormFormulaReport check_norm_formula(const QuadElement& alpha, const Place& v) {
    if (alpha.is_zero()) throw InfiniteValuation("norm formula needs alpha != 0");
    NormFormulaReport rep{v};
    LogValue lhs, rhs;
    for (const auto& w : places_above(v, alpha.field())) {
        Magnitude aw = ext_absolute_value(alpha, w);
        lhs = lhs + LogValue::log_magnitude(aw, Rational(w.local_degree()));
    }
    Magnitude nv = absolute_value(alpha.norm(), v);
    rhs = LogValue::log_magnitude(nv);
    rep.lhs_log = lhs;
    rep.rhs_log = rhs;
    rep.ok = (lhs == rhs);
    return rep;
}

} // namespace heights
